// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covsketch/sketch.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "numeric.h"
#include "sketch_builder.h"

namespace covsketch {
namespace {

using internal::Unit;

// A plain instance as a unit source, hashed either by a HashSource or by an
// explicit per-element table.
class PlainSource {
 public:
  PlainSource(const CoverageInstance& instance, const HashSource* source,
              std::span<const double> hashes)
      : instance_(instance), source_(source), hashes_(hashes) {}

  int32_t num_sets() const { return instance_.num_sets(); }
  int64_t num_elements() const { return instance_.num_elements(); }
  int64_t num_units() const { return instance_.num_elements(); }

  template <typename F>
  void ForEachUnit(F&& f) const {
    for (ElementId e = 0; e < instance_.num_elements(); ++e) {
      f(Unit{e, 0}, source_ != nullptr ? source_->ElementHash(e) : hashes_[e]);
    }
  }
  int64_t Degree(Unit unit) const { return instance_.degree(unit.element); }
  void AppendEdges(Unit unit, int64_t cap, std::vector<SetId>* out) const {
    const auto sets = instance_.sets_of(unit.element);
    const int64_t take = std::min<int64_t>(cap, sets.size());
    out->insert(out->end(), sets.begin(), sets.begin() + take);
  }

 private:
  const CoverageInstance& instance_;
  const HashSource* source_;
  std::span<const double> hashes_;
};

}  // namespace

double UnclampedEdgeBudget(int64_t num_sets, int64_t num_elements, double eps,
                           double delta_dprime) {
  const double n = static_cast<double>(num_sets);
  const double guesses = internal::CeilTolerant(
      std::log(static_cast<double>(num_elements)) / std::log(1.0 / (1.0 - eps)));
  const double delta = delta_dprime * std::log(std::max(2.0, guesses));
  return 24.0 * n * delta * std::log(1.0 / eps) * std::log(n) /
         ((1.0 - eps) * eps * eps * eps);
}

absl::StatusOr<SketchParams> TheoryParams(int64_t num_sets,
                                          int64_t num_elements,
                                          int64_t num_edges, int32_t k,
                                          double eps, double delta_dprime) {
  if (k < 1 || k > num_sets) {
    return absl::InvalidArgumentError(
        absl::StrFormat("k = %d must lie in [1, n = %d]", k, num_sets));
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps = %g must lie in (0, 1) in theory mode", eps));
  }
  if (!(delta_dprime > 0.0 && delta_dprime <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "delta'' = %g must lie in (0, 1]", delta_dprime));
  }
  if (num_elements < 2) {
    return absl::InvalidArgumentError("theory mode needs m >= 2");
  }
  SketchParams params;
  params.mode = SketchMode::kTheory;
  params.k = k;
  params.eps = eps;
  params.delta_dprime = delta_dprime;
  const double guesses = internal::CeilTolerant(
      std::log(static_cast<double>(num_elements)) / std::log(1.0 / (1.0 - eps)));
  params.delta = delta_dprime * std::log(std::max(2.0, guesses));
  params.degree_cap = std::max<int64_t>(
      1, internal::CeilToInt64(static_cast<double>(num_sets) *
                               std::log(1.0 / eps) / (eps * k)));
  const int64_t budget = internal::CeilToInt64(
      UnclampedEdgeBudget(num_sets, num_elements, eps, delta_dprime));
  params.edge_budget =
      std::clamp<int64_t>(budget, 1, std::max<int64_t>(1, num_edges));
  return params;
}

absl::Status ValidateSketchParams(const SketchParams& params) {
  if (params.mode == SketchMode::kPractical) {
    if (!(params.rho > 0.0 && params.rho <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("rho = %g must lie in (0, 1]", params.rho));
    }
    if (params.sigma < 1) {
      return absl::InvalidArgumentError(
          absl::StrFormat("sigma = %d must be >= 1", params.sigma));
    }
    return absl::OkStatus();
  }
  if (params.k < 1 || !(params.eps > 0.0 && params.eps < 1.0)) {
    return absl::InvalidArgumentError("theory params need k >= 1, 0 < eps < 1");
  }
  if (params.edge_budget < 1 || params.degree_cap < 1) {
    return absl::InvalidArgumentError(
        "theory params need edge_budget >= 1 and degree_cap >= 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<Sketch> BuildSketch(const CoverageInstance& instance,
                                   const SketchParams& params,
                                   const HashSource& source) {
  return internal::BuildFromSource(PlainSource(instance, &source, {}), params,
                                   source.seed());
}

absl::StatusOr<Sketch> BuildSketchWithHashes(const CoverageInstance& instance,
                                             const SketchParams& params,
                                             std::span<const double> hashes,
                                             uint64_t hash_seed) {
  if (static_cast<int64_t>(hashes.size()) != instance.num_elements()) {
    return absl::InvalidArgumentError("one hash per element required");
  }
  return internal::BuildFromSource(PlainSource(instance, nullptr, hashes),
                                   params, hash_seed);
}

absl::StatusOr<Sketch> BuildSketchInOrder(const CoverageInstance& instance,
                                          const SketchParams& params,
                                          std::span<const ElementId> order,
                                          uint64_t hash_seed) {
  if (params.mode != SketchMode::kTheory) {
    return absl::InvalidArgumentError("ordered construction is theory-mode");
  }
  if (absl::Status status = ValidateSketchParams(params); !status.ok()) {
    return status;
  }
  std::vector<bool> used(instance.num_elements(), false);
  std::vector<Unit> selected;
  int64_t mass = 0;
  for (const ElementId e : order) {
    if (mass >= params.edge_budget) break;
    if (e < 0 || e >= instance.num_elements() || used[e]) {
      return absl::InvalidArgumentError(
          absl::StrFormat("order entry %d is out of range or repeated", e));
    }
    used[e] = true;
    const int64_t degree = instance.degree(e);
    if (degree == 0) continue;
    mass += std::min(params.degree_cap, degree);
    selected.push_back({e, 0});
  }
  PlainSource plain(instance, nullptr, {});
  auto sketch = internal::AssembleSketch(plain, params, selected, hash_seed);
  if (sketch.ok()) sketch->exhausted = mass < params.edge_budget;
  return sketch;
}

absl::StatusOr<LazySketch> BuildSketchLazy(int32_t num_sets,
                                           int32_t num_elements,
                                           const EdgeOracle& oracle,
                                           const SketchParams& params,
                                           const HashSource& source) {
  if (params.mode != SketchMode::kTheory) {
    return absl::InvalidArgumentError("lazy construction is theory-mode");
  }
  if (absl::Status status = ValidateSketchParams(params); !status.ok()) {
    return status;
  }
  LazySketch result;
  Sketch& sketch = result.sketch;
  sketch.hash_seed = source.seed();
  sketch.params = params;
  sketch.original_num_elements = num_elements;

  // Sparse Fisher-Yates: positions that were swapped away from the identity
  // are remembered in `moved`, everything else is implicit.
  std::mt19937_64 rng(source.seed());
  absl::flat_hash_map<int32_t, int32_t> moved;
  auto at = [&moved](int32_t i) {
    const auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };

  std::vector<Edge> edges;
  int64_t mass = 0;
  for (int32_t drawn = 0; drawn < num_elements && mass < params.edge_budget;
       ++drawn) {
    std::uniform_int_distribution<int32_t> pick(drawn, num_elements - 1);
    const int32_t j = pick(rng);
    const ElementId element = at(j);
    moved[j] = at(drawn);
    moved.erase(drawn);

    const int64_t degree = oracle.degree(element);
    ++result.oracle_lookups;
    if (degree < 0 || degree > num_sets) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "oracle degree %d of element %d is out of range", degree, element));
    }
    if (degree == 0) continue;
    const int64_t take = std::min(params.degree_cap, degree);
    const ElementId local =
        static_cast<ElementId>(sketch.selected_elements.size());
    for (int64_t i = 0; i < take; ++i) {
      const SetId set = oracle.edge(element, i);
      ++result.oracle_lookups;
      if (set < 0 || set >= num_sets) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "oracle returned set %d for element %d, outside [0, %d)", set,
            element, num_sets));
      }
      edges.push_back({set, local});
    }
    mass += take;
    sketch.selected_elements.push_back(element);
    sketch.selected_copies.push_back(0);
  }
  sketch.exhausted = mass < params.edge_budget;
  auto graph = CoverageInstance::FromEdges(
      num_sets, static_cast<int32_t>(sketch.selected_elements.size()),
      std::move(edges));
  if (!graph.ok()) return graph.status();
  sketch.graph = *std::move(graph);
  return result;
}

}  // namespace covsketch
