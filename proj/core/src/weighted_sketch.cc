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

// Implicit expansions of weighted, fractional and probabilistic instances.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "covsketch/sketch.h"
#include "numeric.h"
#include "sketch_builder.h"

namespace covsketch {
namespace {

using internal::Unit;

class WeightedSource {
 public:
  WeightedSource(const WeightedInstance& instance, const HashSource& source)
      : instance_(instance), source_(source) {
    for (const int32_t w : instance.weights) num_units_ += w;
  }

  int32_t num_sets() const { return instance_.base.num_sets(); }
  int64_t num_elements() const { return instance_.base.num_elements(); }
  int64_t num_units() const { return num_units_; }

  template <typename F>
  void ForEachUnit(F&& f) const {
    for (ElementId v = 0; v < instance_.base.num_elements(); ++v) {
      for (int32_t j = 0; j < instance_.weights[v]; ++j) {
        f(Unit{v, j}, source_.CopyHash(v, j));
      }
    }
  }
  int64_t Degree(Unit unit) const {
    return instance_.base.degree(unit.element);
  }
  void AppendEdges(Unit unit, int64_t cap, std::vector<SetId>* out) const {
    const auto sets = instance_.base.sets_of(unit.element);
    const int64_t take = std::min<int64_t>(cap, sets.size());
    out->insert(out->end(), sets.begin(), sets.begin() + take);
  }

 private:
  const WeightedInstance& instance_;
  const HashSource& source_;
  int64_t num_units_ = 0;
};

// Copy j of v is linked to S iff j < units(S, v). Copies at or beyond the
// largest numerator of v have no edges and are never enumerated.
class FractionalSource {
 public:
  FractionalSource(const FractionalInstance& instance, const HashSource& source)
      : instance_(instance), source_(source) {
    const int32_t m = instance.base.num_elements();
    max_units_.resize(m, 0);
    for (ElementId v = 0; v < m; ++v) {
      for (const int32_t u : Units(v)) {
        max_units_[v] = std::max(max_units_[v], u);
      }
      num_units_ += max_units_[v];
    }
  }

  int32_t num_sets() const { return instance_.base.num_sets(); }
  int64_t num_elements() const { return instance_.base.num_elements(); }
  int64_t num_units() const { return num_units_; }

  template <typename F>
  void ForEachUnit(F&& f) const {
    for (ElementId v = 0; v < instance_.base.num_elements(); ++v) {
      for (int32_t j = 0; j < max_units_[v]; ++j) {
        f(Unit{v, j}, source_.CopyHash(v, j));
      }
    }
  }
  int64_t Degree(Unit unit) const {
    int64_t degree = 0;
    for (const int32_t u : Units(unit.element)) degree += unit.copy < u;
    return degree;
  }
  void AppendEdges(Unit unit, int64_t cap, std::vector<SetId>* out) const {
    const auto sets = instance_.base.sets_of(unit.element);
    const auto units = Units(unit.element);
    int64_t taken = 0;
    for (size_t i = 0; i < sets.size() && taken < cap; ++i) {
      if (unit.copy < units[i]) {
        out->push_back(sets[i]);
        ++taken;
      }
    }
  }

 private:
  std::span<const int32_t> Units(ElementId v) const {
    return EdgeUnits(instance_.base, instance_.alpha, v);
  }

  const FractionalInstance& instance_;
  const HashSource& source_;
  std::vector<int32_t> max_units_;
  int64_t num_units_ = 0;
};

bool CoinLinks(const HashSource& source, ElementId v, int64_t copy, SetId set,
               int32_t units, int32_t resolution) {
  return source.EdgeCoin(v, copy, set) <
         static_cast<double>(units) / static_cast<double>(resolution);
}

// zeta copies per element; copy j is linked to S by an independent coin of
// bias alpha(S, v).
class ProbabilisticSource {
 public:
  ProbabilisticSource(const ProbabilisticInstance& instance, int64_t copies,
                      const HashSource& source)
      : instance_(instance), copies_(copies), source_(source) {}

  int32_t num_sets() const { return instance_.base.num_sets(); }
  int64_t num_elements() const { return instance_.base.num_elements(); }
  int64_t num_units() const {
    return copies_ * instance_.base.num_elements();
  }

  template <typename F>
  void ForEachUnit(F&& f) const {
    for (ElementId v = 0; v < instance_.base.num_elements(); ++v) {
      if (instance_.base.degree(v) == 0) continue;
      for (int64_t j = 0; j < copies_; ++j) {
        f(Unit{v, static_cast<int32_t>(j)}, source_.CopyHash(v, j));
      }
    }
  }
  int64_t Degree(Unit unit) const {
    const auto sets = instance_.base.sets_of(unit.element);
    const auto units = Units(unit.element);
    int64_t degree = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
      degree += Links(unit, sets[i], units[i]);
    }
    return degree;
  }
  void AppendEdges(Unit unit, int64_t cap, std::vector<SetId>* out) const {
    const auto sets = instance_.base.sets_of(unit.element);
    const auto units = Units(unit.element);
    int64_t taken = 0;
    for (size_t i = 0; i < sets.size() && taken < cap; ++i) {
      if (Links(unit, sets[i], units[i])) {
        out->push_back(sets[i]);
        ++taken;
      }
    }
  }

 private:
  std::span<const int32_t> Units(ElementId v) const {
    return EdgeUnits(instance_.base, instance_.alpha, v);
  }
  bool Links(Unit unit, SetId set, int32_t units) const {
    return CoinLinks(source_, unit.element, unit.copy, set, units,
                     instance_.alpha.resolution);
  }

  const ProbabilisticInstance& instance_;
  int64_t copies_;
  const HashSource& source_;
};

absl::Status CheckExpansionBudget(const ProbabilisticInstance& instance,
                                  int64_t copies, int64_t budget) {
  const double size = static_cast<double>(copies) *
                      static_cast<double>(instance.base.num_edges());
  if (size > static_cast<double>(budget) ||
      copies > std::numeric_limits<int32_t>::max()) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "probabilistic expansion needs %d copies per element (%.3g edge "
        "coins), above the budget of %d; use a larger eps",
        copies, size, budget));
  }
  return absl::OkStatus();
}

template <typename Source>
absl::StatusOr<Expansion> Materialize(const Source& source) {
  Expansion expansion;
  std::vector<Edge> edges;
  std::vector<SetId> sets;
  source.ForEachUnit([&](Unit unit, double /*hash*/) {
    sets.clear();
    source.AppendEdges(unit, kUnboundedDegree, &sets);
    if (sets.empty()) return;
    const auto id = static_cast<ElementId>(expansion.origins.size());
    for (const SetId s : sets) edges.push_back({s, id});
    expansion.origins.push_back(unit.element);
    expansion.copies.push_back(unit.copy);
  });
  if (expansion.origins.size() >
      static_cast<size_t>(std::numeric_limits<int32_t>::max())) {
    return absl::ResourceExhaustedError("expansion too large");
  }
  auto graph = CoverageInstance::FromEdges(
      source.num_sets(), static_cast<int32_t>(expansion.origins.size()),
      std::move(edges));
  if (!graph.ok()) return graph.status();
  expansion.instance = *std::move(graph);
  return expansion;
}

}  // namespace

absl::StatusOr<Sketch> SketchWeighted(const WeightedInstance& instance,
                                      const SketchParams& params,
                                      const HashSource& source) {
  return internal::BuildFromSource(WeightedSource(instance, source), params,
                                   source.seed());
}

absl::StatusOr<Sketch> SketchFractional(const FractionalInstance& instance,
                                        const SketchParams& params,
                                        const HashSource& source) {
  auto sketch = internal::BuildFromSource(FractionalSource(instance, source),
                                          params, source.seed());
  if (sketch.ok()) sketch->expansion_factor = instance.alpha.resolution;
  return sketch;
}

int64_t ProbabilisticCopies(int32_t num_sets, int32_t resolution, double eps) {
  const double n = static_cast<double>(num_sets);
  return internal::CeilToInt64(12.0 * (n + 1.0 + std::log(std::max(1.0, n))) *
                               resolution / (eps * eps));
}

absl::StatusOr<Sketch> SketchProbabilistic(
    const ProbabilisticInstance& instance, double eps,
    const SketchParams& params, const HashSource& source,
    int64_t expansion_budget) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps = %g must lie in (0, 1]", eps));
  }
  const int64_t copies = ProbabilisticCopies(
      instance.base.num_sets(), instance.alpha.resolution, eps);
  if (absl::Status status =
          CheckExpansionBudget(instance, copies, expansion_budget);
      !status.ok()) {
    return status;
  }
  auto sketch = internal::BuildFromSource(
      ProbabilisticSource(instance, copies, source), params, source.seed());
  if (sketch.ok()) sketch->expansion_factor = copies;
  return sketch;
}

absl::StatusOr<Expansion> ExpandWeighted(const WeightedInstance& instance) {
  const HashSource unused(0);
  return Materialize(WeightedSource(instance, unused));
}

absl::StatusOr<Expansion> ExpandFractional(const FractionalInstance& instance) {
  const HashSource unused(0);
  return Materialize(FractionalSource(instance, unused));
}

absl::StatusOr<Expansion> ExpandProbabilistic(
    const ProbabilisticInstance& instance, double eps,
    const HashSource& source, int64_t expansion_budget) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps = %g must lie in (0, 1]", eps));
  }
  const int64_t copies = ProbabilisticCopies(
      instance.base.num_sets(), instance.alpha.resolution, eps);
  if (absl::Status status =
          CheckExpansionBudget(instance, copies, expansion_budget);
      !status.ok()) {
    return status;
  }
  return Materialize(ProbabilisticSource(instance, copies, source));
}

}  // namespace covsketch
