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

// Shared sketch construction over a "unit source": anything that can list
// hashed units (elements or element copies) and produce their edges on
// demand. A source provides
//
//   int32_t num_sets() const;
//   int64_t num_elements() const;   // of the original instance
//   int64_t num_units() const;      // size of the (implicit) ground set
//   template <typename F> void ForEachUnit(F&& f) const;
//       // f(Unit, double hash) for every unit, in (element, copy) order
//   int64_t Degree(Unit) const;
//   void AppendEdges(Unit, int64_t cap, std::vector<SetId>* out) const;
//       // the min(cap, degree) smallest-id sets linked to the unit

#ifndef COVSKETCH_SRC_SKETCH_BUILDER_H_
#define COVSKETCH_SRC_SKETCH_BUILDER_H_

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "covsketch/sketch.h"

namespace covsketch::internal {

struct Unit {
  ElementId element;
  int32_t copy;
};

// Assembles the sketch graph from units in selection order.
template <typename Source>
absl::StatusOr<Sketch> AssembleSketch(const Source& source,
                                      const SketchParams& params,
                                      const std::vector<Unit>& selected,
                                      uint64_t hash_seed) {
  const int64_t cap = params.DegreeCap();
  std::vector<Edge> edges;
  std::vector<SetId> sets;
  Sketch sketch;
  sketch.hash_seed = hash_seed;
  sketch.params = params;
  sketch.original_num_elements = source.num_elements();
  sketch.selected_elements.reserve(selected.size());
  sketch.selected_copies.reserve(selected.size());
  for (size_t i = 0; i < selected.size(); ++i) {
    sets.clear();
    source.AppendEdges(selected[i], cap, &sets);
    for (const SetId s : sets) {
      edges.push_back({s, static_cast<ElementId>(i)});
    }
    sketch.selected_elements.push_back(selected[i].element);
    sketch.selected_copies.push_back(selected[i].copy);
  }
  auto graph = CoverageInstance::FromEdges(
      source.num_sets(), static_cast<int32_t>(selected.size()),
      std::move(edges));
  if (!graph.ok()) return graph.status();
  sketch.graph = *std::move(graph);
  return sketch;
}

// Units with hash < rho and at least one edge, in (element, copy) order.
template <typename Source>
std::vector<Unit> SelectPractical(const Source& source, double rho) {
  std::vector<Unit> selected;
  source.ForEachUnit([&](Unit unit, double hash) {
    if (hash < rho && source.Degree(unit) > 0) selected.push_back(unit);
  });
  return selected;
}

// Units in increasing (hash, element, copy) order until the capped edge mass
// reaches the budget. Candidates are gathered below a hash threshold that
// starts at twice the expected requirement and doubles on shortfall.
template <typename Source>
std::vector<Unit> SelectTheory(const Source& source, const SketchParams& params,
                               bool* exhausted) {
  struct Candidate {
    double hash;
    Unit unit;
  };
  const int64_t budget = params.edge_budget;
  const int64_t cap = params.degree_cap;
  const int64_t num_units = std::max<int64_t>(1, source.num_units());
  double threshold =
      std::min(1.0, 2.0 * static_cast<double>(budget) / num_units);
  std::vector<Candidate> candidates;
  std::vector<Unit> selected;
  while (true) {
    candidates.clear();
    const bool everything = threshold >= 1.0;
    source.ForEachUnit([&](Unit unit, double hash) {
      if (everything || hash < threshold) candidates.push_back({hash, unit});
    });
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                return std::tie(a.hash, a.unit.element, a.unit.copy) <
                       std::tie(b.hash, b.unit.element, b.unit.copy);
              });
    selected.clear();
    int64_t mass = 0;
    for (const Candidate& candidate : candidates) {
      if (mass >= budget) break;
      const int64_t degree = source.Degree(candidate.unit);
      if (degree == 0) continue;
      mass += std::min(cap, degree);
      selected.push_back(candidate.unit);
    }
    if (mass >= budget) {
      *exhausted = false;
      return selected;
    }
    if (everything) {
      *exhausted = true;
      return selected;
    }
    threshold = std::min(1.0, 2.0 * threshold);
  }
}

template <typename Source>
absl::StatusOr<Sketch> BuildFromSource(const Source& source,
                                       const SketchParams& params,
                                       uint64_t hash_seed) {
  if (absl::Status status = ValidateSketchParams(params); !status.ok()) {
    return status;
  }
  bool exhausted = false;
  const std::vector<Unit> selected =
      params.mode == SketchMode::kTheory
          ? SelectTheory(source, params, &exhausted)
          : SelectPractical(source, params.rho);
  auto sketch = AssembleSketch(source, params, selected, hash_seed);
  if (sketch.ok()) sketch->exhausted = exhausted;
  return sketch;
}

}  // namespace covsketch::internal

#endif  // COVSKETCH_SRC_SKETCH_BUILDER_H_
