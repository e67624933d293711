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

#ifndef COVSKETCH_INSTANCE_H_
#define COVSKETCH_INSTANCE_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace covsketch {

using SetId = int32_t;
using ElementId = int32_t;

struct Edge {
  SetId set;
  ElementId element;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A coverage instance: a family of `num_sets` subsets over `num_elements`
// elements, stored as a bipartite graph in two compressed adjacency arrays.
// Both adjacency directions are sorted by id, so `sets_of(e)` lists the sets
// containing `e` in increasing id order.
//
// Instances are immutable once built and safe to share between threads.
class CoverageInstance {
 public:
  CoverageInstance() = default;

  // Builds an instance from an arbitrary edge list. Duplicate edges are
  // dropped. Fails if an id falls outside [0, num_sets) x [0, num_elements).
  static absl::StatusOr<CoverageInstance> FromEdges(int32_t num_sets,
                                                    int32_t num_elements,
                                                    std::vector<Edge> edges);

  int32_t num_sets() const { return num_sets_; }
  int32_t num_elements() const { return num_elements_; }
  int64_t num_edges() const { return static_cast<int64_t>(element_sets_.size()); }

  std::span<const SetId> sets_of(ElementId element) const {
    return {element_sets_.data() + element_offsets_[element],
            element_sets_.data() + element_offsets_[element + 1]};
  }
  std::span<const ElementId> elements_of(SetId set) const {
    return {set_elements_.data() + set_offsets_[set],
            set_elements_.data() + set_offsets_[set + 1]};
  }
  int64_t degree(ElementId element) const {
    return element_offsets_[element + 1] - element_offsets_[element];
  }
  int64_t set_size(SetId set) const {
    return set_offsets_[set + 1] - set_offsets_[set];
  }
  // Position of the first edge of `element` in element-major edge order.
  int64_t element_offset(ElementId element) const {
    return element_offsets_[element];
  }

  // Elements that appear in no set. Loaders permit them (ids are positional),
  // generators never produce them.
  int32_t CountIsolatedElements() const;

  // All edges, ordered by (set, element).
  std::vector<Edge> Edges() const;

  friend bool operator==(const CoverageInstance&,
                         const CoverageInstance&) = default;

 private:
  int32_t num_sets_ = 0;
  int32_t num_elements_ = 0;
  std::vector<int64_t> element_offsets_ = {0};
  std::vector<SetId> element_sets_;
  std::vector<int64_t> set_offsets_ = {0};
  std::vector<ElementId> set_elements_;
};

// Element weights are integers in [1, max_weight].
struct WeightedInstance {
  CoverageInstance base;
  std::vector<int32_t> weights;
  int32_t max_weight = 1;
};

// Per-edge fractions stored as integer numerators over `resolution`. The
// numerators are aligned with the element-major adjacency of the base
// instance: `units[offset(e) + i]` belongs to the edge (sets_of(e)[i], e).
struct EdgeFractions {
  std::vector<int32_t> units;
  int32_t resolution = 1;
};

// Set S covers the fraction alpha(S, v) of element v; a family covers the
// maximum of its members' fractions.
struct FractionalInstance {
  CoverageInstance base;
  EdgeFractions alpha;
};

// Set S covers element v independently with probability alpha(S, v).
struct ProbabilisticInstance {
  CoverageInstance base;
  EdgeFractions alpha;
};

absl::StatusOr<WeightedInstance> MakeWeightedInstance(
    CoverageInstance base, std::vector<int32_t> weights, int32_t max_weight);

// `units_by_edge` is indexed like EdgeFractions::units.
absl::StatusOr<FractionalInstance> MakeFractionalInstance(
    CoverageInstance base, std::vector<int32_t> units_by_edge,
    int32_t resolution);
absl::StatusOr<ProbabilisticInstance> MakeProbabilisticInstance(
    CoverageInstance base, std::vector<int32_t> units_by_edge,
    int32_t resolution);

// Numerators of the edges incident to `element`, aligned with sets_of().
std::span<const int32_t> EdgeUnits(const CoverageInstance& base,
                                   const EdgeFractions& alpha,
                                   ElementId element);

struct InstanceStats {
  int32_t num_sets = 0;
  int32_t num_elements = 0;
  int64_t num_edges = 0;
  int64_t max_element_degree = 0;
  int64_t max_set_size = 0;
  // histogram[d] is the number of elements (resp. sets) of degree (size) d.
  std::vector<int64_t> element_degree_histogram;
  std::vector<int64_t> set_size_histogram;
};

InstanceStats ComputeStats(const CoverageInstance& instance);

}  // namespace covsketch

#endif  // COVSKETCH_INSTANCE_H_
