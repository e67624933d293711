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

#include "covsketch/instance.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace covsketch {

absl::StatusOr<CoverageInstance> CoverageInstance::FromEdges(
    int32_t num_sets, int32_t num_elements, std::vector<Edge> edges) {
  if (num_sets < 0 || num_elements < 0) {
    return absl::InvalidArgumentError("negative instance dimensions");
  }
  for (const Edge& edge : edges) {
    if (edge.set < 0 || edge.set >= num_sets || edge.element < 0 ||
        edge.element >= num_elements) {
      return absl::InvalidArgumentError(
          absl::StrFormat("edge (%d, %d) out of range for %d sets x %d "
                          "elements",
                          edge.set, edge.element, num_sets, num_elements));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  CoverageInstance instance;
  instance.num_sets_ = num_sets;
  instance.num_elements_ = num_elements;

  // Edges are sorted by (set, element): the set-major arrays fall out
  // directly, the element-major ones by a counting pass. Because the pass
  // walks sets in increasing order, each element's set list ends up sorted.
  instance.set_offsets_.assign(num_sets + 1, 0);
  instance.element_offsets_.assign(num_elements + 1, 0);
  instance.set_elements_.reserve(edges.size());
  for (const Edge& edge : edges) {
    ++instance.set_offsets_[edge.set + 1];
    ++instance.element_offsets_[edge.element + 1];
    instance.set_elements_.push_back(edge.element);
  }
  for (int32_t s = 0; s < num_sets; ++s) {
    instance.set_offsets_[s + 1] += instance.set_offsets_[s];
  }
  for (int32_t e = 0; e < num_elements; ++e) {
    instance.element_offsets_[e + 1] += instance.element_offsets_[e];
  }
  instance.element_sets_.resize(edges.size());
  std::vector<int64_t> cursor(instance.element_offsets_.begin(),
                              instance.element_offsets_.end() - 1);
  for (const Edge& edge : edges) {
    instance.element_sets_[cursor[edge.element]++] = edge.set;
  }
  return instance;
}

int32_t CoverageInstance::CountIsolatedElements() const {
  int32_t isolated = 0;
  for (ElementId e = 0; e < num_elements_; ++e) {
    if (degree(e) == 0) ++isolated;
  }
  return isolated;
}

std::vector<Edge> CoverageInstance::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(set_elements_.size());
  for (SetId s = 0; s < num_sets_; ++s) {
    for (const ElementId e : elements_of(s)) edges.push_back({s, e});
  }
  return edges;
}

absl::StatusOr<WeightedInstance> MakeWeightedInstance(
    CoverageInstance base, std::vector<int32_t> weights, int32_t max_weight) {
  if (static_cast<int64_t>(weights.size()) != base.num_elements()) {
    return absl::InvalidArgumentError("one weight per element required");
  }
  if (max_weight < 1) {
    return absl::InvalidArgumentError("maximum weight must be at least 1");
  }
  for (size_t e = 0; e < weights.size(); ++e) {
    if (weights[e] < 1 || weights[e] > max_weight) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "weight of element %d is %d, outside [1, %d]", e, weights[e],
          max_weight));
    }
  }
  return WeightedInstance{std::move(base), std::move(weights), max_weight};
}

namespace {

absl::StatusOr<EdgeFractions> ValidateFractions(
    const CoverageInstance& base, std::vector<int32_t> units,
    int32_t resolution) {
  if (static_cast<int64_t>(units.size()) != base.num_edges()) {
    return absl::InvalidArgumentError("one fraction per edge required");
  }
  if (resolution < 1) {
    return absl::InvalidArgumentError("resolution must be at least 1");
  }
  for (const int32_t u : units) {
    if (u < 0 || u > resolution) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "fraction numerator %d outside [0, %d]", u, resolution));
    }
  }
  return EdgeFractions{std::move(units), resolution};
}

}  // namespace

absl::StatusOr<FractionalInstance> MakeFractionalInstance(
    CoverageInstance base, std::vector<int32_t> units_by_edge,
    int32_t resolution) {
  auto alpha = ValidateFractions(base, std::move(units_by_edge), resolution);
  if (!alpha.ok()) return alpha.status();
  return FractionalInstance{std::move(base), *std::move(alpha)};
}

absl::StatusOr<ProbabilisticInstance> MakeProbabilisticInstance(
    CoverageInstance base, std::vector<int32_t> units_by_edge,
    int32_t resolution) {
  auto alpha = ValidateFractions(base, std::move(units_by_edge), resolution);
  if (!alpha.ok()) return alpha.status();
  return ProbabilisticInstance{std::move(base), *std::move(alpha)};
}

std::span<const int32_t> EdgeUnits(const CoverageInstance& base,
                                   const EdgeFractions& alpha,
                                   ElementId element) {
  return std::span<const int32_t>(alpha.units)
      .subspan(base.element_offset(element), base.degree(element));
}

InstanceStats ComputeStats(const CoverageInstance& instance) {
  InstanceStats stats;
  stats.num_sets = instance.num_sets();
  stats.num_elements = instance.num_elements();
  stats.num_edges = instance.num_edges();
  for (ElementId e = 0; e < instance.num_elements(); ++e) {
    stats.max_element_degree =
        std::max(stats.max_element_degree, instance.degree(e));
  }
  for (SetId s = 0; s < instance.num_sets(); ++s) {
    stats.max_set_size = std::max(stats.max_set_size, instance.set_size(s));
  }
  stats.element_degree_histogram.assign(stats.max_element_degree + 1, 0);
  stats.set_size_histogram.assign(stats.max_set_size + 1, 0);
  for (ElementId e = 0; e < instance.num_elements(); ++e) {
    ++stats.element_degree_histogram[instance.degree(e)];
  }
  for (SetId s = 0; s < instance.num_sets(); ++s) {
    ++stats.set_size_histogram[instance.set_size(s)];
  }
  return stats;
}

}  // namespace covsketch
