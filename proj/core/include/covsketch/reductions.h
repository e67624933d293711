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

#ifndef COVSKETCH_REDUCTIONS_H_
#define COVSKETCH_REDUCTIONS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "covsketch/instance.h"

namespace covsketch {

using Adjacency = std::vector<std::vector<int32_t>>;

// Dominating set as coverage: one set and one element per vertex, set `a`
// containing `b` iff b == a or b is within `hops` edges of a. The input is
// read as undirected (each listed neighbor is linked both ways); self loops
// are ignored. Supported hop counts are 1, 2 and 3.
absl::StatusOr<CoverageInstance> KHopDominatingInstance(
    const Adjacency& adjacency, int hops);

// Builds an adjacency list from "u v" vertex pairs.
Adjacency AdjacencyFromPairs(int32_t num_vertices,
                             const std::vector<std::pair<int32_t, int32_t>>&
                                 pairs);

struct FeaturePairsInstance {
  CoverageInstance instance;
  // Element e stands for the row pair {r1, r2}, r1 < r2, encoded as
  // pair_keys[e] = r1 * num_rows + r2. Keys are increasing in e.
  std::vector<int64_t> pair_keys;
  int32_t num_rows = 0;
};

// Column subset selection as coverage: columns are sets, row pairs are
// elements, and a column covers a pair when it is active in both rows. Only
// pairs covered by some column become elements. Fails on entries other than
// 0/1, ragged rows, or when no pair is covered ("empty instance").
absl::StatusOr<FeaturePairsInstance> FeaturePairsInstanceFromMatrix(
    const std::vector<std::vector<int>>& matrix);

}  // namespace covsketch

#endif  // COVSKETCH_REDUCTIONS_H_
