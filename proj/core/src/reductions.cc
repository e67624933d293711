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

#include "covsketch/reductions.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace covsketch {

Adjacency AdjacencyFromPairs(
    int32_t num_vertices,
    const std::vector<std::pair<int32_t, int32_t>>& pairs) {
  Adjacency adjacency(num_vertices);
  for (const auto& [u, v] : pairs) adjacency[u].push_back(v);
  return adjacency;
}

absl::StatusOr<CoverageInstance> KHopDominatingInstance(
    const Adjacency& adjacency, int hops) {
  if (hops < 1 || hops > 3) {
    return absl::InvalidArgumentError(
        absl::StrFormat("hops must be 1, 2 or 3, got %d", hops));
  }
  const int32_t num_vertices = static_cast<int32_t>(adjacency.size());
  Adjacency graph(num_vertices);
  for (int32_t u = 0; u < num_vertices; ++u) {
    for (const int32_t v : adjacency[u]) {
      if (v < 0 || v >= num_vertices) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "vertex %d lists neighbor %d outside [0, %d)", u, v,
            num_vertices));
      }
      if (v == u) continue;
      graph[u].push_back(v);
      graph[v].push_back(u);
    }
  }
  for (auto& neighbors : graph) {
    std::sort(neighbors.begin(), neighbors.end());
    neighbors.erase(std::unique(neighbors.begin(), neighbors.end()),
                    neighbors.end());
  }

  // Bounded BFS from every vertex; `seen` is stamped with the source id so it
  // never needs clearing.
  std::vector<Edge> edges;
  std::vector<int32_t> seen(num_vertices, -1);
  std::vector<int32_t> frontier, next;
  for (int32_t source = 0; source < num_vertices; ++source) {
    seen[source] = source;
    edges.push_back({source, source});
    frontier.assign(1, source);
    for (int depth = 0; depth < hops && !frontier.empty(); ++depth) {
      next.clear();
      for (const int32_t u : frontier) {
        for (const int32_t v : graph[u]) {
          if (seen[v] == source) continue;
          seen[v] = source;
          edges.push_back({source, v});
          next.push_back(v);
        }
      }
      frontier.swap(next);
    }
  }
  return CoverageInstance::FromEdges(num_vertices, num_vertices,
                                     std::move(edges));
}

absl::StatusOr<FeaturePairsInstance> FeaturePairsInstanceFromMatrix(
    const std::vector<std::vector<int>>& matrix) {
  const int64_t num_rows = static_cast<int64_t>(matrix.size());
  const int64_t num_cols = matrix.empty() ? 0 : matrix[0].size();
  if (num_rows > std::numeric_limits<int32_t>::max() / 2 ||
      num_cols > std::numeric_limits<int32_t>::max()) {
    return absl::InvalidArgumentError("matrix too large");
  }
  for (int64_t r = 0; r < num_rows; ++r) {
    if (static_cast<int64_t>(matrix[r].size()) != num_cols) {
      return absl::InvalidArgumentError(
          absl::StrFormat("row %d has %d entries, expected %d", r,
                          matrix[r].size(), num_cols));
    }
    for (int64_t c = 0; c < num_cols; ++c) {
      if (matrix[r][c] != 0 && matrix[r][c] != 1) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "entry (%d, %d) = %d is not binary", r, c, matrix[r][c]));
      }
    }
  }

  // (column, pair key) for every pair of rows active in a column.
  std::vector<std::pair<SetId, int64_t>> column_pairs;
  std::vector<int64_t> active;
  for (int64_t c = 0; c < num_cols; ++c) {
    active.clear();
    for (int64_t r = 0; r < num_rows; ++r) {
      if (matrix[r][c] == 1) active.push_back(r);
    }
    for (size_t i = 0; i < active.size(); ++i) {
      for (size_t j = i + 1; j < active.size(); ++j) {
        column_pairs.emplace_back(static_cast<SetId>(c),
                                  active[i] * num_rows + active[j]);
      }
    }
  }
  if (column_pairs.empty()) return absl::InvalidArgumentError("empty instance");

  FeaturePairsInstance result;
  result.num_rows = static_cast<int32_t>(num_rows);
  result.pair_keys.reserve(column_pairs.size());
  for (const auto& [column, key] : column_pairs) result.pair_keys.push_back(key);
  std::sort(result.pair_keys.begin(), result.pair_keys.end());
  result.pair_keys.erase(
      std::unique(result.pair_keys.begin(), result.pair_keys.end()),
      result.pair_keys.end());
  if (result.pair_keys.size() >
      static_cast<size_t>(std::numeric_limits<ElementId>::max())) {
    return absl::InvalidArgumentError("too many covered row pairs");
  }

  std::vector<Edge> edges;
  edges.reserve(column_pairs.size());
  for (const auto& [column, key] : column_pairs) {
    const auto it = std::lower_bound(result.pair_keys.begin(),
                                     result.pair_keys.end(), key);
    edges.push_back(
        {column, static_cast<ElementId>(it - result.pair_keys.begin())});
  }
  auto instance = CoverageInstance::FromEdges(
      static_cast<int32_t>(num_cols),
      static_cast<int32_t>(result.pair_keys.size()), std::move(edges));
  if (!instance.ok()) return instance.status();
  result.instance = *std::move(instance);
  return result;
}

}  // namespace covsketch
