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

#include "covsketch/generators.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "numeric.h"

namespace covsketch {

absl::StatusOr<PlantedInstance> GeneratePlanted(int32_t num_planted,
                                                int32_t num_elements,
                                                int32_t num_decoys, double eps,
                                                uint64_t seed) {
  if (num_planted < 1 || num_elements < 1 || num_decoys < 0) {
    return absl::InvalidArgumentError(
        "planted instance needs k >= 1, m >= 1, k' >= 0");
  }
  if (num_elements % num_planted != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "k = %d does not divide m = %d", num_planted, num_elements));
  }
  if (!(eps >= 0)) return absl::InvalidArgumentError("eps must be >= 0");
  const int32_t planted_size = num_elements / num_planted;
  const int64_t decoy_size =
      internal::CeilToInt64((1.0 + eps) * planted_size);
  if (decoy_size > num_elements) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "decoy size %d exceeds m = %d", decoy_size, num_elements));
  }
  if (static_cast<int64_t>(num_planted) + num_decoys >
      std::numeric_limits<int32_t>::max()) {
    return absl::InvalidArgumentError("too many sets");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(num_elements) +
                static_cast<size_t>(num_decoys) * decoy_size);
  PlantedInstance result;
  for (SetId s = 0; s < num_planted; ++s) {
    result.planted.push_back(s);
    for (int32_t i = 0; i < planted_size; ++i) {
      edges.push_back({s, s * planted_size + i});
    }
  }

  // Partial Fisher-Yates over a shared permutation; the swaps are undone
  // after every decoy so each draw starts from the identity permutation.
  std::mt19937_64 rng(seed);
  std::vector<ElementId> perm(num_elements);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int32_t, int32_t>> swaps;
  swaps.reserve(decoy_size);
  for (int32_t d = 0; d < num_decoys; ++d) {
    const SetId set = num_planted + d;
    swaps.clear();
    for (int32_t i = 0; i < decoy_size; ++i) {
      std::uniform_int_distribution<int32_t> pick(i, num_elements - 1);
      const int32_t j = pick(rng);
      std::swap(perm[i], perm[j]);
      swaps.emplace_back(i, j);
      edges.push_back({set, perm[i]});
    }
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
      std::swap(perm[it->first], perm[it->second]);
    }
  }

  // Relabel sets so the planted ones are not the smallest ids; solvers break
  // ties by id and would otherwise favor them.
  const int32_t num_sets = num_planted + num_decoys;
  std::vector<SetId> label(num_sets);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  for (Edge& e : edges) e.set = label[e.set];
  for (SetId& s : result.planted) s = label[s];
  std::sort(result.planted.begin(), result.planted.end());

  auto instance = CoverageInstance::FromEdges(num_sets, num_elements,
                                              std::move(edges));
  if (!instance.ok()) return instance.status();
  result.instance = *std::move(instance);
  return result;
}

absl::StatusOr<AdversarialInstance> GenerateAdversarial(int32_t num_sets,
                                                        int32_t k, double beta,
                                                        uint64_t seed) {
  if (num_sets < 2 || k < 1 || 2 * static_cast<int64_t>(k) > num_sets) {
    return absl::InvalidArgumentError("adversarial instance needs 1 <= k <= n/2");
  }
  if (!(beta >= 1)) return absl::InvalidArgumentError("beta must be >= 1");
  const double bonus_total = beta * num_sets;
  const double group = bonus_total / k;
  if (!internal::IsIntegral(group) || bonus_total > 1e9) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "beta * n / k = %g must be an integer", group));
  }
  const int32_t group_size = static_cast<int32_t>(std::llround(group));
  const int32_t num_bonus = group_size * k;

  std::mt19937_64 rng(seed);
  std::vector<SetId> ids(num_sets);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);

  AdversarialInstance result;
  result.bonus_sets.assign(ids.begin(), ids.begin() + k);
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(num_sets) * num_sets + num_bonus);
  for (SetId s = 0; s < num_sets; ++s) {
    for (ElementId e = 0; e < num_sets; ++e) edges.push_back({s, e});
  }
  for (int32_t g = 0; g < k; ++g) {
    for (int32_t i = 0; i < group_size; ++i) {
      edges.push_back({result.bonus_sets[g], num_sets + g * group_size + i});
    }
  }
  auto instance = CoverageInstance::FromEdges(num_sets, num_sets + num_bonus,
                                              std::move(edges));
  if (!instance.ok()) return instance.status();
  result.instance = *std::move(instance);
  return result;
}

CoverageInstance GenerateRandom(int32_t num_sets, int32_t num_elements,
                                double density, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<SetId> any_set(0, num_sets - 1);
  std::vector<Edge> edges;
  for (ElementId e = 0; e < num_elements; ++e) {
    bool covered = false;
    for (SetId s = 0; s < num_sets; ++s) {
      if (coin(rng)) {
        edges.push_back({s, e});
        covered = true;
      }
    }
    if (!covered) edges.push_back({any_set(rng), e});
  }
  return *CoverageInstance::FromEdges(num_sets, num_elements, std::move(edges));
}

}  // namespace covsketch
