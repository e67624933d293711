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

#include "covsketch/solvers.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <tuple>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "greedy_state.h"
#include "numeric.h"

namespace covsketch {
namespace {

// Membership mask of `chosen`, validating ids.
absl::StatusOr<std::vector<bool>> ChosenMask(int32_t num_sets,
                                             std::span<const SetId> chosen) {
  std::vector<bool> mask(num_sets, false);
  for (const SetId s : chosen) {
    if (s < 0 || s >= num_sets) {
      return absl::InvalidArgumentError(
          absl::StrFormat("set id %d outside [0, %d)", s, num_sets));
    }
    mask[s] = true;
  }
  return mask;
}

}  // namespace

absl::StatusOr<int64_t> Coverage(const CoverageInstance& target,
                                 std::span<const SetId> chosen) {
  auto mask = ChosenMask(target.num_sets(), chosen);
  if (!mask.ok()) return mask.status();
  std::vector<bool> covered(target.num_elements(), false);
  int64_t count = 0;
  for (const SetId s : chosen) {
    for (const ElementId e : target.elements_of(s)) {
      if (!covered[e]) {
        covered[e] = true;
        ++count;
      }
    }
  }
  return count;
}

absl::StatusOr<int64_t> CoverageWeighted(const WeightedInstance& target,
                                         std::span<const SetId> chosen) {
  auto mask = ChosenMask(target.base.num_sets(), chosen);
  if (!mask.ok()) return mask.status();
  int64_t total = 0;
  for (ElementId v = 0; v < target.base.num_elements(); ++v) {
    for (const SetId s : target.base.sets_of(v)) {
      if ((*mask)[s]) {
        total += target.weights[v];
        break;
      }
    }
  }
  return total;
}

absl::StatusOr<int64_t> CoverageFractionalUnits(
    const FractionalInstance& target, std::span<const SetId> chosen) {
  auto mask = ChosenMask(target.base.num_sets(), chosen);
  if (!mask.ok()) return mask.status();
  int64_t total = 0;
  for (ElementId v = 0; v < target.base.num_elements(); ++v) {
    const auto sets = target.base.sets_of(v);
    const auto units = EdgeUnits(target.base, target.alpha, v);
    int32_t best = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
      if ((*mask)[sets[i]]) best = std::max(best, units[i]);
    }
    total += best;
  }
  return total;
}

absl::StatusOr<double> CoverageFractional(const FractionalInstance& target,
                                          std::span<const SetId> chosen) {
  auto units = CoverageFractionalUnits(target, chosen);
  if (!units.ok()) return units.status();
  return static_cast<double>(*units) / target.alpha.resolution;
}

absl::StatusOr<double> CoverageProbabilistic(
    const ProbabilisticInstance& target, std::span<const SetId> chosen) {
  auto mask = ChosenMask(target.base.num_sets(), chosen);
  if (!mask.ok()) return mask.status();
  const double resolution = target.alpha.resolution;
  double total = 0.0;
  for (ElementId v = 0; v < target.base.num_elements(); ++v) {
    const auto sets = target.base.sets_of(v);
    const auto units = EdgeUnits(target.base, target.alpha, v);
    double missed = 1.0;
    for (size_t i = 0; i < sets.size(); ++i) {
      if ((*mask)[sets[i]]) missed *= 1.0 - units[i] / resolution;
    }
    total += 1.0 - missed;
  }
  return total;
}

Solution GreedyKCover(const CoverageInstance& target, int32_t k,
                      GreedyStats* stats) {
  const int32_t picks = std::clamp(k, 0, target.num_sets());
  internal::GreedyState state(target);
  Solution solution;
  int64_t evaluations = 0;
  for (int32_t i = 0; i < picks; ++i) {
    const SetId best = state.ArgMax(&evaluations);
    const int64_t gained = state.Choose(best);
    solution.chosen.push_back(best);
    if (stats != nullptr) stats->gains.push_back(gained);
  }
  solution.coverage = state.covered();
  if (stats != nullptr) stats->evaluations = evaluations;
  return solution;
}

Solution LazyGreedy(const CoverageInstance& target, int32_t k,
                    GreedyStats* stats) {
  const int32_t picks = std::clamp(k, 0, target.num_sets());
  struct Entry {
    int64_t bound;
    SetId set;
    int32_t stamp;  // pick round in which `bound` was exact
  };
  // Top of the heap: largest bound, then smallest id.
  auto lower = [](const Entry& a, const Entry& b) {
    return std::tie(a.bound, b.set) < std::tie(b.bound, a.set);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> heap(lower);
  for (SetId s = 0; s < target.num_sets(); ++s) {
    heap.push({target.set_size(s), s, 0});
  }
  int64_t evaluations = target.num_sets();

  std::vector<bool> covered(target.num_elements(), false);
  Solution solution;
  for (int32_t round = 0; round < picks; ++round) {
    while (true) {
      Entry top = heap.top();
      heap.pop();
      if (top.stamp == round) {
        solution.chosen.push_back(top.set);
        for (const ElementId e : target.elements_of(top.set)) {
          if (!covered[e]) {
            covered[e] = true;
            ++solution.coverage;
          }
        }
        if (stats != nullptr) stats->gains.push_back(top.bound);
        break;
      }
      int64_t gain = 0;
      for (const ElementId e : target.elements_of(top.set)) gain += !covered[e];
      ++evaluations;
      heap.push({gain, top.set, round});
    }
  }
  if (stats != nullptr) stats->evaluations = evaluations;
  return solution;
}

int64_t StochasticSampleSize(int32_t num_sets, int32_t k, double eps) {
  return internal::CeilToInt64(static_cast<double>(num_sets) / k *
                               std::log(1.0 / eps));
}

absl::StatusOr<Solution> StochasticGreedy(const CoverageInstance& target,
                                          int32_t k, double eps, uint64_t seed,
                                          GreedyStats* stats) {
  if (k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps = %g must lie in (0, 1)", eps));
  }
  const int32_t n = target.num_sets();
  const int32_t picks = std::min(k, n);
  const int64_t samples = StochasticSampleSize(n, k, eps);
  const bool full_scan = samples >= n;

  internal::GreedyState state(target);
  std::mt19937_64 rng(seed);
  // Unchosen ids, with positions for O(1) removal.
  std::vector<SetId> pool(n);
  std::vector<int32_t> position(n);
  for (SetId s = 0; s < n; ++s) pool[s] = position[s] = s;

  Solution solution;
  int64_t evaluations = 0;
  for (int32_t i = 0; i < picks; ++i) {
    SetId best = -1;
    if (full_scan) {
      best = state.ArgMax(&evaluations);
    } else {
      std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
      for (int64_t j = 0; j < samples; ++j) {
        const SetId s = pool[pick(rng)];
        ++evaluations;
        if (best < 0 || state.gain(s) > state.gain(best) ||
            (state.gain(s) == state.gain(best) && s < best)) {
          best = s;
        }
      }
    }
    const int64_t gained = state.Choose(best);
    solution.chosen.push_back(best);
    if (stats != nullptr) stats->gains.push_back(gained);

    const int32_t at = position[best];
    pool[at] = pool.back();
    position[pool[at]] = at;
    pool.pop_back();
  }
  solution.coverage = state.covered();
  if (stats != nullptr) stats->evaluations = evaluations;
  return solution;
}

}  // namespace covsketch
