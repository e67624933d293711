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

// Greedy-family solvers for maximum k-cover and set cover with outliers,
// and exhaustive oracles for small instances.
//
// Every solver breaks ties towards the smallest set id, so runs on equal
// inputs are bit-identical and the lazy and eager greedy agree exactly.

#ifndef COVSKETCH_SOLVERS_H_
#define COVSKETCH_SOLVERS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "covsketch/instance.h"
#include "covsketch/sketch.h"

namespace covsketch {

enum class EvaluatedOn { kInstance, kSketch };

struct Solution {
  // Chosen set ids in pick order, without repetitions.
  std::vector<SetId> chosen;
  // Number of elements of the evaluation target covered by `chosen`.
  int64_t coverage = 0;
  EvaluatedOn evaluated_on = EvaluatedOn::kInstance;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Exact union size. Fails on an out-of-range id.
absl::StatusOr<int64_t> Coverage(const CoverageInstance& target,
                                 std::span<const SetId> chosen);

// Sum of the weights of covered elements.
absl::StatusOr<int64_t> CoverageWeighted(const WeightedInstance& target,
                                         std::span<const SetId> chosen);
// Sum over elements of the largest numerator among chosen sets, i.e. the
// fractional coverage scaled by the resolution.
absl::StatusOr<int64_t> CoverageFractionalUnits(
    const FractionalInstance& target, std::span<const SetId> chosen);
absl::StatusOr<double> CoverageFractional(const FractionalInstance& target,
                                          std::span<const SetId> chosen);
// Expected number of covered elements, sum_v 1 - prod_S (1 - alpha(S, v)).
absl::StatusOr<double> CoverageProbabilistic(
    const ProbabilisticInstance& target, std::span<const SetId> chosen);

struct GreedyStats {
  // Marginal gain of each pick.
  std::vector<int64_t> gains;
  // Number of marginal-gain evaluations.
  int64_t evaluations = 0;
};

// Picks min(k, n) sets, each with the largest marginal gain. Once nothing
// is left to gain the remaining picks are the smallest unchosen ids.
Solution GreedyKCover(const CoverageInstance& target, int32_t k,
                      GreedyStats* stats = nullptr);

// Same output as GreedyKCover, using stale gains as upper bounds.
Solution LazyGreedy(const CoverageInstance& target, int32_t k,
                    GreedyStats* stats = nullptr);

// Each step scores ceil((n / k) ln(1 / eps)) unchosen sets sampled uniformly
// with replacement and keeps the best; steps scan every unchosen set when
// the sample would be at least n. Requires k >= 1 and 0 < eps < 1.
absl::StatusOr<Solution> StochasticGreedy(const CoverageInstance& target,
                                          int32_t k, double eps, uint64_t seed,
                                          GreedyStats* stats = nullptr);

int64_t StochasticSampleSize(int32_t num_sets, int32_t k, double eps);

inline constexpr int64_t kDefaultBruteForceBudget = 10'000'000;

// Exact optimum over all k-subsets; the lexicographically smallest among
// optimal subsets. Fails when C(n, k) exceeds `budget`.
absl::StatusOr<Solution> BruteForceKCover(
    const CoverageInstance& instance, int32_t k,
    int64_t budget = kDefaultBruteForceBudget);

// Smallest family covering at least (1 - lambda) m elements, by increasing
// size. Fails when infeasible or when more than `budget` subsets would be
// examined.
absl::StatusOr<Solution> BruteForceSetCover(
    const CoverageInstance& instance, double lambda,
    int64_t budget = kDefaultBruteForceBudget);

enum class CoverEngine { kDirect, kSketch };

struct OutlierCoverOptions {
  double lambda = 0.01;
  double eps = 0.2;
  double delta_dprime = kDefaultDeltaDoublePrime;
  uint64_t seed = 0;
  CoverEngine engine = CoverEngine::kDirect;
};

struct OutlierCoverResult {
  // Chosen sets, with coverage measured on the full instance.
  Solution solution;
  // The successful guess of the optimum size.
  int32_t guess = 0;
  // Edges of the per-guess targets, summed over the guesses tried.
  int64_t target_edges = 0;
};

// Guesses ceil((1 + eps/3)^i) for i = 0, 1, ... up to n, deduplicated.
std::vector<int32_t> OutlierGuesses(int32_t num_sets, double eps);

// Greedy pick allowance for a guess: ceil(g (1 + eps) ln(1 / lambda)),
// capped at n.
int32_t OutlierPickBudget(int32_t guess, int32_t num_sets, double eps,
                          double lambda);

// Runs greedy on targets[i] for guesses[i] in order, stopping each run at
// the pick allowance or once (1 - lambda) of that target's elements are
// covered. Returns the chosen sets of the first guess that reaches the
// threshold (coverage measured on the target), or "infeasible outlier
// fraction".
absl::StatusOr<Solution> SelectOutlierCover(
    std::span<const CoverageInstance* const> targets,
    std::span<const int32_t> guesses, double lambda, double eps,
    int32_t* chosen_guess = nullptr);

// Set cover with outliers over the guess ladder, using the full instance
// (direct) or a theory sketch with k = guess (sketch) as each guess's target.
absl::StatusOr<OutlierCoverResult> SetCoverOutliers(
    const CoverageInstance& instance, const OutlierCoverOptions& options);

}  // namespace covsketch

#endif  // COVSKETCH_SOLVERS_H_
