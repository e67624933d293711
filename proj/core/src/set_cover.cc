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

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "covsketch/solvers.h"
#include "greedy_state.h"
#include "numeric.h"

namespace covsketch {

std::vector<int32_t> OutlierGuesses(int32_t num_sets, double eps) {
  std::vector<int32_t> guesses;
  const double base = 1.0 + eps / 3.0;
  for (int i = 0;; ++i) {
    const double raw = internal::CeilTolerant(std::pow(base, i));
    const int32_t guess =
        raw >= num_sets ? num_sets : static_cast<int32_t>(raw);
    if (guesses.empty() || guess > guesses.back()) guesses.push_back(guess);
    if (guess >= num_sets) break;
  }
  return guesses;
}

int32_t OutlierPickBudget(int32_t guess, int32_t num_sets, double eps,
                          double lambda) {
  const int64_t picks = internal::CeilToInt64(
      guess * (1.0 + eps) * std::log(1.0 / lambda));
  return static_cast<int32_t>(
      std::clamp<int64_t>(picks, 1, std::max(1, num_sets)));
}

absl::StatusOr<Solution> SelectOutlierCover(
    std::span<const CoverageInstance* const> targets,
    std::span<const int32_t> guesses, double lambda, double eps,
    int32_t* chosen_guess) {
  if (targets.size() != guesses.size()) {
    return absl::InvalidArgumentError("one target per guess required");
  }
  for (size_t i = 0; i < targets.size(); ++i) {
    const CoverageInstance& target = *targets[i];
    const int64_t need = internal::CoverTarget(target.num_elements(), lambda);
    const int32_t budget =
        OutlierPickBudget(guesses[i], target.num_sets(), eps, lambda);
    internal::GreedyState state(target);
    Solution solution;
    solution.evaluated_on = EvaluatedOn::kSketch;
    int64_t evaluations = 0;
    while (state.covered() < need &&
           static_cast<int32_t>(solution.chosen.size()) < budget) {
      const SetId best = state.ArgMax(&evaluations);
      if (best < 0 || state.gain(best) == 0) break;
      state.Choose(best);
      solution.chosen.push_back(best);
    }
    if (state.covered() >= need) {
      solution.coverage = state.covered();
      if (chosen_guess != nullptr) *chosen_guess = guesses[i];
      return solution;
    }
  }
  return absl::FailedPreconditionError("infeasible outlier fraction");
}

absl::StatusOr<OutlierCoverResult> SetCoverOutliers(
    const CoverageInstance& instance, const OutlierCoverOptions& options) {
  if (!(options.lambda > 0.0 && options.lambda < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("lambda = %g must lie in (0, 1)", options.lambda));
  }
  if (!(options.eps > 0.0 && options.eps < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps = %g must lie in (0, 1)", options.eps));
  }
  // Isolated elements never get covered and sketches never see them.
  if (instance.num_elements() - instance.CountIsolatedElements() <
      internal::CoverTarget(instance.num_elements(), options.lambda)) {
    return absl::FailedPreconditionError("infeasible outlier fraction");
  }
  OutlierCoverResult result;
  const HashSource source(options.seed);
  // Guesses are tried in increasing order and the first success wins, so
  // each per-guess target is only built when it is needed.
  for (const int32_t guess :
       OutlierGuesses(instance.num_sets(), options.eps)) {
    const CoverageInstance* target = &instance;
    Sketch sketch;
    if (options.engine == CoverEngine::kSketch) {
      auto params = TheoryParams(instance.num_sets(), instance.num_elements(),
                                 instance.num_edges(), guess, options.eps,
                                 options.delta_dprime);
      if (!params.ok()) return params.status();
      auto built = BuildSketch(instance, *params, source);
      if (!built.ok()) return built.status();
      sketch = *std::move(built);
      target = &sketch.graph;
    }
    result.target_edges += target->num_edges();
    const int32_t guesses[] = {guess};
    const CoverageInstance* const targets[] = {target};
    auto picked = SelectOutlierCover(targets, guesses, options.lambda,
                                     options.eps);
    if (picked.ok()) {
      result.guess = guess;
      result.solution.chosen = std::move(picked->chosen);
      result.solution.coverage = *Coverage(instance, result.solution.chosen);
      result.solution.evaluated_on = EvaluatedOn::kInstance;
      return result;
    }
    if (!absl::IsFailedPrecondition(picked.status())) return picked.status();
  }
  return absl::FailedPreconditionError("infeasible outlier fraction");
}

}  // namespace covsketch
