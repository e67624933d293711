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
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "covsketch/solvers.h"
#include "greedy_state.h"

namespace covsketch {
namespace {

// C(n, k), saturating at int64 max.
int64_t Binomial(int64_t n, int64_t k) {
  k = std::min(k, n - k);
  if (k < 0) return 0;
  __int128 result = 1;
  for (int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<int64_t>::max()) {
      return std::numeric_limits<int64_t>::max();
    }
  }
  return static_cast<int64_t>(result);
}

// Depth-first walk over k-subsets in lexicographic order, keeping per-element
// cover counts so each step costs one set's size.
class SubsetWalker {
 public:
  explicit SubsetWalker(const CoverageInstance& instance)
      : instance_(instance), counts_(instance.num_elements(), 0) {}

  // Calls visit(current, covered) on every k-subset; stops early when visit
  // returns true.
  template <typename Visit>
  bool Walk(int32_t k, Visit&& visit) {
    current_.clear();
    return Descend(0, k, visit);
  }

 private:
  template <typename Visit>
  bool Descend(SetId start, int32_t remaining, Visit& visit) {
    if (remaining == 0) return visit(current_, covered_);
    for (SetId s = start; s + remaining <= instance_.num_sets(); ++s) {
      Add(s);
      const bool stop = Descend(s + 1, remaining - 1, visit);
      Remove(s);
      if (stop) return true;
    }
    return false;
  }
  void Add(SetId s) {
    current_.push_back(s);
    for (const ElementId e : instance_.elements_of(s)) {
      if (counts_[e]++ == 0) ++covered_;
    }
  }
  void Remove(SetId s) {
    current_.pop_back();
    for (const ElementId e : instance_.elements_of(s)) {
      if (--counts_[e] == 0) --covered_;
    }
  }

  const CoverageInstance& instance_;
  std::vector<int32_t> counts_;
  std::vector<SetId> current_;
  int64_t covered_ = 0;
};

}  // namespace

absl::StatusOr<Solution> BruteForceKCover(const CoverageInstance& instance,
                                          int32_t k, int64_t budget) {
  if (k < 0 || k > instance.num_sets()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("k = %d outside [0, %d]", k, instance.num_sets()));
  }
  const int64_t subsets = Binomial(instance.num_sets(), k);
  if (subsets > budget) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "C(%d, %d) = %d subsets exceed the budget of %d", instance.num_sets(),
        k, subsets, budget));
  }
  Solution best;
  best.coverage = -1;
  SubsetWalker walker(instance);
  walker.Walk(k, [&best](const std::vector<SetId>& subset, int64_t covered) {
    if (covered > best.coverage) {
      best.coverage = covered;
      best.chosen = subset;
    }
    return false;
  });
  return best;
}

absl::StatusOr<Solution> BruteForceSetCover(const CoverageInstance& instance,
                                            double lambda, int64_t budget) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("lambda = %g must lie in [0, 1)", lambda));
  }
  const int64_t need = internal::CoverTarget(instance.num_elements(), lambda);
  std::vector<SetId> all(instance.num_sets());
  for (SetId s = 0; s < instance.num_sets(); ++s) all[s] = s;
  if (*Coverage(instance, all) < need) {
    return absl::FailedPreconditionError("infeasible outlier fraction");
  }
  int64_t examined = 0;
  SubsetWalker walker(instance);
  for (int32_t size = 0; size <= instance.num_sets(); ++size) {
    examined += Binomial(instance.num_sets(), size);
    if (examined > budget) {
      return absl::ResourceExhaustedError(absl::StrFormat(
          "set cover search exceeds the budget of %d subsets at size %d",
          budget, size));
    }
    Solution found;
    const bool done = walker.Walk(
        size, [&](const std::vector<SetId>& subset, int64_t covered) {
          if (covered < need) return false;
          found.chosen = subset;
          found.coverage = covered;
          return true;
        });
    if (done) return found;
  }
  return absl::FailedPreconditionError("infeasible outlier fraction");
}

}  // namespace covsketch
