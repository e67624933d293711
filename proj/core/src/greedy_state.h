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

#ifndef COVSKETCH_SRC_GREEDY_STATE_H_
#define COVSKETCH_SRC_GREEDY_STATE_H_

#include <cstdint>
#include <vector>

#include "covsketch/instance.h"
#include "numeric.h"

namespace covsketch::internal {

// Elements that must be covered to leave at most a lambda fraction out.
inline int64_t CoverTarget(int64_t num_elements, double lambda) {
  return static_cast<int64_t>(
      CeilTolerant((1.0 - lambda) * static_cast<double>(num_elements)));
}

// Exact marginal gains under a growing selection. Covering an element
// decrements the gain of every set containing it, so the total update cost
// over a run is one pass over the edges.
class GreedyState {
 public:
  explicit GreedyState(const CoverageInstance& target)
      : target_(target),
        gain_(target.num_sets()),
        chosen_(target.num_sets(), false),
        covered_(target.num_elements(), false) {
    for (SetId s = 0; s < target.num_sets(); ++s) gain_[s] = target.set_size(s);
  }

  int64_t gain(SetId s) const { return gain_[s]; }
  bool chosen(SetId s) const { return chosen_[s]; }
  int64_t covered() const { return covered_count_; }

  // Largest gain among unchosen sets, smallest id first; -1 if none is left.
  SetId ArgMax(int64_t* evaluations) const {
    SetId best = -1;
    for (SetId s = 0; s < target_.num_sets(); ++s) {
      if (chosen_[s]) continue;
      ++*evaluations;
      if (best < 0 || gain_[s] > gain_[best]) best = s;
    }
    return best;
  }

  // Returns the marginal gain of `s`.
  int64_t Choose(SetId s) {
    const int64_t gained = gain_[s];
    chosen_[s] = true;
    for (const ElementId e : target_.elements_of(s)) {
      if (covered_[e]) continue;
      covered_[e] = true;
      ++covered_count_;
      for (const SetId t : target_.sets_of(e)) --gain_[t];
    }
    return gained;
  }

 private:
  const CoverageInstance& target_;
  std::vector<int64_t> gain_;
  std::vector<bool> chosen_;
  std::vector<bool> covered_;
  int64_t covered_count_ = 0;
};

}  // namespace covsketch::internal

#endif  // COVSKETCH_SRC_GREEDY_STATE_H_
