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

// Synthetic coverage instances. Every generator is a pure function of its
// parameters and seed.

#ifndef COVSKETCH_GENERATORS_H_
#define COVSKETCH_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "covsketch/instance.h"

namespace covsketch {

struct PlantedInstance {
  CoverageInstance instance;
  // Ids of the planted sets; together they partition the ground set.
  std::vector<SetId> planted;
};

// Plants `num_planted` equal-size sets that partition `num_elements`
// elements, then adds `num_decoys` sets of
// ceil((1 + eps) * num_elements / num_planted) elements drawn uniformly
// without replacement. Set ids are a seeded shuffle, so planted ids are
// scattered; `planted` lists them in increasing order. Fails unless
// num_planted divides num_elements.
absl::StatusOr<PlantedInstance> GeneratePlanted(int32_t num_planted,
                                                int32_t num_elements,
                                                int32_t num_decoys, double eps,
                                                uint64_t seed);

struct AdversarialInstance {
  CoverageInstance instance;
  // The k "bonus" sets, in bonus-group order. Their union is everything.
  std::vector<SetId> bonus_sets;
};

// The uniform-sampling lower-bound construction: `num_sets` sets all
// containing the same `num_sets` normal elements, plus beta * num_sets bonus
// elements split into k private groups of beta * num_sets / k, one group per
// bonus set. Normal elements take ids [0, n), bonus elements follow. The
// seed only decides which set ids are the bonus sets, so that solvers
// breaking ties by id gain nothing from the construction order.
absl::StatusOr<AdversarialInstance> GenerateAdversarial(int32_t num_sets,
                                                        int32_t k, double beta,
                                                        uint64_t seed);

// Each element independently joins each set with probability `density`;
// elements left uncovered are attached to one uniformly chosen set so that
// no element is isolated. Used by fuzz tests and benchmarks.
CoverageInstance GenerateRandom(int32_t num_sets, int32_t num_elements,
                                double density, uint64_t seed);

}  // namespace covsketch

#endif  // COVSKETCH_GENERATORS_H_
