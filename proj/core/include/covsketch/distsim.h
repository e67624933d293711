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

// A deterministic, single-process simulation of the four-round MapReduce
// sketch-and-solve pipeline.
//
// Machine 0 is the coordinator; element v and its edge list live on machine
// 1 + v mod (machines - 1). Machines only see their own storage, the job
// configuration and the messages delivered to them at the last round
// barrier. The rounds are
//
//   1. every host hashes its elements and sends (v, h(v), degree) to the
//      coordinator for each non-isolated v with h(v) <= 2 edge_budget / m;
//   2. the coordinator orders the tuples by (hash, id), keeps the shortest
//      prefix whose capped degrees min(degree_cap, degree) reach the edge
//      budget, and notifies the owners of the kept elements;
//   3. hosts send the capped edge lists (smallest set ids) of the notified
//      elements;
//   4. the coordinator assembles the sketch and solves on it.
//
// Load accounting, in units of one edge or one constant-size message field:
// a tuple costs 3, a notification 1 (2 with a guess tag), an edge list one
// per edge (plus 1 for a guess tag). The load of a machine in a round is the
// units delivered to it plus the units it scans from storage; the
// coordinator additionally scans n units when it runs a solver.

#ifndef COVSKETCH_DISTSIM_H_
#define COVSKETCH_DISTSIM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "covsketch/instance.h"
#include "covsketch/sketch.h"
#include "covsketch/solvers.h"

namespace covsketch {

inline constexpr int kPipelineRounds = 4;

// Owner machine of every element.
absl::StatusOr<std::vector<int32_t>> PartitionInput(
    const CoverageInstance& instance, int32_t machines);

struct MachineRound {
  int32_t machine = 0;
  int32_t round = 0;  // 1-based
  int64_t units_in = 0;
  int64_t units_out = 0;
  int64_t storage_peak = 0;
  int64_t load = 0;

  friend bool operator==(const MachineRound&, const MachineRound&) = default;
};

struct SimReport {
  int32_t machines = 0;
  int32_t rounds_executed = 0;
  // machines x rounds entries, ordered by (machine, round).
  std::vector<MachineRound> records;
  std::vector<int64_t> elements_per_machine;
  int64_t max_load = 0;
  int64_t total_messages = 0;
  int64_t total_units = 0;
  // Sum over rounds of the coordinator's load.
  int64_t coordinator_load = 0;
  int64_t edge_budget = 0;
  int32_t num_sets = 0;
  // Tuples delivered to the coordinator in round 2.
  int64_t tuples_received = 0;
  // The tuples fell short of the edge budget although some non-isolated
  // element stayed above the hash threshold, so the sketch may differ from
  // the single-process construction.
  bool divergence = false;
  // Retained sketch edges, summed over guesses for set cover.
  int64_t sketch_edges = 0;
  // Set cover only: the reference mass 24 n ln n / lambda^3.
  double sketch_edges_reference = 0.0;
  int32_t guesses = 1;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

// One line per machine and round, then a summary line.
std::string FormatSimReport(const SimReport& report);

enum class RoundSolver { kGreedy, kStochastic };

struct KCoverJob {
  int32_t k = 1;
  double eps = 0.5;
  double delta_dprime = kDefaultDeltaDoublePrime;
  uint64_t seed = 0;
  int32_t machines = 2;
  RoundSolver solver = RoundSolver::kGreedy;
  // Permutes the order in which machines execute within each round. Results
  // must not depend on it.
  std::optional<uint64_t> schedule_seed;
};

struct KCoverRun {
  Solution solution;  // evaluated on the sketch
  Sketch sketch;
  SimReport report;
};

// The single-process reference: BuildSketch with theory parameters, then the
// same solver with the same seed.
absl::StatusOr<KCoverRun> RunKCoverReference(const CoverageInstance& instance,
                                             const KCoverJob& job);

absl::StatusOr<KCoverRun> RunKCoverMapReduce(const CoverageInstance& instance,
                                             const KCoverJob& job);

struct SetCoverJob {
  double lambda = 0.01;
  double eps = 0.2;
  double delta_dprime = kDefaultDeltaDoublePrime;
  uint64_t seed = 0;
  int32_t machines = 2;
  std::optional<uint64_t> schedule_seed;
};

struct SetCoverRun {
  Solution solution;  // evaluated on the chosen guess's sketch
  int32_t guess = 0;
  SimReport report;
};

// All guesses share the four rounds: round-1 tuples do not depend on the
// guess, and round 2 and 3 messages carry a guess tag.
absl::StatusOr<SetCoverRun> RunSetCoverMapReduce(
    const CoverageInstance& instance, const SetCoverJob& job);

}  // namespace covsketch

#endif  // COVSKETCH_DISTSIM_H_
