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

// Text formats.
//
// Edge lists hold one "<set> <element>" pair per line. Lines starting with
// '#' are comments, except for the directives
//
//   #n <sets>       at least this many sets
//   #m <elements>   at least this many elements
//   #U <int>        weight bound or fraction resolution
//
// Without directives n and m are one more than the largest id seen. Weighted,
// fractional and probabilistic instances add a third column: the element
// weight, or the numerator of alpha(S, v) over U.

#ifndef COVSKETCH_IO_H_
#define COVSKETCH_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "covsketch/instance.h"
#include "covsketch/sketch.h"
#include "covsketch/solvers.h"

namespace covsketch {

absl::StatusOr<CoverageInstance> ParseEdgeList(std::string_view text);

// Weights repeat on every edge of an element and must agree. A missing #U
// defaults to the largest weight.
absl::StatusOr<WeightedInstance> ParseWeightedEdgeList(std::string_view text);
// #U is required.
absl::StatusOr<FractionalInstance> ParseFractionalEdgeList(
    std::string_view text);
absl::StatusOr<ProbabilisticInstance> ParseProbabilisticEdgeList(
    std::string_view text);

// Edge list in (set, element) order preceded by #n/#m directives, so that
// parsing the output reproduces the instance exactly. `header` lines are
// emitted first, each prefixed with "# ".
std::string FormatEdgeList(const CoverageInstance& instance,
                           const std::vector<std::string>& header = {});
std::string FormatWeightedEdgeList(const WeightedInstance& instance);
std::string FormatFractionalEdgeList(const CoverageInstance& base,
                                     const EdgeFractions& alpha);

// "#sketch mode=... seed=..." plus the parameters, then the sketch graph as
// an edge list over sketch-local element ids.
std::string FormatSketch(const Sketch& sketch);

// "value=<coverage> k=<count>" then one set id per line.
std::string FormatSolution(const Solution& solution);
absl::StatusOr<Solution> ParseSolution(std::string_view text);

// Single-line JSON object.
std::string StatsJson(const InstanceStats& stats);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, std::string_view content);

}  // namespace covsketch

#endif  // COVSKETCH_IO_H_
