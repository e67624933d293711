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

// Parameter sweeps of the practical sketch against a full-instance baseline.
//
// A spec file is a list of "key = value" lines; '#' starts a comment. Grid
// keys take comma-separated lists:
//
//   generator      = planted | adversarial | file
//   planted_k, planted_m, planted_kprime, planted_eps     (planted)
//   adversarial_n, adversarial_k, adversarial_beta        (adversarial)
//   input          = path to an edge list                  (file)
//   generator_seed = 1
//   rho            = 0.01, 0.05, 0.1
//   sigma          = 100, inf
//   k              = 10, 50
//   seeds          = 1, 2, 3
//   solver         = stochastic | greedy      (run on the sketch)
//   baseline       = stochastic | lazy        (run on the full instance)
//   stochastic_eps = 0.1
//   output         = results.csv
//
// For every (rho, sigma, k, seed) the sketch uses the seed as its hash seed,
// and the stochastic solvers use it as their sampling seed. Coverage is
// always measured on the full instance.

#ifndef COVSKETCH_EXPERIMENT_H_
#define COVSKETCH_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "covsketch/instance.h"

namespace covsketch {

struct ExperimentSpec {
  std::string generator = "planted";
  int32_t planted_k = 0;
  int32_t planted_m = 0;
  int32_t planted_kprime = 0;
  double planted_eps = 0.0;
  int32_t adversarial_n = 0;
  int32_t adversarial_k = 0;
  double adversarial_beta = 1.0;
  std::string input;
  uint64_t generator_seed = 1;

  std::vector<double> rho;
  std::vector<int64_t> sigma;
  std::vector<int32_t> k;
  std::vector<uint64_t> seeds;
  std::string solver = "stochastic";
  std::string baseline = "stochastic";
  double stochastic_eps = 0.1;
  std::string output;
};

absl::StatusOr<ExperimentSpec> ParseExperimentSpec(std::string_view text);
absl::Status ValidateExperimentSpec(const ExperimentSpec& spec);

// The generated instance, or the parsed `input` file.
absl::StatusOr<CoverageInstance> ExperimentInstance(const ExperimentSpec& spec);

struct ExperimentRow {
  double rho = 0.0;
  int64_t sigma = 0;
  int32_t k = 0;
  // Empty for the mean row of a grid point.
  std::optional<uint64_t> seed;
  double sketch_edges = 0.0;
  double sketch_ratio = 0.0;
  double coverage = 0.0;
  double baseline_coverage = 0.0;
  double quality_ratio = 0.0;
};

// Rows sorted by (rho, sigma, k), seed rows by seed followed by the mean row.
absl::StatusOr<std::vector<ExperimentRow>> RunExperiment(
    const ExperimentSpec& spec, const CoverageInstance& instance);

// Header "rho,sigma,k,seed,sketch_edges,sketch_ratio,coverage,
// baseline_coverage,quality_ratio"; the mean rows carry seed "mean" and an
// unbounded sigma is written as "inf".
std::string FormatExperimentCsv(const std::vector<ExperimentRow>& rows);

}  // namespace covsketch

#endif  // COVSKETCH_EXPERIMENT_H_
