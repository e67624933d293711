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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "covsketch/distsim.h"
#include "covsketch/experiment.h"
#include "covsketch/generators.h"
#include "covsketch/instance.h"
#include "covsketch/io.h"
#include "covsketch/reductions.h"
#include "covsketch/sketch.h"
#include "covsketch/solvers.h"

namespace covsketch::cli {
namespace {

struct GenerateFlags {
  std::string out;
  uint64_t seed = 1;
  bool no_timestamp = false;
  // planted
  int32_t planted_k = 0;
  int32_t m = 0;
  int32_t kprime = 0;
  double eps = 0.0;
  // adversarial
  int32_t n = 0;
  int32_t adversarial_k = 0;
  double beta = 1.0;
  // khop
  std::string graph;
  int hops = 1;
  // feature-pairs
  std::string matrix;
};

struct SketchFlags {
  std::string in;
  std::string out;
  uint64_t seed = 1;
  bool no_timestamp = false;
  double rho = 1.0;
  std::string sigma = "inf";
  bool theory = false;
  int32_t k = 0;
  double eps = 0.5;
  double delta_dprime = kDefaultDeltaDoublePrime;
};

struct SolveFlags {
  std::string in;
  std::string out;
  std::string problem = "kcover";
  std::string solver = "greedy";
  std::string engine = "direct";
  int32_t k = 0;
  double eps = 0.2;
  double lambda = 0.01;
  double delta_dprime = kDefaultDeltaDoublePrime;
  uint64_t seed = 1;
};

struct SimulateFlags {
  std::string in;
  std::string out;
  std::string report;
  std::string problem = "kcover";
  std::string solver = "greedy";
  int32_t machines = 2;
  int32_t k = 1;
  double eps = 0.5;
  double lambda = 0.01;
  double delta_dprime = kDefaultDeltaDoublePrime;
  uint64_t seed = 1;
  std::optional<uint64_t> schedule_seed;
};

struct ExperimentFlags {
  std::string spec;
  std::string out;
};

struct StatsFlags {
  std::string in;
};

std::string Timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream text;
  text << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return text.str();
}

// Writes to `path`, or to `out` when no path was given.
absl::Status Emit(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty()) {
    out << content;
    return absl::OkStatus();
  }
  return WriteFile(path, content);
}

std::string IdLines(const std::vector<SetId>& ids) {
  std::string text;
  for (const SetId id : ids) absl::StrAppend(&text, id, "\n");
  return text;
}

absl::StatusOr<CoverageInstance> LoadInstance(const std::string& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  auto instance = ParseEdgeList(*text);
  if (!instance.ok()) {
    return absl::Status(instance.status().code(),
                        absl::StrCat(path, ": ", instance.status().message()));
  }
  return instance;
}

// "u v" vertex pairs, '#' comments.
absl::StatusOr<Adjacency> LoadGraph(const std::string& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  std::istringstream lines(*text);
  std::string line;
  std::vector<std::pair<int32_t, int32_t>> pairs;
  int32_t vertices = 0;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (const size_t hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream fields(line);
    int64_t u = 0, v = 0;
    if (!(fields >> u)) continue;
    std::string rest;
    if (!(fields >> v) || (fields >> rest) || u < 0 || v < 0 ||
        u >= std::numeric_limits<int32_t>::max() ||
        v >= std::numeric_limits<int32_t>::max()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": line ", number, ": expected 'u v'"));
    }
    pairs.emplace_back(static_cast<int32_t>(u), static_cast<int32_t>(v));
    vertices = std::max<int32_t>(vertices, std::max(u, v) + 1);
  }
  if (pairs.empty()) return absl::InvalidArgumentError("empty graph");
  return AdjacencyFromPairs(vertices, pairs);
}

// Whitespace-separated rows of integers, '#' comments.
absl::StatusOr<std::vector<std::vector<int>>> LoadMatrix(
    const std::string& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  std::istringstream lines(*text);
  std::string line;
  std::vector<std::vector<int>> matrix;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (const size_t hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::vector<int> row;
    std::string token;
    while (fields >> token) {
      int value = 0;
      std::istringstream parse(token);
      if (!(parse >> value) || !parse.eof()) {
        return absl::InvalidArgumentError(absl::StrCat(
            path, ": line ", number, ": bad entry '", token, "'"));
      }
      row.push_back(value);
    }
    if (!row.empty()) matrix.push_back(std::move(row));
  }
  return matrix;
}

absl::StatusOr<int64_t> ParseSigma(const std::string& text) {
  if (text == "inf") return kUnboundedDegree;
  int64_t sigma = 0;
  std::istringstream parse(text);
  if (!(parse >> sigma) || !parse.eof()) {
    return absl::InvalidArgumentError(
        absl::StrCat("--sigma must be an integer or 'inf', got '", text, "'"));
  }
  return sigma;
}

absl::Status WriteGenerated(const GenerateFlags& flags,
                            const CoverageInstance& instance,
                            std::vector<std::string> header,
                            std::ostream& out) {
  if (!flags.no_timestamp) header.push_back("generated " + Timestamp());
  return Emit(flags.out, FormatEdgeList(instance, header), out);
}

absl::Status RunGeneratePlanted(const GenerateFlags& flags, std::ostream& out) {
  auto planted = GeneratePlanted(flags.planted_k, flags.m, flags.kprime,
                                 flags.eps, flags.seed);
  if (!planted.ok()) return planted.status();
  const std::string header = absl::StrFormat(
      "planted k=%d m=%d kprime=%d eps=%g seed=%d", flags.planted_k, flags.m,
      flags.kprime, flags.eps, flags.seed);
  if (absl::Status status =
          WriteGenerated(flags, planted->instance, {header}, out);
      !status.ok()) {
    return status;
  }
  if (flags.out.empty()) return absl::OkStatus();
  return WriteFile(flags.out + ".planted", IdLines(planted->planted));
}

absl::Status RunGenerateAdversarial(const GenerateFlags& flags,
                                    std::ostream& out) {
  auto adversarial =
      GenerateAdversarial(flags.n, flags.adversarial_k, flags.beta, flags.seed);
  if (!adversarial.ok()) return adversarial.status();
  const std::string header =
      absl::StrFormat("adversarial n=%d k=%d beta=%g seed=%d", flags.n,
                      flags.adversarial_k, flags.beta, flags.seed);
  if (absl::Status status =
          WriteGenerated(flags, adversarial->instance, {header}, out);
      !status.ok()) {
    return status;
  }
  if (flags.out.empty()) return absl::OkStatus();
  return WriteFile(flags.out + ".bonus", IdLines(adversarial->bonus_sets));
}

absl::Status RunGenerateKHop(const GenerateFlags& flags, std::ostream& out) {
  auto graph = LoadGraph(flags.graph);
  if (!graph.ok()) return graph.status();
  auto instance = KHopDominatingInstance(*graph, flags.hops);
  if (!instance.ok()) return instance.status();
  return WriteGenerated(flags, *instance,
                        {absl::StrCat("khop hops=", flags.hops)}, out);
}

absl::Status RunGenerateFeaturePairs(const GenerateFlags& flags,
                                     std::ostream& out) {
  auto matrix = LoadMatrix(flags.matrix);
  if (!matrix.ok()) return matrix.status();
  auto pairs = FeaturePairsInstanceFromMatrix(*matrix);
  if (!pairs.ok()) return pairs.status();
  if (absl::Status status = WriteGenerated(
          flags, pairs->instance,
          {absl::StrCat("feature-pairs rows=", pairs->num_rows)}, out);
      !status.ok()) {
    return status;
  }
  if (flags.out.empty()) return absl::OkStatus();
  std::string keys;
  for (const int64_t key : pairs->pair_keys) absl::StrAppend(&keys, key, "\n");
  return WriteFile(flags.out + ".pairs", keys);
}

absl::Status RunSketch(const SketchFlags& flags, std::ostream& out) {
  auto instance = LoadInstance(flags.in);
  if (!instance.ok()) return instance.status();
  SketchParams params;
  if (flags.theory) {
    auto theory = TheoryParams(instance->num_sets(), instance->num_elements(),
                               instance->num_edges(), flags.k, flags.eps,
                               flags.delta_dprime);
    if (!theory.ok()) return theory.status();
    params = *theory;
  } else {
    auto sigma = ParseSigma(flags.sigma);
    if (!sigma.ok()) return sigma.status();
    params = SketchParams::Practical(flags.rho, *sigma);
  }
  auto sketch = BuildSketch(*instance, params, HashSource(flags.seed));
  if (!sketch.ok()) return sketch.status();
  std::string text = FormatSketch(*sketch);
  if (!flags.no_timestamp) text = "# generated " + Timestamp() + "\n" + text;
  if (flags.out.empty()) {
    out << text;
  } else if (absl::Status status = WriteFile(flags.out, text); !status.ok()) {
    return status;
  }
  const double ratio = static_cast<double>(sketch->graph.num_edges()) /
                       static_cast<double>(instance->num_edges());
  out << absl::StrFormat("sketch_edges=%d input_edges=%d ratio=%.4f\n",
                         sketch->graph.num_edges(), instance->num_edges(),
                         ratio);
  return absl::OkStatus();
}

absl::StatusOr<Solution> SolveKCoverOn(const CoverageInstance& target,
                                       const SolveFlags& flags) {
  if (flags.solver == "greedy") return GreedyKCover(target, flags.k);
  if (flags.solver == "lazy") return LazyGreedy(target, flags.k);
  if (flags.solver == "stochastic") {
    return StochasticGreedy(target, flags.k, flags.eps, flags.seed);
  }
  return BruteForceKCover(target, flags.k);
}

absl::Status RunSolve(const SolveFlags& flags, std::ostream& out) {
  auto instance = LoadInstance(flags.in);
  if (!instance.ok()) return instance.status();
  if (flags.k > instance->num_sets()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "k = %d exceeds the number of sets %d", flags.k,
        instance->num_sets()));
  }
  Solution solution;
  std::optional<int64_t> instance_value;
  if (flags.problem == "kcover") {
    const CoverageInstance* target = &*instance;
    Sketch sketch;
    if (flags.engine == "sketch") {
      auto params = TheoryParams(instance->num_sets(),
                                 instance->num_elements(),
                                 instance->num_edges(), flags.k, flags.eps,
                                 flags.delta_dprime);
      if (!params.ok()) return params.status();
      auto built = BuildSketch(*instance, *params, HashSource(flags.seed));
      if (!built.ok()) return built.status();
      sketch = *std::move(built);
      target = &sketch.graph;
    }
    auto solved = SolveKCoverOn(*target, flags);
    if (!solved.ok()) return solved.status();
    solution = *std::move(solved);
    if (flags.engine == "sketch") {
      solution.evaluated_on = EvaluatedOn::kSketch;
      instance_value = *Coverage(*instance, solution.chosen);
    }
  } else if (flags.solver == "brute-force") {
    auto solved = BruteForceSetCover(*instance, flags.lambda);
    if (!solved.ok()) return solved.status();
    solution = *std::move(solved);
  } else {
    OutlierCoverOptions options;
    options.lambda = flags.lambda;
    options.eps = flags.eps;
    options.delta_dprime = flags.delta_dprime;
    options.seed = flags.seed;
    options.engine =
        flags.engine == "sketch" ? CoverEngine::kSketch : CoverEngine::kDirect;
    auto result = SetCoverOutliers(*instance, options);
    if (!result.ok()) return result.status();
    solution = std::move(result->solution);
  }
  const std::string text = FormatSolution(solution);
  if (!flags.out.empty()) {
    if (absl::Status status = WriteFile(flags.out, text); !status.ok()) {
      return status;
    }
  }
  out << absl::StrFormat("value=%d k=%d", solution.coverage,
                         solution.chosen.size());
  if (instance_value.has_value()) {
    out << absl::StrFormat(" instance_value=%d", *instance_value);
  }
  out << "\n";
  if (flags.out.empty()) out << IdLines(solution.chosen);
  return absl::OkStatus();
}

absl::Status RunSimulate(const SimulateFlags& flags, std::ostream& out) {
  auto instance = LoadInstance(flags.in);
  if (!instance.ok()) return instance.status();
  Solution solution;
  SimReport report;
  if (flags.problem == "kcover") {
    KCoverJob job;
    job.k = flags.k;
    job.eps = flags.eps;
    job.delta_dprime = flags.delta_dprime;
    job.seed = flags.seed;
    job.machines = flags.machines;
    job.solver = flags.solver == "stochastic" ? RoundSolver::kStochastic
                                              : RoundSolver::kGreedy;
    job.schedule_seed = flags.schedule_seed;
    auto run = RunKCoverMapReduce(*instance, job);
    if (!run.ok()) return run.status();
    solution = std::move(run->solution);
    report = std::move(run->report);
  } else {
    SetCoverJob job;
    job.lambda = flags.lambda;
    job.eps = flags.eps;
    job.delta_dprime = flags.delta_dprime;
    job.seed = flags.seed;
    job.machines = flags.machines;
    job.schedule_seed = flags.schedule_seed;
    auto run = RunSetCoverMapReduce(*instance, job);
    if (!run.ok()) return run.status();
    solution = std::move(run->solution);
    report = std::move(run->report);
  }
  const std::string solution_text = FormatSolution(solution);
  const std::string report_text = FormatSimReport(report);
  if (!flags.out.empty()) {
    if (absl::Status status = WriteFile(flags.out, solution_text);
        !status.ok()) {
      return status;
    }
  }
  if (!flags.report.empty()) {
    if (absl::Status status = WriteFile(flags.report, report_text);
        !status.ok()) {
      return status;
    }
  }
  if (flags.out.empty()) out << solution_text;
  if (flags.report.empty()) out << report_text;
  if (!flags.out.empty() && !flags.report.empty()) {
    out << absl::StrFormat("value=%d k=%d divergence=%d\n", solution.coverage,
                           solution.chosen.size(), report.divergence ? 1 : 0);
  }
  return absl::OkStatus();
}

absl::Status RunExperimentCommand(const ExperimentFlags& flags,
                                  std::ostream& out) {
  auto text = ReadFile(flags.spec);
  if (!text.ok()) return text.status();
  auto spec = ParseExperimentSpec(*text);
  if (!spec.ok()) {
    return absl::Status(spec.status().code(),
                        absl::StrCat(flags.spec, ": ", spec.status().message()));
  }
  auto instance = ExperimentInstance(*spec);
  if (!instance.ok()) return instance.status();
  auto rows = RunExperiment(*spec, *instance);
  if (!rows.ok()) return rows.status();
  const std::string path = flags.out.empty() ? spec->output : flags.out;
  return Emit(path, FormatExperimentCsv(*rows), out);
}

absl::Status RunStats(const StatsFlags& flags, std::ostream& out) {
  auto instance = LoadInstance(flags.in);
  if (!instance.ok()) return instance.status();
  out << StatsJson(ComputeStats(*instance)) << "\n";
  return absl::OkStatus();
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Coverage sketches: generate, sketch, solve, simulate, sweep."};
  app.name("covsketch");
  app.require_subcommand(1);

  GenerateFlags generate;
  CLI::App* gen = app.add_subcommand("generate", "Write a synthetic instance");
  gen->require_subcommand(1);
  auto add_common = [&generate](CLI::App* cmd) {
    cmd->add_option("--out", generate.out, "Output edge list (default stdout)");
    cmd->add_option("--seed", generate.seed, "Generator seed");
    cmd->add_flag("--no-timestamp", generate.no_timestamp,
                  "Omit the timestamp header line");
  };
  CLI::App* planted =
      gen->add_subcommand("planted", "Planted cover with decoy sets");
  planted->add_option("--k", generate.planted_k, "Planted sets")->required();
  planted->add_option("--m", generate.m, "Elements")->required();
  planted->add_option("--kprime", generate.kprime, "Decoy sets")->required();
  planted->add_option("--eps", generate.eps, "Decoy oversize factor")
      ->required();
  add_common(planted);
  CLI::App* adversarial = gen->add_subcommand(
      "adversarial", "Bonus-set instance defeating uniform sampling");
  adversarial->add_option("--n", generate.n, "Sets")->required();
  adversarial->add_option("--k", generate.adversarial_k, "Bonus sets")
      ->required();
  adversarial->add_option("--beta", generate.beta, "Bonus ratio")->required();
  add_common(adversarial);
  CLI::App* khop =
      gen->add_subcommand("khop", "Dominating set over a k-hop neighborhood");
  khop->add_option("--graph", generate.graph, "Edge pairs 'u v'")->required();
  khop->add_option("--hops", generate.hops, "Hop radius")
      ->check(CLI::Range(1, 3));
  add_common(khop);
  CLI::App* features = gen->add_subcommand(
      "feature-pairs", "Columns as sets over co-active row pairs");
  features->add_option("--matrix", generate.matrix, "Binary matrix file")
      ->required();
  add_common(features);

  SketchFlags sketch;
  CLI::App* sk = app.add_subcommand("sketch", "Build a sketch of an instance");
  sk->add_option("--in", sketch.in, "Input edge list")->required();
  sk->add_option("--out", sketch.out, "Sketch file (default stdout)");
  sk->add_option("--seed", sketch.seed, "Hash seed");
  sk->add_flag("--no-timestamp", sketch.no_timestamp,
               "Omit the timestamp header line");
  sk->add_option("--rho", sketch.rho, "Element sampling probability");
  sk->add_option("--sigma", sketch.sigma, "Degree cap, or 'inf'");
  sk->add_flag("--theory", sketch.theory,
               "Derive the edge budget and cap from --k and --eps");
  sk->add_option("--k", sketch.k, "Solution size (theory mode)");
  sk->add_option("--eps", sketch.eps, "Accuracy (theory mode)");
  sk->add_option("--delta-dprime", sketch.delta_dprime,
                 "Confidence exponent (theory mode)");

  SolveFlags solve;
  CLI::App* so = app.add_subcommand("solve", "Solve k-cover or set cover");
  so->add_option("--in", solve.in, "Input edge list")->required();
  so->add_option("--out", solve.out, "Solution file");
  so->add_option("--problem", solve.problem)
      ->check(CLI::IsMember({"kcover", "setcover-outliers"}));
  so->add_option("--solver", solve.solver)
      ->check(CLI::IsMember({"greedy", "lazy", "stochastic", "brute-force"}));
  so->add_option("--engine", solve.engine)
      ->check(CLI::IsMember({"direct", "sketch"}));
  so->add_option("--k", solve.k, "Sets to pick (kcover)")
      ->check(CLI::NonNegativeNumber);
  so->add_option("--eps", solve.eps, "Accuracy");
  so->add_option("--lambda", solve.lambda, "Outlier fraction");
  so->add_option("--delta-dprime", solve.delta_dprime);
  so->add_option("--seed", solve.seed);

  SimulateFlags simulate;
  CLI::App* sim =
      app.add_subcommand("simulate", "Run the four-round MapReduce pipeline");
  sim->add_option("--in", simulate.in, "Input edge list")->required();
  sim->add_option("--out", simulate.out, "Solution file");
  sim->add_option("--report", simulate.report, "Load report file");
  sim->add_option("--problem", simulate.problem)
      ->check(CLI::IsMember({"kcover", "setcover-outliers"}));
  sim->add_option("--solver", simulate.solver)
      ->check(CLI::IsMember({"greedy", "stochastic"}));
  sim->add_option("--machines", simulate.machines,
                  "Machines, coordinator included")
      ->required()
      ->check(CLI::Range(2, std::numeric_limits<int32_t>::max()));
  sim->add_option("--k", simulate.k);
  sim->add_option("--eps", simulate.eps);
  sim->add_option("--lambda", simulate.lambda);
  sim->add_option("--delta-dprime", simulate.delta_dprime);
  sim->add_option("--seed", simulate.seed);
  sim->add_option("--schedule-seed", simulate.schedule_seed,
                  "Shuffle machine execution order within rounds");

  ExperimentFlags experiment;
  CLI::App* ex =
      app.add_subcommand("experiment", "Sweep sketch parameters into a CSV");
  ex->add_option("--spec", experiment.spec, "Experiment spec file")
      ->required();
  ex->add_option("--out", experiment.out, "CSV path (overrides the spec)");

  StatsFlags stats;
  CLI::App* st = app.add_subcommand("stats", "Instance statistics as JSON");
  st->add_option("--in", stats.in, "Input edge list")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n"
        << "run 'covsketch --help' for usage\n";
    return kExitUsage;
  }

  absl::Status status;
  if (planted->parsed()) {
    status = RunGeneratePlanted(generate, out);
  } else if (adversarial->parsed()) {
    status = RunGenerateAdversarial(generate, out);
  } else if (khop->parsed()) {
    status = RunGenerateKHop(generate, out);
  } else if (features->parsed()) {
    status = RunGenerateFeaturePairs(generate, out);
  } else if (sk->parsed()) {
    status = RunSketch(sketch, out);
  } else if (so->parsed()) {
    status = RunSolve(solve, out);
  } else if (sim->parsed()) {
    status = RunSimulate(simulate, out);
  } else if (ex->parsed()) {
    status = RunExperimentCommand(experiment, out);
  } else if (st->parsed()) {
    status = RunStats(stats, out);
  }
  if (!status.ok()) {
    err << "error: " << status.message() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace covsketch::cli
