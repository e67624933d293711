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

#include "covsketch/experiment.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "covsketch/generators.h"
#include "covsketch/io.h"
#include "covsketch/sketch.h"
#include "covsketch/solvers.h"

namespace covsketch {
namespace {

absl::Status KeyError(int line, absl::string_view key, absl::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line, ": ", key, ": ", what));
}

template <typename T>
bool ParseNumber(absl::string_view token, T* out) {
  if constexpr (std::is_same_v<T, double>) {
    return absl::SimpleAtod(token, out);
  } else {
    return absl::SimpleAtoi(token, out);
  }
}

template <typename T>
absl::Status ParseList(int line, absl::string_view key, absl::string_view value,
                       std::vector<T>* out) {
  out->clear();
  for (absl::string_view token : absl::StrSplit(value, ',')) {
    token = absl::StripAsciiWhitespace(token);
    T parsed{};
    if (!ParseNumber(token, &parsed)) {
      return KeyError(line, key, absl::StrCat("bad list entry '", token, "'"));
    }
    out->push_back(parsed);
  }
  return absl::OkStatus();
}

absl::Status ParseSigmaList(int line, absl::string_view value,
                            std::vector<int64_t>* out) {
  out->clear();
  for (absl::string_view token : absl::StrSplit(value, ',')) {
    token = absl::StripAsciiWhitespace(token);
    int64_t sigma = 0;
    if (token == "inf") {
      sigma = kUnboundedDegree;
    } else if (!absl::SimpleAtoi(token, &sigma)) {
      return KeyError(line, "sigma", absl::StrCat("bad entry '", token, "'"));
    }
    out->push_back(sigma);
  }
  return absl::OkStatus();
}

template <typename T>
absl::Status ParseScalar(int line, absl::string_view key,
                         absl::string_view value, T* out) {
  if (!ParseNumber(value, out)) {
    return KeyError(line, key, absl::StrCat("bad value '", value, "'"));
  }
  return absl::OkStatus();
}

template <typename T>
bool AllDistinct(const std::vector<T>& values) {
  return std::set<T>(values.begin(), values.end()).size() == values.size();
}

std::string FormatNumber(double x) { return absl::StrFormat("%.10g", x); }

}  // namespace

absl::StatusOr<ExperimentSpec> ParseExperimentSpec(std::string_view text) {
  ExperimentSpec spec;
  int line_number = 0;
  for (absl::string_view line :
       absl::StrSplit(absl::string_view(text.data(), text.size()), '\n')) {
    ++line_number;
    if (const size_t hash = line.find('#'); hash != line.npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == line.npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": expected 'key = value'"));
    }
    const absl::string_view key =
        absl::StripAsciiWhitespace(line.substr(0, eq));
    const absl::string_view value =
        absl::StripAsciiWhitespace(line.substr(eq + 1));
    const int n = line_number;
    absl::Status status;
    if (key == "generator") {
      spec.generator = std::string(value);
    } else if (key == "input") {
      spec.input = std::string(value);
    } else if (key == "output") {
      spec.output = std::string(value);
    } else if (key == "solver") {
      spec.solver = std::string(value);
    } else if (key == "baseline") {
      spec.baseline = std::string(value);
    } else if (key == "planted_k") {
      status = ParseScalar(n, key, value, &spec.planted_k);
    } else if (key == "planted_m") {
      status = ParseScalar(n, key, value, &spec.planted_m);
    } else if (key == "planted_kprime") {
      status = ParseScalar(n, key, value, &spec.planted_kprime);
    } else if (key == "planted_eps") {
      status = ParseScalar(n, key, value, &spec.planted_eps);
    } else if (key == "adversarial_n") {
      status = ParseScalar(n, key, value, &spec.adversarial_n);
    } else if (key == "adversarial_k") {
      status = ParseScalar(n, key, value, &spec.adversarial_k);
    } else if (key == "adversarial_beta") {
      status = ParseScalar(n, key, value, &spec.adversarial_beta);
    } else if (key == "generator_seed") {
      status = ParseScalar(n, key, value, &spec.generator_seed);
    } else if (key == "stochastic_eps") {
      status = ParseScalar(n, key, value, &spec.stochastic_eps);
    } else if (key == "rho") {
      status = ParseList(n, key, value, &spec.rho);
    } else if (key == "sigma") {
      status = ParseSigmaList(n, value, &spec.sigma);
    } else if (key == "k") {
      status = ParseList(n, key, value, &spec.k);
    } else if (key == "seeds") {
      status = ParseList(n, key, value, &spec.seeds);
    } else {
      return KeyError(n, key, "unknown key");
    }
    if (!status.ok()) return status;
  }
  if (absl::Status status = ValidateExperimentSpec(spec); !status.ok()) {
    return status;
  }
  return spec;
}

absl::Status ValidateExperimentSpec(const ExperimentSpec& spec) {
  if (spec.generator != "planted" && spec.generator != "adversarial" &&
      spec.generator != "file") {
    return absl::InvalidArgumentError(
        "generator must be planted, adversarial or file");
  }
  if (spec.generator == "file" && spec.input.empty()) {
    return absl::InvalidArgumentError("generator = file needs an input path");
  }
  if (spec.rho.empty() || spec.sigma.empty() || spec.k.empty() ||
      spec.seeds.empty()) {
    return absl::InvalidArgumentError(
        "rho, sigma, k and seeds must all be non-empty");
  }
  if (!AllDistinct(spec.seeds)) {
    return absl::InvalidArgumentError("seeds must be distinct");
  }
  for (const double rho : spec.rho) {
    if (!(rho > 0.0 && rho <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("rho = %g must lie in (0, 1]", rho));
    }
  }
  for (const int64_t sigma : spec.sigma) {
    if (sigma < 1) return absl::InvalidArgumentError("sigma must be >= 1");
  }
  for (const int32_t k : spec.k) {
    if (k < 1) return absl::InvalidArgumentError("k must be >= 1");
  }
  if (spec.solver != "greedy" && spec.solver != "stochastic") {
    return absl::InvalidArgumentError("solver must be greedy or stochastic");
  }
  if (spec.baseline != "stochastic" && spec.baseline != "lazy") {
    return absl::InvalidArgumentError("baseline must be stochastic or lazy");
  }
  if (!(spec.stochastic_eps > 0.0 && spec.stochastic_eps < 1.0)) {
    return absl::InvalidArgumentError("stochastic_eps must lie in (0, 1)");
  }
  return absl::OkStatus();
}

absl::StatusOr<CoverageInstance> ExperimentInstance(
    const ExperimentSpec& spec) {
  if (spec.generator == "planted") {
    auto planted =
        GeneratePlanted(spec.planted_k, spec.planted_m, spec.planted_kprime,
                        spec.planted_eps, spec.generator_seed);
    if (!planted.ok()) return planted.status();
    return std::move(planted->instance);
  }
  if (spec.generator == "adversarial") {
    auto adversarial =
        GenerateAdversarial(spec.adversarial_n, spec.adversarial_k,
                            spec.adversarial_beta, spec.generator_seed);
    if (!adversarial.ok()) return adversarial.status();
    return std::move(adversarial->instance);
  }
  auto text = ReadFile(spec.input);
  if (!text.ok()) return text.status();
  return ParseEdgeList(*text);
}

absl::StatusOr<std::vector<ExperimentRow>> RunExperiment(
    const ExperimentSpec& spec, const CoverageInstance& instance) {
  if (absl::Status status = ValidateExperimentSpec(spec); !status.ok()) {
    return status;
  }
  for (const int32_t k : spec.k) {
    if (k > instance.num_sets()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "k = %d exceeds the number of sets %d", k, instance.num_sets()));
    }
  }
  const bool stochastic_sketch = spec.solver == "stochastic";
  const bool stochastic_baseline = spec.baseline == "stochastic";

  // The baseline depends on (k, seed) only.
  std::map<std::pair<int32_t, uint64_t>, int64_t> baselines;
  auto baseline = [&](int32_t k, uint64_t seed) -> absl::StatusOr<int64_t> {
    const auto key = std::make_pair(k, seed);
    if (const auto it = baselines.find(key); it != baselines.end()) {
      return it->second;
    }
    int64_t value = 0;
    if (stochastic_baseline) {
      auto solution =
          StochasticGreedy(instance, k, spec.stochastic_eps, seed);
      if (!solution.ok()) return solution.status();
      value = solution->coverage;
    } else {
      value = LazyGreedy(instance, k).coverage;
    }
    baselines[key] = value;
    return value;
  };

  std::vector<double> rhos = spec.rho;
  std::vector<int64_t> sigmas = spec.sigma;
  std::vector<int32_t> ks = spec.k;
  std::vector<uint64_t> seeds = spec.seeds;
  std::sort(rhos.begin(), rhos.end());
  std::sort(sigmas.begin(), sigmas.end());
  std::sort(ks.begin(), ks.end());
  std::sort(seeds.begin(), seeds.end());
  rhos.erase(std::unique(rhos.begin(), rhos.end()), rhos.end());
  sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  const double input_edges = static_cast<double>(instance.num_edges());
  std::vector<ExperimentRow> rows;
  for (const double rho : rhos) {
    for (const int64_t sigma : sigmas) {
      for (const int32_t k : ks) {
        ExperimentRow mean{rho, sigma, k, std::nullopt};
        for (const uint64_t seed : seeds) {
          auto sketch = BuildSketch(instance, SketchParams::Practical(rho, sigma),
                                    HashSource(seed));
          if (!sketch.ok()) return sketch.status();
          std::vector<SetId> chosen;
          if (stochastic_sketch) {
            auto solution =
                StochasticGreedy(sketch->graph, k, spec.stochastic_eps, seed);
            if (!solution.ok()) return solution.status();
            chosen = std::move(solution->chosen);
          } else {
            chosen = LazyGreedy(sketch->graph, k).chosen;
          }
          auto covered = Coverage(instance, chosen);
          if (!covered.ok()) return covered.status();
          auto base = baseline(k, seed);
          if (!base.ok()) return base.status();

          ExperimentRow row{rho, sigma, k, seed};
          row.sketch_edges = static_cast<double>(sketch->graph.num_edges());
          row.sketch_ratio = row.sketch_edges / input_edges;
          row.coverage = static_cast<double>(*covered);
          row.baseline_coverage = static_cast<double>(*base);
          row.quality_ratio =
              *base == 0 ? 1.0 : row.coverage / row.baseline_coverage;
          rows.push_back(row);

          mean.sketch_edges += row.sketch_edges;
          mean.sketch_ratio += row.sketch_ratio;
          mean.coverage += row.coverage;
          mean.baseline_coverage += row.baseline_coverage;
          mean.quality_ratio += row.quality_ratio;
        }
        const double count = static_cast<double>(seeds.size());
        mean.sketch_edges /= count;
        mean.sketch_ratio /= count;
        mean.coverage /= count;
        mean.baseline_coverage /= count;
        mean.quality_ratio /= count;
        rows.push_back(mean);
      }
    }
  }
  return rows;
}

std::string FormatExperimentCsv(const std::vector<ExperimentRow>& rows) {
  std::string out =
      "rho,sigma,k,seed,sketch_edges,sketch_ratio,coverage,"
      "baseline_coverage,quality_ratio\n";
  for (const ExperimentRow& row : rows) {
    absl::StrAppend(
        &out, FormatNumber(row.rho), ",",
        row.sigma == kUnboundedDegree ? std::string("inf")
                                      : absl::StrCat(row.sigma),
        ",", row.k, ",",
        row.seed.has_value() ? absl::StrCat(*row.seed) : std::string("mean"),
        ",", FormatNumber(row.sketch_edges), ",",
        FormatNumber(row.sketch_ratio), ",", FormatNumber(row.coverage), ",",
        FormatNumber(row.baseline_coverage), ",",
        FormatNumber(row.quality_ratio), "\n");
  }
  return out;
}

}  // namespace covsketch
