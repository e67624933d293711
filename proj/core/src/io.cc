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

#include "covsketch/io.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "json.hpp"

namespace covsketch {
namespace {

// The system absl keeps its own string_view type.
absl::string_view View(std::string_view text) {
  return absl::string_view(text.data(), text.size());
}

struct Row {
  SetId set;
  ElementId element;
  int64_t value;
};

struct ParsedRows {
  std::vector<Row> rows;
  int64_t declared_n = 0;
  int64_t declared_m = 0;
  int64_t declared_u = 0;  // 0 when absent
};

absl::Status LineError(int line, absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", what));
}

bool ParseId(absl::string_view token, int64_t* out) {
  return absl::SimpleAtoi(token, out) && *out >= 0 &&
         *out < std::numeric_limits<int32_t>::max();
}

absl::StatusOr<ParsedRows> ParseRows(absl::string_view text, bool valued) {
  ParsedRows parsed;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    std::vector<absl::string_view> tokens =
        absl::StrSplit(line, absl::ByAnyChar(" \t"), absl::SkipEmpty());
    if (line.front() == '#') {
      const absl::string_view key = tokens[0];
      int64_t* target = key == "#n"   ? &parsed.declared_n
                        : key == "#m" ? &parsed.declared_m
                        : key == "#U" ? &parsed.declared_u
                                      : nullptr;
      if (target == nullptr) continue;
      if (tokens.size() != 2 || !ParseId(tokens[1], target)) {
        return LineError(line_number,
                         absl::StrCat("bad directive '", line, "'"));
      }
      continue;
    }
    const size_t expected = valued ? 3 : 2;
    if (tokens.size() != expected) {
      return LineError(line_number,
                       absl::StrFormat("expected %d fields, found %d",
                                       expected, tokens.size()));
    }
    int64_t set = 0, element = 0, value = 0;
    if (!ParseId(tokens[0], &set) || !ParseId(tokens[1], &element) ||
        (valued && !ParseId(tokens[2], &value))) {
      return LineError(line_number,
                       absl::StrCat("malformed edge '", line, "'"));
    }
    parsed.rows.push_back({static_cast<SetId>(set),
                           static_cast<ElementId>(element), value});
  }
  if (parsed.rows.empty()) {
    return absl::InvalidArgumentError("empty instance");
  }
  return parsed;
}

absl::StatusOr<CoverageInstance> BuildBase(const ParsedRows& parsed) {
  int64_t n = parsed.declared_n;
  int64_t m = parsed.declared_m;
  std::vector<Edge> edges;
  edges.reserve(parsed.rows.size());
  for (const Row& row : parsed.rows) {
    n = std::max<int64_t>(n, row.set + 1);
    m = std::max<int64_t>(m, row.element + 1);
    edges.push_back({row.set, row.element});
  }
  return CoverageInstance::FromEdges(static_cast<int32_t>(n),
                                     static_cast<int32_t>(m), std::move(edges));
}

int64_t EdgeKey(SetId set, ElementId element) {
  return (static_cast<int64_t>(set) << 32) | static_cast<uint32_t>(element);
}

// Per-edge numerators aligned with the element-major adjacency of `base`.
absl::StatusOr<std::vector<int32_t>> AlignEdgeValues(
    const CoverageInstance& base, const std::vector<Row>& rows) {
  absl::flat_hash_map<int64_t, int64_t> by_edge;
  for (const Row& row : rows) {
    const auto [it, inserted] =
        by_edge.try_emplace(EdgeKey(row.set, row.element), row.value);
    if (!inserted && it->second != row.value) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "edge (%d, %d) listed with values %d and %d", row.set, row.element,
          it->second, row.value));
    }
  }
  std::vector<int32_t> units;
  units.reserve(base.num_edges());
  for (ElementId v = 0; v < base.num_elements(); ++v) {
    for (const SetId s : base.sets_of(v)) {
      units.push_back(static_cast<int32_t>(by_edge.at(EdgeKey(s, v))));
    }
  }
  return units;
}

absl::StatusOr<std::pair<CoverageInstance, EdgeFractions>> ParseFractions(
    std::string_view text) {
  auto parsed = ParseRows(View(text), /*valued=*/true);
  if (!parsed.ok()) return parsed.status();
  if (parsed->declared_u < 1) {
    return absl::InvalidArgumentError("missing '#U <resolution>' header");
  }
  auto base = BuildBase(*parsed);
  if (!base.ok()) return base.status();
  auto units = AlignEdgeValues(*base, parsed->rows);
  if (!units.ok()) return units.status();
  auto alpha = MakeFractionalInstance(*base, *std::move(units),
                                      static_cast<int32_t>(parsed->declared_u));
  if (!alpha.ok()) return alpha.status();
  return std::make_pair(std::move(alpha->base), std::move(alpha->alpha));
}

std::string FormatDouble(double x) { return absl::StrFormat("%.10g", x); }

}  // namespace

absl::StatusOr<CoverageInstance> ParseEdgeList(std::string_view text) {
  auto parsed = ParseRows(View(text), /*valued=*/false);
  if (!parsed.ok()) return parsed.status();
  return BuildBase(*parsed);
}

absl::StatusOr<WeightedInstance> ParseWeightedEdgeList(std::string_view text) {
  auto parsed = ParseRows(View(text), /*valued=*/true);
  if (!parsed.ok()) return parsed.status();
  auto base = BuildBase(*parsed);
  if (!base.ok()) return base.status();
  std::vector<int32_t> weights(base->num_elements(), 0);
  int64_t max_weight = 1;
  for (const Row& row : parsed->rows) {
    int32_t& w = weights[row.element];
    if (w != 0 && w != row.value) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "element %d listed with weights %d and %d", row.element, w,
          row.value));
    }
    w = static_cast<int32_t>(row.value);
    max_weight = std::max(max_weight, row.value);
  }
  for (int32_t& w : weights) w = std::max(w, 1);  // isolated elements
  if (parsed->declared_u > 0) max_weight = parsed->declared_u;
  return MakeWeightedInstance(*std::move(base), std::move(weights),
                              static_cast<int32_t>(max_weight));
}

absl::StatusOr<FractionalInstance> ParseFractionalEdgeList(
    std::string_view text) {
  auto parts = ParseFractions(text);
  if (!parts.ok()) return parts.status();
  return FractionalInstance{std::move(parts->first), std::move(parts->second)};
}

absl::StatusOr<ProbabilisticInstance> ParseProbabilisticEdgeList(
    std::string_view text) {
  auto parts = ParseFractions(text);
  if (!parts.ok()) return parts.status();
  return ProbabilisticInstance{std::move(parts->first),
                               std::move(parts->second)};
}

std::string FormatEdgeList(const CoverageInstance& instance,
                           const std::vector<std::string>& header) {
  std::string out;
  for (const std::string& line : header) absl::StrAppend(&out, "# ", line, "\n");
  absl::StrAppend(&out, "#n ", instance.num_sets(), "\n#m ",
                  instance.num_elements(), "\n");
  for (SetId s = 0; s < instance.num_sets(); ++s) {
    for (const ElementId e : instance.elements_of(s)) {
      absl::StrAppend(&out, s, " ", e, "\n");
    }
  }
  return out;
}

std::string FormatWeightedEdgeList(const WeightedInstance& instance) {
  const CoverageInstance& base = instance.base;
  std::string out = absl::StrCat("#U ", instance.max_weight, "\n#n ",
                                 base.num_sets(), "\n#m ",
                                 base.num_elements(), "\n");
  for (SetId s = 0; s < base.num_sets(); ++s) {
    for (const ElementId e : base.elements_of(s)) {
      absl::StrAppend(&out, s, " ", e, " ", instance.weights[e], "\n");
    }
  }
  return out;
}

std::string FormatFractionalEdgeList(const CoverageInstance& base,
                                     const EdgeFractions& alpha) {
  std::string out = absl::StrCat("#U ", alpha.resolution, "\n#n ",
                                 base.num_sets(), "\n#m ",
                                 base.num_elements(), "\n");
  for (ElementId v = 0; v < base.num_elements(); ++v) {
    const auto sets = base.sets_of(v);
    const auto units = EdgeUnits(base, alpha, v);
    for (size_t i = 0; i < sets.size(); ++i) {
      absl::StrAppend(&out, sets[i], " ", v, " ", units[i], "\n");
    }
  }
  return out;
}

std::string FormatSketch(const Sketch& sketch) {
  const SketchParams& p = sketch.params;
  std::string header;
  if (p.mode == SketchMode::kPractical) {
    header = absl::StrCat(
        "#sketch mode=practical seed=", sketch.hash_seed,
        " rho=", FormatDouble(p.rho), " sigma=",
        p.sigma == kUnboundedDegree ? std::string("inf")
                                    : absl::StrCat(p.sigma));
  } else {
    header = absl::StrCat("#sketch mode=theory seed=", sketch.hash_seed,
                          " k=", p.k, " eps=", FormatDouble(p.eps),
                          " delta_dprime=", FormatDouble(p.delta_dprime),
                          " edge_budget=", p.edge_budget,
                          " degree_cap=", p.degree_cap);
  }
  absl::StrAppend(&header, "\n#original_m ", sketch.original_num_elements,
                  "\n#expansion ", sketch.expansion_factor, "\n");
  return header + FormatEdgeList(sketch.graph);
}

std::string FormatSolution(const Solution& solution) {
  std::string out = absl::StrCat("value=", solution.coverage,
                                 " k=", solution.chosen.size(), "\n");
  for (const SetId s : solution.chosen) absl::StrAppend(&out, s, "\n");
  return out;
}

absl::StatusOr<Solution> ParseSolution(std::string_view text) {
  Solution solution;
  int line_number = 0;
  bool seen_header = false;
  size_t declared_k = 0;
  for (absl::string_view line : absl::StrSplit(View(text), '\n')) {
    ++line_number;
    line = absl::StripAsciiWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      seen_header = true;
      int64_t k = 0;
      std::vector<absl::string_view> fields =
          absl::StrSplit(line, ' ', absl::SkipEmpty());
      if (fields.size() != 2 || !absl::ConsumePrefix(&fields[0], "value=") ||
          !absl::ConsumePrefix(&fields[1], "k=") ||
          !absl::SimpleAtoi(fields[0], &solution.coverage) ||
          !absl::SimpleAtoi(fields[1], &k) || k < 0) {
        return LineError(line_number, "expected 'value=<v> k=<k>'");
      }
      declared_k = static_cast<size_t>(k);
      continue;
    }
    int64_t id = 0;
    if (!ParseId(line, &id)) return LineError(line_number, "bad set id");
    solution.chosen.push_back(static_cast<SetId>(id));
  }
  if (!seen_header) return absl::InvalidArgumentError("empty solution file");
  if (solution.chosen.size() != declared_k) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "header announces %d sets, found %d", declared_k,
        solution.chosen.size()));
  }
  return solution;
}

std::string StatsJson(const InstanceStats& stats) {
  nlohmann::ordered_json json;
  json["n"] = stats.num_sets;
  json["m"] = stats.num_elements;
  json["edge_count"] = stats.num_edges;
  json["max_element_degree"] = stats.max_element_degree;
  json["max_set_size"] = stats.max_set_size;
  json["element_degree_histogram"] = stats.element_degree_histogram;
  json["set_size_histogram"] = stats.set_size_histogram;
  return json.dump();
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << content;
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path));
  return absl::OkStatus();
}

}  // namespace covsketch
