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

// The adaptive sampling sketch of a coverage instance.
//
// A sketch keeps every set but only a sample of the elements, and caps the
// degree of each kept element. Greedy-type solvers run on the sketch instead
// of the input. Two parameterizations are supported:
//
//  * theory: elements are taken in increasing hash order, each contributing
//    min(degree_cap, degree) edges, until the retained edge mass reaches
//    edge_budget. Both quantities derive from (k, eps, delta'') and the
//    instance dimensions, see TheoryParams().
//
//  * practical: every element is kept independently with probability rho
//    (hash < rho) and keeps at most sigma edges.
//
// In both modes a capped element keeps its edges to the smallest set ids.

#ifndef COVSKETCH_SKETCH_H_
#define COVSKETCH_SKETCH_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "covsketch/hash.h"
#include "covsketch/instance.h"

namespace covsketch {

inline constexpr double kDefaultDeltaDoublePrime = 0.5;
inline constexpr int64_t kUnboundedDegree = std::numeric_limits<int64_t>::max();

enum class SketchMode { kTheory, kPractical };

struct SketchParams {
  SketchMode mode = SketchMode::kPractical;

  // Theory mode.
  int32_t k = 0;
  double eps = 0.0;
  double delta_dprime = kDefaultDeltaDoublePrime;
  double delta = 0.0;
  int64_t edge_budget = 0;
  int64_t degree_cap = 0;

  // Practical mode.
  double rho = 1.0;
  int64_t sigma = kUnboundedDegree;

  static SketchParams Practical(double rho, int64_t sigma) {
    SketchParams params;
    params.mode = SketchMode::kPractical;
    params.rho = rho;
    params.sigma = sigma;
    return params;
  }

  int64_t DegreeCap() const {
    return mode == SketchMode::kTheory ? degree_cap : sigma;
  }

  friend bool operator==(const SketchParams&, const SketchParams&) = default;
};

// Derives theory-mode parameters, all logarithms natural:
//
//   degree_cap  = ceil(n ln(1/eps) / (eps k))
//   delta       = delta'' ln(max(2, ceil(ln m / ln(1/(1-eps)))))
//   edge_budget = ceil(24 n delta ln(1/eps) ln n / ((1-eps) eps^3)),
//                 clamped to [1, num_edges]
//
// Requires 1 <= k <= n, 0 < eps < 1, 0 < delta'' <= 1 and m >= 2.
absl::StatusOr<SketchParams> TheoryParams(int64_t num_sets,
                                          int64_t num_elements,
                                          int64_t num_edges, int32_t k,
                                          double eps,
                                          double delta_dprime =
                                              kDefaultDeltaDoublePrime);

// The edge budget before clamping; grows like n log n / eps^3.
double UnclampedEdgeBudget(int64_t num_sets, int64_t num_elements, double eps,
                           double delta_dprime);

absl::Status ValidateSketchParams(const SketchParams& params);

struct Sketch {
  // The reduced graph. It has the same sets as the input; its element i is
  // the i-th selected element (or element copy).
  CoverageInstance graph;
  uint64_t hash_seed = 0;
  SketchParams params;
  // Original element id and copy index of each sketch element, in selection
  // order. Copy indices are 0 for sketches of plain instances.
  std::vector<ElementId> selected_elements;
  std::vector<int32_t> selected_copies;
  int64_t original_num_elements = 0;
  // How many copies of each element the implicit expansion holds: 1 for
  // plain and weighted instances (weights vary per element), the resolution
  // for fractional instances, and zeta for probabilistic ones.
  int64_t expansion_factor = 1;
  // Theory mode only: every element was consumed before the retained edge
  // mass reached the budget.
  bool exhausted = false;

  friend bool operator==(const Sketch&, const Sketch&) = default;
};

absl::StatusOr<Sketch> BuildSketch(const CoverageInstance& instance,
                                   const SketchParams& params,
                                   const HashSource& source);

// BuildSketch with caller-provided element hashes; `hashes[e]` replaces
// source.ElementHash(e). Used to replay an externally fixed hash order.
absl::StatusOr<Sketch> BuildSketchWithHashes(const CoverageInstance& instance,
                                             const SketchParams& params,
                                             std::span<const double> hashes,
                                             uint64_t hash_seed);

// Theory-mode construction over an explicit element order: takes elements
// from `order` front to back until the edge budget is met. `order` must not
// repeat elements.
absl::StatusOr<Sketch> BuildSketchInOrder(const CoverageInstance& instance,
                                          const SketchParams& params,
                                          std::span<const ElementId> order,
                                          uint64_t hash_seed);

// Random access to an instance that is never materialized.
struct EdgeOracle {
  std::function<int64_t(ElementId)> degree;
  // The i-th set containing the element, in increasing id order.
  std::function<SetId(ElementId, int64_t)> edge;
};

struct LazySketch {
  Sketch sketch;
  int64_t oracle_lookups = 0;
};

// Theory-mode sketch construction that draws uniformly random unseen
// elements (seeded by source.seed()) in place of scanning hashes, touching
// one degree probe per drawn element plus one lookup per kept edge. The
// draw order plays the role of the hash order.
absl::StatusOr<LazySketch> BuildSketchLazy(int32_t num_sets,
                                           int32_t num_elements,
                                           const EdgeOracle& oracle,
                                           const SketchParams& params,
                                           const HashSource& source);

// Element-weighted, fractional and probabilistic instances are sketched as
// implicit unweighted expansions. Copies are hashed independently with
// source.CopyHash(element, copy); nothing proportional to the expansion is
// stored beyond what the sketch keeps (theory mode additionally sorts the
// hashes of the candidate copies).
//
//  * weighted: element v becomes weights[v] copies with v's full edge list.
//  * fractional: U copies; copy j is linked to S iff j < alpha(S, v) * U.
//  * probabilistic: zeta copies; copy j is linked to S with probability
//    alpha(S, v), decided by source.EdgeCoin(v, j, S).
//
// Copies left without edges are not part of the expansion.
absl::StatusOr<Sketch> SketchWeighted(const WeightedInstance& instance,
                                      const SketchParams& params,
                                      const HashSource& source);
absl::StatusOr<Sketch> SketchFractional(const FractionalInstance& instance,
                                        const SketchParams& params,
                                        const HashSource& source);

inline constexpr int64_t kDefaultExpansionBudget = 100'000'000;

// zeta = ceil(12 (n + 1 + ln n) U / eps^2).
int64_t ProbabilisticCopies(int32_t num_sets, int32_t resolution, double eps);

// Fails when zeta times the number of edges exceeds `expansion_budget`.
absl::StatusOr<Sketch> SketchProbabilistic(
    const ProbabilisticInstance& instance, double eps,
    const SketchParams& params, const HashSource& source,
    int64_t expansion_budget = kDefaultExpansionBudget);

// Explicitly materialized expansions, for verification against the implicit
// constructors. Element i of `instance` is copy `copies[i]` of `origins[i]`,
// listed in (origin, copy) order.
struct Expansion {
  CoverageInstance instance;
  std::vector<ElementId> origins;
  std::vector<int32_t> copies;
};

absl::StatusOr<Expansion> ExpandWeighted(const WeightedInstance& instance);
absl::StatusOr<Expansion> ExpandFractional(const FractionalInstance& instance);
absl::StatusOr<Expansion> ExpandProbabilistic(
    const ProbabilisticInstance& instance, double eps,
    const HashSource& source,
    int64_t expansion_budget = kDefaultExpansionBudget);

}  // namespace covsketch

#endif  // COVSKETCH_SKETCH_H_
