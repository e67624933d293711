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
#include <cmath>
#include <random>
#include <set>

#include "covsketch/generators.h"
#include "covsketch/hash.h"
#include "covsketch/io.h"
#include "covsketch/sketch.h"
#include "covsketch/solvers.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace covsketch {
namespace {

using ::covsketch::testing::FromSets;
using ::covsketch::testing::Vec;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

SketchParams Theory(int32_t k, double eps, int64_t budget, int64_t cap) {
  SketchParams params;
  params.mode = SketchMode::kTheory;
  params.k = k;
  params.eps = eps;
  params.edge_budget = budget;
  params.degree_cap = cap;
  return params;
}

// Unit-degree instance: element e belongs to set e mod n.
CoverageInstance UnitDegree(int32_t n, int32_t m) {
  std::vector<Edge> edges;
  for (ElementId e = 0; e < m; ++e) edges.push_back({e % n, e});
  return *CoverageInstance::FromEdges(n, m, std::move(edges));
}

std::vector<std::vector<SetId>> RandomFamilies(int32_t n, int count,
                                               uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<SetId>> families;
  for (int i = 0; i < count; ++i) {
    std::vector<SetId> family;
    for (SetId s = 0; s < n; ++s) {
      if (rng() % 3 == 0) family.push_back(s);
    }
    families.push_back(family);
  }
  return families;
}

// ---- hashing ----

TEST(HashTest, Deterministic) {
  const HashSource a(42);
  const HashSource b(42);
  for (int64_t id = 0; id < 1000; ++id) {
    EXPECT_EQ(a.ElementHash(id), b.ElementHash(id));
    EXPECT_GE(a.ElementHash(id), 0.0);
    EXPECT_LT(a.ElementHash(id), 1.0);
  }
}

TEST(HashTest, ChiSquareUniformity) {
  constexpr int kBuckets = 16;
  constexpr int kIds = 1'000'000;
  // Upper 0.999 quantile of chi-square with 15 degrees of freedom.
  constexpr double kCritical = 37.697;
  for (const uint64_t seed : {1ULL, 7ULL, 123456789ULL}) {
    const HashSource source(seed);
    std::vector<int64_t> counts(kBuckets, 0);
    for (int id = 0; id < kIds; ++id) {
      ++counts[static_cast<int>(source.ElementHash(id) * kBuckets)];
    }
    const double expected = static_cast<double>(kIds) / kBuckets;
    double statistic = 0.0;
    for (const int64_t c : counts) {
      statistic += (c - expected) * (c - expected) / expected;
    }
    EXPECT_LT(statistic, kCritical) << "seed " << seed;
  }
}

TEST(HashTest, SeedsDisagree) {
  const HashSource a(1);
  const HashSource b(2);
  int differing = 0;
  for (int id = 0; id < 10000; ++id) {
    differing += a.ElementHash(id) != b.ElementHash(id);
  }
  EXPECT_GE(differing, 9999);
}

TEST(HashTest, CopyZeroIsTheElementHash) {
  const HashSource source(9);
  for (int id = 0; id < 100; ++id) {
    EXPECT_EQ(source.CopyHash(id, 0), source.ElementHash(id));
    EXPECT_NE(source.CopyHash(id, 1), source.ElementHash(id));
  }
}

// ---- theory parameters ----

TEST(TheoryParamsTest, DegreeCap) {
  auto params = TheoryParams(1000, 2000, 5000, 100, 0.5);
  ASSERT_TRUE(params.ok()) << params.status();
  EXPECT_EQ(params->degree_cap, 14);
}

TEST(TheoryParamsTest, OracleValues) {
  auto params = TheoryParams(20, 100000, 100000, 2, 0.5, 0.5);
  ASSERT_TRUE(params.ok());
  EXPECT_EQ(params->edge_budget, 22592);
  EXPECT_EQ(params->degree_cap, 14);
  EXPECT_NEAR(params->delta, 1.41660, 1e-4);

  auto loose = TheoryParams(10, 10000, 10000, 2, 0.9, 0.5);
  ASSERT_TRUE(loose.ok());
  EXPECT_EQ(loose->edge_budget, 554);
  EXPECT_EQ(loose->degree_cap, 1);
}

TEST(TheoryParamsTest, RejectsOutOfRange) {
  EXPECT_FALSE(TheoryParams(10, 100, 100, 2, 1.0).ok());
  EXPECT_FALSE(TheoryParams(10, 100, 100, 2, 0.0).ok());
  EXPECT_FALSE(TheoryParams(10, 100, 100, 0, 0.5).ok());
  EXPECT_FALSE(TheoryParams(10, 100, 100, 11, 0.5).ok());
  EXPECT_FALSE(TheoryParams(10, 100, 100, 2, 0.5, 0.0).ok());
  EXPECT_FALSE(TheoryParams(10, 100, 100, 2, 0.5, 1.5).ok());
  EXPECT_FALSE(TheoryParams(10, 1, 100, 2, 0.5).ok());
}

TEST(TheoryParamsTest, ClampsToEdgeCount) {
  const CoverageInstance instance = GenerateRandom(8, 40, 0.3, 5);
  auto params = TheoryParams(8, 40, instance.num_edges(), 2, 0.3);
  ASSERT_TRUE(params.ok());
  EXPECT_GT(UnclampedEdgeBudget(8, 40, 0.3, kDefaultDeltaDoublePrime),
            static_cast<double>(instance.num_edges()));
  EXPECT_EQ(params->edge_budget, instance.num_edges());

  // Every element is consumed, each keeping min(cap, degree) edges.
  auto sketch = BuildSketch(instance, *params, HashSource(3));
  ASSERT_TRUE(sketch.ok());
  EXPECT_EQ(sketch->graph.num_elements(), instance.num_elements());
  std::vector<Edge> capped;
  for (ElementId e = 0; e < instance.num_elements(); ++e) {
    const auto sets = instance.sets_of(e);
    for (int64_t i = 0; i < std::min<int64_t>(params->degree_cap, sets.size());
         ++i) {
      capped.push_back({sets[i], e});
    }
  }
  std::sort(capped.begin(), capped.end());
  std::vector<Edge> renamed;
  for (const Edge& edge : sketch->graph.Edges()) {
    renamed.push_back({edge.set, sketch->selected_elements[edge.element]});
  }
  std::sort(renamed.begin(), renamed.end());
  EXPECT_EQ(renamed, capped);
}

// ---- construction ----

TEST(BuildSketchTest, PracticalFullKeepsInstance) {
  const CoverageInstance instance = GenerateRandom(6, 30, 0.4, 1);
  auto sketch =
      BuildSketch(instance, SketchParams::Practical(1.0, kUnboundedDegree),
                  HashSource(77));
  ASSERT_TRUE(sketch.ok());
  EXPECT_EQ(sketch->graph, instance);
  EXPECT_EQ(sketch->original_num_elements, 30);
}

TEST(BuildSketchTest, TheoryTakesSmallestHashes) {
  const CoverageInstance instance = UnitDegree(3, 4);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const HashSource source(seed);
    auto sketch = BuildSketch(instance, Theory(1, 0.5, 2, 5), source);
    ASSERT_TRUE(sketch.ok());
    std::vector<ElementId> by_hash = {0, 1, 2, 3};
    std::sort(by_hash.begin(), by_hash.end(), [&](ElementId a, ElementId b) {
      return source.ElementHash(a) < source.ElementHash(b);
    });
    EXPECT_THAT(sketch->selected_elements, ElementsAre(by_hash[0], by_hash[1]));
    EXPECT_EQ(sketch->graph.num_edges(), 2);
  }
}

TEST(BuildSketchTest, SigmaOneKeepsOneEdge) {
  const CoverageInstance instance = GenerateRandom(10, 200, 0.5, 8);
  auto sketch =
      BuildSketch(instance, SketchParams::Practical(0.5, 1), HashSource(2));
  ASSERT_TRUE(sketch.ok());
  EXPECT_EQ(sketch->graph.num_edges(), sketch->graph.num_elements());
  for (ElementId e = 0; e < sketch->graph.num_elements(); ++e) {
    const ElementId original = sketch->selected_elements[e];
    EXPECT_THAT(Vec(sketch->graph.sets_of(e)),
                ElementsAre(instance.sets_of(original)[0]));
  }
}

TEST(BuildSketchTest, PracticalSamplesByHash) {
  const CoverageInstance instance = GenerateRandom(5, 500, 0.3, 4);
  const HashSource source(31);
  auto sketch =
      BuildSketch(instance, SketchParams::Practical(0.2, 2), source);
  ASSERT_TRUE(sketch.ok());
  std::vector<ElementId> expected;
  for (ElementId e = 0; e < 500; ++e) {
    if (source.ElementHash(e) < 0.2) expected.push_back(e);
  }
  EXPECT_EQ(sketch->selected_elements, expected);
  for (ElementId e = 0; e < sketch->graph.num_elements(); ++e) {
    EXPECT_EQ(sketch->graph.degree(e),
              std::min<int64_t>(2, instance.degree(expected[e])));
  }
}

TEST(BuildSketchTest, TheoryInvariants) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const CoverageInstance instance =
        GenerateRandom(12, 300, 0.2 + 0.02 * (seed % 10), seed);
    const HashSource source(seed * 7 + 1);
    const SketchParams params = Theory(3, 0.4, 50 + 10 * seed, 1 + seed % 4);
    auto sketch = BuildSketch(instance, params, source);
    ASSERT_TRUE(sketch.ok());
    int64_t mass = 0;
    double last = -1.0;
    for (size_t i = 0; i < sketch->selected_elements.size(); ++i) {
      const ElementId e = sketch->selected_elements[i];
      EXPECT_GE(source.ElementHash(e), last);
      last = source.ElementHash(e);
      EXPECT_EQ(sketch->graph.degree(static_cast<ElementId>(i)),
                std::min(params.degree_cap, instance.degree(e)));
      mass += sketch->graph.degree(static_cast<ElementId>(i));
    }
    EXPECT_EQ(mass, sketch->graph.num_edges());
    EXPECT_EQ(sketch->exhausted, mass < params.edge_budget);
    if (sketch->exhausted) {
      EXPECT_EQ(sketch->graph.num_elements(), instance.num_elements());
      continue;
    }
    // Stops as soon as the budget is reached.
    EXPECT_LT(mass - sketch->graph.degree(static_cast<ElementId>(
                         sketch->selected_elements.size() - 1)),
              params.edge_budget);
    // Every unselected element hashes above every selected one.
    std::set<ElementId> chosen(sketch->selected_elements.begin(),
                               sketch->selected_elements.end());
    for (ElementId e = 0; e < instance.num_elements(); ++e) {
      if (!chosen.count(e)) EXPECT_GE(source.ElementHash(e), last);
    }
  }
}

TEST(BuildSketchTest, Deterministic) {
  const CoverageInstance instance = GenerateRandom(9, 400, 0.3, 2);
  for (const SketchParams& params :
       {SketchParams::Practical(0.3, 3), Theory(2, 0.3, 200, 4)}) {
    auto a = BuildSketch(instance, params, HashSource(5));
    auto b = BuildSketch(instance, params, HashSource(5));
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_EQ(*a, *b);
  }
}

TEST(BuildSketchTest, PracticalMonotone) {
  const CoverageInstance instance = GenerateRandom(8, 600, 0.4, 6);
  const HashSource source(12);
  const std::vector<double> rhos = {0.05, 0.1, 0.3, 0.6, 1.0};
  for (size_t i = 0; i + 1 < rhos.size(); ++i) {
    auto small = BuildSketch(instance, SketchParams::Practical(rhos[i], 3), source);
    auto large =
        BuildSketch(instance, SketchParams::Practical(rhos[i + 1], 3), source);
    std::set<ElementId> big(large->selected_elements.begin(),
                            large->selected_elements.end());
    for (const ElementId e : small->selected_elements) EXPECT_TRUE(big.count(e));
  }
  for (int64_t sigma = 1; sigma < 8; ++sigma) {
    auto narrow =
        BuildSketch(instance, SketchParams::Practical(0.4, sigma), source);
    auto wide =
        BuildSketch(instance, SketchParams::Practical(0.4, sigma + 1), source);
    ASSERT_EQ(narrow->selected_elements, wide->selected_elements);
    for (ElementId e = 0; e < narrow->graph.num_elements(); ++e) {
      const auto few = Vec(narrow->graph.sets_of(e));
      const auto many = Vec(wide->graph.sets_of(e));
      EXPECT_TRUE(std::includes(many.begin(), many.end(), few.begin(), few.end()));
    }
  }
}

TEST(BuildSketchTest, RejectsBadParams) {
  const CoverageInstance instance = ::covsketch::testing::ThreeSets();
  EXPECT_FALSE(
      BuildSketch(instance, SketchParams::Practical(0.0, 1), HashSource(1)).ok());
  EXPECT_FALSE(
      BuildSketch(instance, SketchParams::Practical(1.5, 1), HashSource(1)).ok());
  EXPECT_FALSE(
      BuildSketch(instance, SketchParams::Practical(0.5, 0), HashSource(1)).ok());
  EXPECT_FALSE(BuildSketch(instance, Theory(1, 0.5, 0, 1), HashSource(1)).ok());
}

TEST(BuildSketchTest, InOrderRejectsRepeats) {
  const CoverageInstance instance = ::covsketch::testing::ThreeSets();
  const std::vector<ElementId> order = {1, 1, 2};
  EXPECT_FALSE(BuildSketchInOrder(instance, Theory(1, 0.5, 10, 3), order, 0).ok());
  const std::vector<ElementId> outside = {7};
  EXPECT_FALSE(
      BuildSketchInOrder(instance, Theory(1, 0.5, 10, 3), outside, 0).ok());
}

TEST(BuildSketchTest, SerializedHeader) {
  const CoverageInstance instance = ::covsketch::testing::ThreeSets();
  auto sketch = BuildSketch(instance, SketchParams::Practical(1.0, kUnboundedDegree),
                            HashSource(4));
  const std::string text = FormatSketch(*sketch);
  EXPECT_THAT(text, HasSubstr("#sketch mode=practical seed=4 rho=1 sigma=inf"));
  auto reloaded = ParseEdgeList(text);
  ASSERT_TRUE(reloaded.ok());
  EXPECT_EQ(*reloaded, sketch->graph);
}

// ---- concentration of the hash threshold ----

TEST(ConcentrationTest, ThresholdCountWithinBounds) {
  const CoverageInstance instance = UnitDegree(10, 10000);
  auto params = TheoryParams(10, 10000, instance.num_edges(), 2, 0.9);
  ASSERT_TRUE(params.ok());
  const double budget = static_cast<double>(params->edge_budget);
  const double threshold = 2.0 * budget / instance.num_elements();
  int inside = 0;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    const HashSource source(seed);
    int64_t count = 0;
    for (ElementId e = 0; e < instance.num_elements(); ++e) {
      count += source.ElementHash(e) < threshold;
    }
    inside += count >= budget && count <= 3 * budget;
  }
  EXPECT_GE(inside, 990);
}

// ---- lazy construction ----

EdgeOracle OracleFor(const CoverageInstance& instance) {
  return {[&instance](ElementId e) { return instance.degree(e); },
          [&instance](ElementId e, int64_t i) { return instance.sets_of(e)[i]; }};
}

// The lazy draw order, replayed with a dense Fisher-Yates shuffle.
std::vector<ElementId> DrawOrder(int32_t m, uint64_t seed) {
  std::vector<ElementId> order(m);
  for (int32_t i = 0; i < m; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (int32_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<int32_t> pick(i, m - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  return order;
}

TEST(LazySketchTest, ExhaustionTouchesEverything) {
  const CoverageInstance instance = GenerateRandom(7, 120, 0.3, 3);
  const SketchParams params =
      Theory(2, 0.5, instance.num_edges(), kUnboundedDegree);
  auto lazy = BuildSketchLazy(7, 120, OracleFor(instance), params, HashSource(8));
  ASSERT_TRUE(lazy.ok()) << lazy.status();
  EXPECT_EQ(lazy->sketch.graph.num_elements(), 120);
  EXPECT_EQ(lazy->oracle_lookups, instance.num_edges() + 120);
  EXPECT_FALSE(lazy->sketch.exhausted);
}

TEST(LazySketchTest, UniformDegreesStopAfterBudget) {
  constexpr int kDegree = 4;
  std::vector<std::vector<int32_t>> sets(kDegree);
  for (int e = 0; e < 100; ++e) {
    for (int s = 0; s < kDegree; ++s) sets[s].push_back(e);
  }
  const CoverageInstance instance = FromSets(sets);
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto lazy = BuildSketchLazy(kDegree, 100, OracleFor(instance),
                                Theory(1, 0.5, 10 * kDegree, kDegree),
                                HashSource(seed));
    ASSERT_TRUE(lazy.ok());
    EXPECT_EQ(lazy->sketch.selected_elements.size(), 10u);
    EXPECT_EQ(lazy->oracle_lookups, 10 + 10 * kDegree);
  }
}

TEST(LazySketchTest, Deterministic) {
  const CoverageInstance instance = GenerateRandom(9, 500, 0.2, 1);
  const SketchParams params = Theory(2, 0.5, 150, 3);
  auto a = BuildSketchLazy(9, 500, OracleFor(instance), params, HashSource(4));
  auto b = BuildSketchLazy(9, 500, OracleFor(instance), params, HashSource(4));
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->sketch, b->sketch);
  EXPECT_EQ(a->oracle_lookups, b->oracle_lookups);
}

TEST(LazySketchTest, MatchesReplayedHashOrder) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const int32_t m = 50 + static_cast<int32_t>(seed) * 13;
    const CoverageInstance instance = GenerateRandom(6 + seed % 5, m, 0.25, seed);
    const SketchParams params = Theory(2, 0.5, 20 + 5 * seed, 1 + seed % 3);
    auto lazy = BuildSketchLazy(instance.num_sets(), m, OracleFor(instance),
                                params, HashSource(seed));
    ASSERT_TRUE(lazy.ok());

    const std::vector<ElementId> order = DrawOrder(m, seed);
    std::vector<double> hashes(m);
    for (int32_t i = 0; i < m; ++i) hashes[order[i]] = (i + 0.5) / m;
    auto replayed = BuildSketchWithHashes(instance, params, hashes, seed);
    ASSERT_TRUE(replayed.ok());
    EXPECT_EQ(lazy->sketch, *replayed) << "seed " << seed;

    auto in_order = BuildSketchInOrder(instance, params, order, seed);
    ASSERT_TRUE(in_order.ok());
    EXPECT_EQ(lazy->sketch, *in_order);
  }
}

TEST(LazySketchTest, RejectsBadOracle) {
  const CoverageInstance instance = ::covsketch::testing::ThreeSets();
  EdgeOracle bad = OracleFor(instance);
  bad.edge = [](ElementId, int64_t) { return SetId{9}; };
  EXPECT_FALSE(
      BuildSketchLazy(3, 5, bad, Theory(1, 0.5, 10, 3), HashSource(1)).ok());
  EXPECT_FALSE(BuildSketchLazy(3, 5, OracleFor(instance),
                               SketchParams::Practical(1.0, 1), HashSource(1))
                   .ok());
}

// ---- weighted variants ----

WeightedInstance RandomWeighted(uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int32_t n = 2 + seed % 6;
  const int32_t m = 5 + seed % 30;
  const CoverageInstance base = GenerateRandom(n, m, 0.35, seed);
  const int32_t max_weight = 1 + seed % 5;
  std::vector<int32_t> weights(m);
  for (int32_t& w : weights) w = 1 + rng() % max_weight;
  return *MakeWeightedInstance(base, weights, max_weight);
}

FractionalInstance RandomFractional(uint64_t seed) {
  std::mt19937_64 rng(seed + 1000);
  const int32_t n = 2 + seed % 6;
  const int32_t m = 5 + seed % 30;
  const CoverageInstance base = GenerateRandom(n, m, 0.35, seed);
  const int32_t resolution = 1 + seed % 6;
  std::vector<int32_t> units(base.num_edges());
  for (int32_t& u : units) u = rng() % (resolution + 1);
  return *MakeFractionalInstance(base, units, resolution);
}

std::vector<double> CopyHashes(const Expansion& expansion,
                               const HashSource& source) {
  std::vector<double> hashes(expansion.origins.size());
  for (size_t i = 0; i < hashes.size(); ++i) {
    hashes[i] = source.CopyHash(expansion.origins[i], expansion.copies[i]);
  }
  return hashes;
}

TEST(WeightedSketchTest, UnitWeightsMatchPlainSketch) {
  const CoverageInstance base = GenerateRandom(6, 80, 0.3, 2);
  const WeightedInstance weighted =
      *MakeWeightedInstance(base, std::vector<int32_t>(80, 1), 1);
  for (const SketchParams& params :
       {SketchParams::Practical(0.5, 2), Theory(2, 0.5, 40, 2)}) {
    auto a = SketchWeighted(weighted, params, HashSource(6));
    auto b = BuildSketch(base, params, HashSource(6));
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_EQ(*a, *b);
  }
}

TEST(WeightedSketchTest, SingleHeavyElement) {
  const CoverageInstance base = FromSets({{0}, {0}, {0}});
  const WeightedInstance weighted = *MakeWeightedInstance(base, {5}, 5);
  auto sketch = SketchWeighted(
      weighted, SketchParams::Practical(1.0, kUnboundedDegree), HashSource(3));
  ASSERT_TRUE(sketch.ok());
  EXPECT_EQ(sketch->graph.num_elements(), 5);
  EXPECT_THAT(sketch->selected_copies, ElementsAre(0, 1, 2, 3, 4));
  for (ElementId e = 0; e < 5; ++e) {
    EXPECT_THAT(Vec(sketch->graph.sets_of(e)), ElementsAre(0, 1, 2));
  }
}

TEST(WeightedSketchTest, GreedyFollowsWeight) {
  const WeightedInstance weighted =
      *MakeWeightedInstance(FromSets({{0}, {1}}), {1, 3}, 3);
  auto sketch = SketchWeighted(
      weighted, SketchParams::Practical(1.0, kUnboundedDegree), HashSource(1));
  ASSERT_TRUE(sketch.ok());
  const Solution greedy = GreedyKCover(sketch->graph, 1);
  EXPECT_THAT(greedy.chosen, ElementsAre(1));
  EXPECT_EQ(greedy.coverage, 3);
}

TEST(WeightedSketchTest, MatchesExplicitExpansion) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const WeightedInstance weighted = RandomWeighted(seed);
    auto expansion = ExpandWeighted(weighted);
    ASSERT_TRUE(expansion.ok());
    const HashSource source(seed + 50);
    const std::vector<double> hashes = CopyHashes(*expansion, source);
    for (const SketchParams& params :
         {SketchParams::Practical(0.6, 2), Theory(1, 0.5, 15, 2)}) {
      auto implicit = SketchWeighted(weighted, params, source);
      auto explicit_sketch =
          BuildSketchWithHashes(expansion->instance, params, hashes, source.seed());
      ASSERT_TRUE(implicit.ok() && explicit_sketch.ok());
      EXPECT_EQ(implicit->graph, explicit_sketch->graph);
      for (const auto& family : RandomFamilies(weighted.base.num_sets(), 10, seed)) {
        EXPECT_EQ(*Coverage(implicit->graph, family),
                  *Coverage(explicit_sketch->graph, family));
      }
    }
  }
}

TEST(FractionalSketchTest, HandExpansion) {
  // One element in two sets with fractions 2/4 and 3/4.
  auto fractional =
      MakeFractionalInstance(FromSets({{0}, {0}}), {2, 3}, 4);
  ASSERT_TRUE(fractional.ok());
  auto expansion = ExpandFractional(*fractional);
  ASSERT_TRUE(expansion.ok());
  EXPECT_THAT(expansion->copies, ElementsAre(0, 1, 2));
  EXPECT_THAT(Vec(expansion->instance.sets_of(0)), ElementsAre(0, 1));
  EXPECT_THAT(Vec(expansion->instance.sets_of(1)), ElementsAre(0, 1));
  EXPECT_THAT(Vec(expansion->instance.sets_of(2)), ElementsAre(1));

  auto sketch = SketchFractional(
      *fractional, SketchParams::Practical(1.0, kUnboundedDegree), HashSource(2));
  ASSERT_TRUE(sketch.ok());
  EXPECT_EQ(sketch->graph, expansion->instance);
  EXPECT_EQ(sketch->expansion_factor, 4);
}

TEST(FractionalSketchTest, SaturatedFractionsScaleCoverage) {
  const CoverageInstance base = GenerateRandom(5, 40, 0.3, 9);
  auto fractional = MakeFractionalInstance(
      base, std::vector<int32_t>(base.num_edges(), 3), 3);
  auto sketch = SketchFractional(
      *fractional, SketchParams::Practical(1.0, kUnboundedDegree), HashSource(1));
  ASSERT_TRUE(sketch.ok());
  for (const auto& family : RandomFamilies(5, 20, 4)) {
    EXPECT_EQ(*Coverage(sketch->graph, family), 3 * *Coverage(base, family));
  }
}

TEST(FractionalSketchTest, ZeroFractionContributesNothing) {
  auto fractional = MakeFractionalInstance(FromSets({{0, 1}, {1}}), {2, 0, 0}, 2);
  ASSERT_TRUE(fractional.ok());
  auto sketch = SketchFractional(
      *fractional, SketchParams::Practical(1.0, kUnboundedDegree), HashSource(1));
  ASSERT_TRUE(sketch.ok());
  EXPECT_THAT(sketch->selected_elements, ElementsAre(0, 0));
}

TEST(FractionalSketchTest, MatchesExplicitExpansion) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const FractionalInstance fractional = RandomFractional(seed);
    auto expansion = ExpandFractional(fractional);
    ASSERT_TRUE(expansion.ok());
    const HashSource source(seed + 9);
    const std::vector<double> hashes = CopyHashes(*expansion, source);
    for (const SketchParams& params :
         {SketchParams::Practical(0.7, 3), Theory(1, 0.5, 12, 1)}) {
      auto implicit = SketchFractional(fractional, params, source);
      auto explicit_sketch =
          BuildSketchWithHashes(expansion->instance, params, hashes, source.seed());
      ASSERT_TRUE(implicit.ok() && explicit_sketch.ok());
      EXPECT_EQ(implicit->graph, explicit_sketch->graph);
    }
    auto full = SketchFractional(
        fractional, SketchParams::Practical(1.0, kUnboundedDegree), source);
    for (const auto& family :
         RandomFamilies(fractional.base.num_sets(), 10, seed)) {
      EXPECT_EQ(*Coverage(full->graph, family),
                *CoverageFractionalUnits(fractional, family));
    }
  }
}

TEST(ProbabilisticSketchTest, CopyCount) {
  EXPECT_EQ(ProbabilisticCopies(3, 2, 0.3), 1360);
}

TEST(ProbabilisticSketchTest, DegenerateProbabilitiesAreExact) {
  const CoverageInstance base = GenerateRandom(4, 12, 0.4, 3);
  std::vector<int32_t> units(base.num_edges());
  for (size_t i = 0; i < units.size(); ++i) units[i] = (i % 3 == 0) ? 0 : 2;
  auto probabilistic = MakeProbabilisticInstance(base, units, 2);
  ASSERT_TRUE(probabilistic.ok());
  auto sketch = SketchProbabilistic(
      *probabilistic, 0.5, SketchParams::Practical(1.0, kUnboundedDegree),
      HashSource(5));
  ASSERT_TRUE(sketch.ok()) << sketch.status();
  const double zeta = static_cast<double>(sketch->expansion_factor);
  for (const auto& family : RandomFamilies(4, 15, 8)) {
    EXPECT_DOUBLE_EQ(*Coverage(sketch->graph, family) / zeta,
                     *CoverageProbabilistic(*probabilistic, family));
  }
  EXPECT_EQ(*Coverage(sketch->graph, std::vector<SetId>{}), 0);
}

TEST(ProbabilisticSketchTest, TwoHalfCoins) {
  auto probabilistic = MakeProbabilisticInstance(FromSets({{0}, {0}}), {1, 1}, 2);
  ASSERT_TRUE(probabilistic.ok());
  EXPECT_DOUBLE_EQ(*CoverageProbabilistic(*probabilistic, std::vector<SetId>{0, 1}),
                   0.75);
  auto sketch = SketchProbabilistic(
      *probabilistic, 0.3, SketchParams::Practical(1.0, kUnboundedDegree),
      HashSource(11));
  ASSERT_TRUE(sketch.ok());
  const double fraction = *Coverage(sketch->graph, std::vector<SetId>{0, 1}) /
                          static_cast<double>(sketch->expansion_factor);
  EXPECT_NEAR(fraction, 0.75, 0.05);
}

TEST(ProbabilisticSketchTest, ExpansionBudget) {
  const CoverageInstance base = GenerateRandom(8, 200, 0.5, 1);
  auto probabilistic = MakeProbabilisticInstance(
      base, std::vector<int32_t>(base.num_edges(), 1), 2);
  auto sketch = SketchProbabilistic(*probabilistic, 0.01,
                                    SketchParams::Practical(1.0, 1), HashSource(1));
  ASSERT_FALSE(sketch.ok());
  EXPECT_THAT(std::string(sketch.status().message()), HasSubstr("larger eps"));
}

TEST(ProbabilisticSketchTest, MatchesExplicitExpansion) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const CoverageInstance base = GenerateRandom(3, 4 + seed % 5, 0.5, seed);
    std::vector<int32_t> units(base.num_edges());
    std::mt19937_64 rng(seed);
    for (int32_t& u : units) u = rng() % 3;
    auto probabilistic = MakeProbabilisticInstance(base, units, 2);
    const HashSource source(seed);
    auto expansion = ExpandProbabilistic(*probabilistic, 0.5, source);
    ASSERT_TRUE(expansion.ok());
    const std::vector<double> hashes = CopyHashes(*expansion, source);
    for (const SketchParams& params :
         {SketchParams::Practical(0.3, 2), Theory(1, 0.5, 100, 2)}) {
      auto implicit = SketchProbabilistic(*probabilistic, 0.5, params, source);
      auto explicit_sketch =
          BuildSketchWithHashes(expansion->instance, params, hashes, seed);
      ASSERT_TRUE(implicit.ok() && explicit_sketch.ok());
      EXPECT_EQ(implicit->graph, explicit_sketch->graph);
    }
  }
}

}  // namespace
}  // namespace covsketch
