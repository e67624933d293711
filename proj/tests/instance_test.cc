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
#include <random>
#include <set>

#include "covsketch/generators.h"
#include "covsketch/instance.h"
#include "covsketch/io.h"
#include "covsketch/reductions.h"
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
using ::testing::UnorderedElementsAre;

// ---- edge-list loading ----

TEST(EdgeListTest, LoadsDirectTranscription) {
  auto instance = ParseEdgeList("0 0\n0 1\n1 1");
  ASSERT_TRUE(instance.ok()) << instance.status();
  EXPECT_EQ(instance->num_sets(), 2);
  EXPECT_EQ(instance->num_elements(), 2);
  EXPECT_EQ(instance->num_edges(), 3);
  EXPECT_THAT(Vec(instance->sets_of(1)), ElementsAre(0, 1));
  EXPECT_THAT(Vec(instance->elements_of(0)), ElementsAre(0, 1));
}

TEST(EdgeListTest, MalformedTokenReportsLine) {
  auto instance = ParseEdgeList("0 x");
  ASSERT_FALSE(instance.ok());
  EXPECT_THAT(std::string(instance.status().message()), HasSubstr("line 1"));
}

TEST(EdgeListTest, ReportsLaterLineNumbers) {
  auto instance = ParseEdgeList("# header\n0 0\n\n1 2 3\n");
  ASSERT_FALSE(instance.ok());
  EXPECT_THAT(std::string(instance.status().message()), HasSubstr("line 4"));
  EXPECT_FALSE(ParseEdgeList("0 -1").ok());
}

TEST(EdgeListTest, DeduplicatesEdges) {
  auto instance = ParseEdgeList("0 0\n0 0\n");
  ASSERT_TRUE(instance.ok());
  EXPECT_EQ(instance->num_edges(), 1);
}

TEST(EdgeListTest, EmptyInstanceIsAnError) {
  for (const char* text : {"", "# only a comment\n", "\n\n"}) {
    auto instance = ParseEdgeList(text);
    ASSERT_FALSE(instance.ok());
    EXPECT_EQ(instance.status().message(), "empty instance");
  }
}

TEST(EdgeListTest, DirectivesWidenDimensions) {
  auto instance = ParseEdgeList("#n 5\n#m 7\n1 2\n");
  ASSERT_TRUE(instance.ok());
  EXPECT_EQ(instance->num_sets(), 5);
  EXPECT_EQ(instance->num_elements(), 7);
  EXPECT_EQ(instance->CountIsolatedElements(), 6);
}

TEST(EdgeListTest, RoundTripIsExact) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const CoverageInstance original =
        GenerateRandom(1 + seed % 9, 1 + seed % 23, 0.3, seed);
    auto reloaded = ParseEdgeList(FormatEdgeList(original, {"comment"}));
    ASSERT_TRUE(reloaded.ok());
    EXPECT_EQ(*reloaded, original);
    EXPECT_EQ(reloaded->Edges(), original.Edges());
  }
}

TEST(EdgeListTest, WeightedColumn) {
  auto weighted = ParseWeightedEdgeList("0 0 2\n1 0 2\n1 1 3\n");
  ASSERT_TRUE(weighted.ok()) << weighted.status();
  EXPECT_THAT(weighted->weights, ElementsAre(2, 3));
  EXPECT_EQ(weighted->max_weight, 3);
  EXPECT_FALSE(ParseWeightedEdgeList("0 0 2\n1 0 3\n").ok());
  EXPECT_FALSE(ParseWeightedEdgeList("#U 2\n0 0 3\n").ok());
  auto again = ParseWeightedEdgeList(FormatWeightedEdgeList(*weighted));
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(again->weights, weighted->weights);
  EXPECT_EQ(again->base, weighted->base);
}

TEST(EdgeListTest, FractionalColumnNeedsResolution) {
  EXPECT_FALSE(ParseFractionalEdgeList("0 0 1\n").ok());
  EXPECT_FALSE(ParseFractionalEdgeList("#U 4\n0 0 5\n").ok());
  auto fractional = ParseFractionalEdgeList("#U 4\n1 0 3\n0 0 2\n");
  ASSERT_TRUE(fractional.ok()) << fractional.status();
  EXPECT_EQ(fractional->alpha.resolution, 4);
  EXPECT_THAT(Vec(EdgeUnits(fractional->base, fractional->alpha, 0)),
              ElementsAre(2, 3));
  auto again = ParseProbabilisticEdgeList(
      FormatFractionalEdgeList(fractional->base, fractional->alpha));
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(again->alpha.units, fractional->alpha.units);
}

// ---- data model invariants ----

TEST(InstanceTest, RejectsOutOfRangeIds) {
  EXPECT_FALSE(CoverageInstance::FromEdges(1, 1, {{1, 0}}).ok());
  EXPECT_FALSE(CoverageInstance::FromEdges(1, 1, {{0, 1}}).ok());
  EXPECT_FALSE(CoverageInstance::FromEdges(1, 1, {{-1, 0}}).ok());
}

TEST(InstanceTest, AdjacencyDirectionsAgree) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const CoverageInstance instance =
        GenerateRandom(2 + seed % 7, 3 + seed % 31, 0.25, seed);
    int64_t by_elements = 0;
    int64_t by_sets = 0;
    std::set<std::pair<int, int>> from_elements;
    std::set<std::pair<int, int>> from_sets;
    for (ElementId e = 0; e < instance.num_elements(); ++e) {
      const auto sets = instance.sets_of(e);
      EXPECT_GE(sets.size(), 1u);
      EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end()));
      by_elements += instance.degree(e);
      for (const SetId s : sets) from_elements.insert({s, e});
    }
    for (SetId s = 0; s < instance.num_sets(); ++s) {
      by_sets += instance.set_size(s);
      for (const ElementId e : instance.elements_of(s)) from_sets.insert({s, e});
    }
    EXPECT_EQ(by_elements, instance.num_edges());
    EXPECT_EQ(by_sets, instance.num_edges());
    EXPECT_EQ(from_elements, from_sets);
    EXPECT_EQ(static_cast<int64_t>(from_sets.size()), instance.num_edges());
  }
}

// ---- statistics ----

TEST(StatsTest, SmallInstance) {
  const InstanceStats stats = ComputeStats(*ParseEdgeList("0 0\n0 1\n1 1"));
  EXPECT_EQ(stats.max_set_size, 2);
  EXPECT_EQ(stats.max_element_degree, 2);
  EXPECT_THAT(stats.element_degree_histogram, ElementsAre(0, 1, 1));
  EXPECT_THAT(stats.set_size_histogram, ElementsAre(0, 1, 1));
}

TEST(StatsTest, SingleEdge) {
  const InstanceStats stats = ComputeStats(*ParseEdgeList("0 0"));
  EXPECT_EQ(stats.max_set_size, 1);
  EXPECT_EQ(stats.max_element_degree, 1);
  EXPECT_EQ(stats.num_edges, 1);
}

TEST(StatsTest, PlantedEdgeCount) {
  // m + k' * ceil((1 + eps) m / k) = 100 + 50 * 60.
  auto planted = GeneratePlanted(2, 100, 50, 0.2, 3);
  ASSERT_TRUE(planted.ok());
  EXPECT_EQ(ComputeStats(planted->instance).num_edges, 3100);
}

TEST(StatsTest, JsonIsOneLine) {
  const std::string json =
      StatsJson(ComputeStats(*ParseEdgeList("0 0\n0 1\n1 1")));
  EXPECT_EQ(json.find('\n'), std::string::npos);
  EXPECT_THAT(json, HasSubstr("\"edge_count\":3"));
  EXPECT_THAT(json, HasSubstr("\"max_set_size\":2"));
}

// ---- planted generator ----

TEST(PlantedTest, LargeDecoyInstanceSize) {
  auto planted = GeneratePlanted(100, 10000, 10000, 0.2, 1);
  ASSERT_TRUE(planted.ok());
  EXPECT_EQ(planted->instance.num_sets(), 10100);
  EXPECT_EQ(planted->instance.num_elements(), 10000);
  EXPECT_EQ(planted->instance.num_edges(), 1210000);
}

TEST(PlantedTest, PartitionWithoutDecoys) {
  auto planted = GeneratePlanted(2, 4, 0, 0.0, 7);
  ASSERT_TRUE(planted.ok());
  ASSERT_EQ(planted->planted.size(), 2u);
  std::vector<std::vector<ElementId>> blocks;
  for (const SetId s : planted->planted) {
    blocks.push_back(Vec(planted->instance.elements_of(s)));
  }
  EXPECT_THAT(blocks,
              UnorderedElementsAre(ElementsAre(0, 1), ElementsAre(2, 3)));
  EXPECT_EQ(*Coverage(planted->instance, planted->planted), 4);
}

TEST(PlantedTest, DecoySizesAndPartition) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto planted = GeneratePlanted(2, 100, 50, 0.2, seed);
    ASSERT_TRUE(planted.ok());
    const CoverageInstance& instance = planted->instance;
    for (SetId s = 0; s < instance.num_sets(); ++s) {
      const bool is_planted = std::binary_search(
          planted->planted.begin(), planted->planted.end(), s);
      EXPECT_EQ(instance.set_size(s), is_planted ? 50 : 60);
    }
    std::vector<int> hits(100, 0);
    for (const SetId s : planted->planted) {
      for (const ElementId e : instance.elements_of(s)) ++hits[e];
    }
    EXPECT_TRUE(std::all_of(hits.begin(), hits.end(),
                            [](int h) { return h == 1; }));
    EXPECT_EQ(*Coverage(instance, planted->planted), 100);
  }
}

TEST(PlantedTest, RequiresDivisibility) {
  EXPECT_FALSE(GeneratePlanted(3, 100, 5, 0.2, 1).ok());
  EXPECT_FALSE(GeneratePlanted(2, 100, 5, -0.1, 1).ok());
}

TEST(PlantedTest, DeterministicInSeed) {
  auto a = GeneratePlanted(5, 50, 20, 0.2, 11);
  auto b = GeneratePlanted(5, 50, 20, 0.2, 11);
  auto c = GeneratePlanted(5, 50, 20, 0.2, 12);
  EXPECT_EQ(a->instance, b->instance);
  EXPECT_NE(a->instance, c->instance);
  EXPECT_EQ(a->planted, b->planted);
}

TEST(PlantedTest, PlantedIdsAreScattered) {
  int low_block = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    auto planted = GeneratePlanted(10, 100, 90, 0.2, seed);
    ASSERT_TRUE(planted.ok());
    ASSERT_TRUE(std::is_sorted(planted->planted.begin(), planted->planted.end()));
    if (planted->planted.back() == 9) ++low_block;
  }
  EXPECT_EQ(low_block, 0);
}

// ---- adversarial generator ----

TEST(AdversarialTest, TenSets) {
  auto adversarial = GenerateAdversarial(10, 2, 2.0, 1);
  ASSERT_TRUE(adversarial.ok());
  EXPECT_EQ(adversarial->instance.num_sets(), 10);
  EXPECT_EQ(adversarial->instance.num_elements(), 30);
  EXPECT_EQ(*Coverage(adversarial->instance, adversarial->bonus_sets), 30);
  EXPECT_EQ(BruteForceKCover(adversarial->instance, 2)->coverage, 30);
}

TEST(AdversarialTest, FourSetsOracle) {
  auto adversarial = GenerateAdversarial(4, 2, 1.0, 5);
  ASSERT_TRUE(adversarial.ok());
  for (const SetId s : adversarial->bonus_sets) {
    EXPECT_EQ(adversarial->instance.set_size(s), 6);
  }
  EXPECT_EQ(BruteForceKCover(adversarial->instance, 2)->coverage, 8);
}

TEST(AdversarialTest, MinimalParameters) {
  auto adversarial = GenerateAdversarial(2, 1, 1.0, 9);
  ASSERT_TRUE(adversarial.ok());
  const SetId bonus = adversarial->bonus_sets[0];
  EXPECT_EQ(adversarial->instance.set_size(bonus), 4);
  EXPECT_EQ(adversarial->instance.set_size(1 - bonus), 2);
}

TEST(AdversarialTest, NormalSetsCoverOnlyNormalElements) {
  auto adversarial = GenerateAdversarial(12, 3, 2.0, 4);
  ASSERT_TRUE(adversarial.ok());
  const CoverageInstance& instance = adversarial->instance;
  std::vector<SetId> normal;
  for (SetId s = 0; s < 12; ++s) {
    if (std::find(adversarial->bonus_sets.begin(),
                  adversarial->bonus_sets.end(),
                  s) == adversarial->bonus_sets.end()) {
      normal.push_back(s);
    }
  }
  EXPECT_EQ(*Coverage(instance, std::vector<SetId>(normal.begin(),
                                                   normal.begin() + 3)),
            12);
  EXPECT_EQ(*Coverage(instance, adversarial->bonus_sets), 36);
  // Bonus elements follow the normal ones.
  for (ElementId e = 0; e < 12; ++e) EXPECT_EQ(instance.degree(e), 12);
  for (ElementId e = 12; e < 36; ++e) EXPECT_EQ(instance.degree(e), 1);
}

TEST(AdversarialTest, RejectsBadParameters) {
  EXPECT_FALSE(GenerateAdversarial(10, 6, 2.0, 1).ok());
  EXPECT_FALSE(GenerateAdversarial(10, 3, 1.0, 1).ok());
  EXPECT_FALSE(GenerateAdversarial(10, 2, 0.5, 1).ok());
}

TEST(AdversarialTest, DeterministicInSeed) {
  auto a = GenerateAdversarial(20, 4, 2.0, 3);
  auto b = GenerateAdversarial(20, 4, 2.0, 3);
  EXPECT_EQ(a->instance, b->instance);
  EXPECT_EQ(a->bonus_sets, b->bonus_sets);
}

// ---- k-hop dominating set ----

TEST(KHopTest, PathOneHop) {
  auto instance = KHopDominatingInstance(AdjacencyFromPairs(3, {{0, 1}, {1, 2}}), 1);
  ASSERT_TRUE(instance.ok());
  EXPECT_THAT(Vec(instance->elements_of(1)), ElementsAre(0, 1, 2));
  EXPECT_EQ(instance->set_size(0), 2);
  EXPECT_EQ(instance->set_size(2), 2);
}

TEST(KHopTest, PathTwoHops) {
  auto instance = KHopDominatingInstance(
      AdjacencyFromPairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 2);
  ASSERT_TRUE(instance.ok());
  EXPECT_THAT(Vec(instance->elements_of(2)), ElementsAre(0, 1, 2, 3, 4));
  EXPECT_THAT(Vec(instance->elements_of(0)), ElementsAre(0, 1, 2));
}

TEST(KHopTest, StarGreedyPicksCenter) {
  std::vector<std::pair<int32_t, int32_t>> spokes;
  for (int leaf = 1; leaf <= 5; ++leaf) spokes.emplace_back(0, leaf);
  auto instance = KHopDominatingInstance(AdjacencyFromPairs(6, spokes), 1);
  ASSERT_TRUE(instance.ok());
  const Solution greedy = GreedyKCover(*instance, 1);
  EXPECT_THAT(greedy.chosen, ElementsAre(0));
  EXPECT_EQ(greedy.coverage, 6);
  EXPECT_EQ(BruteForceKCover(*instance, 1)->coverage, 6);
}

TEST(KHopTest, RejectsUnsupportedHops) {
  const Adjacency graph = AdjacencyFromPairs(2, {{0, 1}});
  EXPECT_FALSE(KHopDominatingInstance(graph, 0).ok());
  EXPECT_FALSE(KHopDominatingInstance(graph, 4).ok());
}

TEST(KHopTest, SelfLoopsAreIgnored) {
  auto instance =
      KHopDominatingInstance(AdjacencyFromPairs(2, {{0, 0}, {0, 1}}), 1);
  ASSERT_TRUE(instance.ok());
  EXPECT_EQ(instance->num_edges(), 4);
}

TEST(KHopTest, MoreHopsContainFewer) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int32_t vertices = 3 + trial % 12;
    std::uniform_int_distribution<int32_t> pick(0, vertices - 1);
    std::vector<std::pair<int32_t, int32_t>> pairs;
    for (int i = 0; i < vertices; ++i) pairs.emplace_back(pick(rng), pick(rng));
    const Adjacency graph = AdjacencyFromPairs(vertices, pairs);
    for (int hops = 2; hops <= 3; ++hops) {
      auto wide = KHopDominatingInstance(graph, hops);
      auto narrow = KHopDominatingInstance(graph, hops - 1);
      ASSERT_TRUE(wide.ok() && narrow.ok());
      const auto wide_edges = wide->Edges();
      for (const Edge& edge : narrow->Edges()) {
        EXPECT_TRUE(std::binary_search(wide_edges.begin(), wide_edges.end(),
                                       edge));
      }
    }
  }
}

// ---- feature pairs ----

TEST(FeaturePairsTest, CompleteColumn) {
  auto pairs = FeaturePairsInstanceFromMatrix({{1}, {1}, {1}});
  ASSERT_TRUE(pairs.ok());
  EXPECT_EQ(pairs->instance.num_sets(), 1);
  EXPECT_EQ(pairs->instance.set_size(0), 3);
  EXPECT_THAT(pairs->pair_keys, ElementsAre(0 * 3 + 1, 0 * 3 + 2, 1 * 3 + 2));
}

TEST(FeaturePairsTest, IdentityHasNoPairs) {
  auto pairs = FeaturePairsInstanceFromMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  ASSERT_FALSE(pairs.ok());
  EXPECT_EQ(pairs.status().message(), "empty instance");
}

TEST(FeaturePairsTest, HandOracle) {
  auto pairs =
      FeaturePairsInstanceFromMatrix({{1, 0}, {1, 0}, {1, 1}, {0, 1}});
  ASSERT_TRUE(pairs.ok());
  EXPECT_EQ(pairs->instance.set_size(0), 3);
  EXPECT_EQ(pairs->instance.set_size(1), 1);
  EXPECT_EQ(GreedyKCover(pairs->instance, 2).coverage, 4);
}

TEST(FeaturePairsTest, RejectsBadMatrices) {
  EXPECT_FALSE(FeaturePairsInstanceFromMatrix({{1, 2}, {1, 1}}).ok());
  EXPECT_FALSE(FeaturePairsInstanceFromMatrix({{1, 1}, {1}}).ok());
}

TEST(FeaturePairsTest, CoverageMatchesPairEnumeration) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 2 + trial * 48 / 19;  // up to 50
    const int cols = 1 + trial % 6;
    std::bernoulli_distribution coin(0.4);
    std::vector<std::vector<int>> matrix(rows, std::vector<int>(cols));
    for (auto& row : matrix) {
      for (int& x : row) x = coin(rng) ? 1 : 0;
    }
    matrix[0][0] = matrix[1][0] = 1;  // at least one covered pair
    auto pairs = FeaturePairsInstanceFromMatrix(matrix);
    ASSERT_TRUE(pairs.ok());
    for (int mask = 1; mask < (1 << cols); ++mask) {
      std::vector<SetId> chosen;
      for (int c = 0; c < cols; ++c) {
        if (mask >> c & 1) chosen.push_back(c);
      }
      int64_t expected = 0;
      for (int r1 = 0; r1 < rows; ++r1) {
        for (int r2 = r1 + 1; r2 < rows; ++r2) {
          bool active = false;
          for (const SetId c : chosen) active |= matrix[r1][c] && matrix[r2][c];
          expected += active;
        }
      }
      EXPECT_EQ(*Coverage(pairs->instance, chosen), expected);
    }
  }
}

}  // namespace
}  // namespace covsketch
