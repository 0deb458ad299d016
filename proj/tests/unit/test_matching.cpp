#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "netctl/matching.hpp"

namespace netctl {
namespace {

using testing::brute_force_matching_size;

BipartiteGraph random_bipartite(SplitMix64& rng, std::size_t left, std::size_t right, double p) {
  std::vector<Edge> edges;
  for (NodeId l = 0; l < left; ++l) {
    for (NodeId r = 0; r < right; ++r) {
      if (rng.uniform() < p) edges.push_back({l, r});
    }
  }
  return BipartiteGraph::from_edges(left, right, std::move(edges));
}

void expect_consistent(const BipartiteGraph& b, const MatchingResult& m) {
  EXPECT_EQ(m.size, m.pairs.size());
  EXPECT_EQ(m.matched_right.size() + m.unmatched_right.size(), b.right_count);
  std::vector<bool> left_used(b.left_count), right_used(b.right_count);
  for (const Edge& p : m.pairs) {
    EXPECT_TRUE(b.has_edge(p.source, p.target));
    EXPECT_FALSE(left_used[p.source]);
    EXPECT_FALSE(right_used[p.target]);
    left_used[p.source] = right_used[p.target] = true;
  }
  for (NodeId r : m.unmatched_right) EXPECT_FALSE(right_used[r]);
  for (NodeId r : m.matched_right) EXPECT_TRUE(right_used[r]);
}

TEST(MaximumMatching, Star) {
  const auto b = to_bipartite(testing::star());
  const auto m = maximum_matching(b);
  EXPECT_EQ(m.size, 1u);
  ASSERT_EQ(m.unmatched_right.size(), 2u);
  EXPECT_EQ(m.unmatched_right.front(), 0u);
  EXPECT_TRUE(m.unmatched_right[1] == 1 || m.unmatched_right[1] == 2);
}

TEST(MaximumMatching, CycleIsPerfect) {
  const auto m = maximum_matching(to_bipartite(testing::three_cycle()));
  EXPECT_EQ(m.size, 3u);
  EXPECT_TRUE(m.perfect());
}

TEST(MaximumMatching, ReciprocityLineDigraph) {
  const auto line = to_line_digraph(testing::reciprocity_example());
  const auto b = to_bipartite(line.graph);
  // Frozen from exhaustive enumeration of matchings.
  const auto free_sets = testing::all_maximum_free_right_sets(b.right_count, b.edges);
  ASSERT_FALSE(free_sets.empty());
  EXPECT_EQ(free_sets.front().size(), 2u);
  EXPECT_EQ(maximum_matching(b).size, 2u);
}

TEST(MaximumMatching, EmptyGraph) {
  const auto b = BipartiteGraph::from_edges(0, 0, {});
  const auto m = maximum_matching(b);
  EXPECT_EQ(m.size, 0u);
  EXPECT_TRUE(verify_maximality(b, m));
}

TEST(MaximumMatching, AgreesWithBruteForce) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t left = rng.below(13), right = rng.below(13);
    const auto b = random_bipartite(rng, left, right, rng.uniform(0.0, 0.6));
    const auto m = maximum_matching(b);
    expect_consistent(b, m);
    EXPECT_EQ(m.size, brute_force_matching_size(left, right, b.edges));
    EXPECT_TRUE(verify_maximality(b, m));
  }
}

TEST(MaximumMatching, SizeIgnoresEdgeInputOrder) {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(30);
    auto b = random_bipartite(rng, n, n, 0.1);
    auto shuffled = b.edges;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    }
    const auto b2 = BipartiteGraph::from_edges(n, n, shuffled);
    EXPECT_EQ(maximum_matching(b).size, maximum_matching(b2).size);
  }
}

TEST(MaximumMatching, Deterministic) {
  SplitMix64 rng(3);
  const auto b = random_bipartite(rng, 200, 200, 0.02);
  EXPECT_EQ(maximum_matching(b).pairs, maximum_matching(b).pairs);
}

TEST(MaximumMatching, LongAugmentingChainsDoNotRecurse) {
  // Path 0->1->...->n-1 on the split graph: deep alternating paths.
  const std::size_t n = 200000;
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
    edges.push_back({i + 1, i});
  }
  const auto b = BipartiteGraph::from_edges(n, n, std::move(edges));
  EXPECT_EQ(maximum_matching(b).size, n);
}

TEST(VerifyMaximality, Star) {
  const auto b = to_bipartite(testing::star());
  EXPECT_TRUE(verify_maximality(b, MatchingResult::from_pairs(b, {{0, 1}})));
  EXPECT_FALSE(verify_maximality(b, MatchingResult::from_pairs(b, {})));
}

TEST(VerifyMaximality, PerfectCycle) {
  const auto b = to_bipartite(testing::three_cycle());
  EXPECT_TRUE(verify_maximality(b, MatchingResult::from_pairs(b, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST(VerifyMaximality, RejectsNonMatchings) {
  const auto b = to_bipartite(testing::star());
  EXPECT_THROW(MatchingResult::from_pairs(b, {{1, 0}}), std::invalid_argument);
  EXPECT_THROW(MatchingResult::from_pairs(b, {{0, 1}, {0, 2}}), std::invalid_argument);
  auto m = MatchingResult::from_pairs(b, {{0, 1}});
  m.match_of_right[1] = kUnmatched;
  EXPECT_THROW(verify_maximality(b, m), std::invalid_argument);
}

TEST(FreeRightSetUniqueness, MatchesExhaustiveEnumeration) {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const auto b = random_bipartite(rng, n, n, rng.uniform(0.0, 0.5));
    if (b.edges.size() > 16) continue;
    const auto sets = testing::all_maximum_free_right_sets(n, b.edges);
    const auto m = maximum_matching(b);
    EXPECT_EQ(free_right_set_is_unique(b, m), sets.size() == 1);
    EXPECT_NE(std::find(sets.begin(), sets.end(), m.unmatched_right), sets.end());
  }
}

}  // namespace
}  // namespace netctl
