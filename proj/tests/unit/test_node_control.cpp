#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "netctl/kalman.hpp"
#include "netctl/node_control.hpp"

namespace netctl {
namespace {

using testing::random_digraph;

TEST(NodeControl, Star) {
  const auto a = analyze_node_control(testing::star());
  ASSERT_EQ(a.driver_nodes.size(), 2u);
  EXPECT_EQ(a.driver_nodes[0], 0u);
  EXPECT_TRUE(a.driver_nodes[1] == 1 || a.driver_nodes[1] == 2);
  EXPECT_DOUBLE_EQ(a.n_d, 2.0 / 3.0);
  EXPECT_EQ(a.uniqueness, Uniqueness::alternatives_exist);
  EXPECT_EQ(a.method, "node-structural");
}

TEST(NodeControl, ReciprocityExample) {
  const auto a = analyze_node_control(testing::reciprocity_example());
  EXPECT_EQ(a.driver_nodes, (std::vector<NodeId>{0}));
  EXPECT_DOUBLE_EQ(a.n_d, 0.25);
  EXPECT_EQ(a.uniqueness, Uniqueness::unique);
  EXPECT_TRUE(a.attachments.empty());
}

TEST(NodeControl, EdgelessGraphDrivesEveryNode) {
  const auto a = analyze_node_control(testing::edgeless(5));
  EXPECT_EQ(a.driver_nodes, (std::vector<NodeId>{0, 1, 2, 3, 4}));
  EXPECT_DOUBLE_EQ(a.n_d, 1.0);
}

TEST(NodeControl, PerfectMatchingFloor) {
  const auto a = analyze_node_control(testing::three_cycle());
  EXPECT_EQ(a.driver_nodes, (std::vector<NodeId>{0}));
  EXPECT_DOUBLE_EQ(a.n_d, 1.0 / 3.0);
  EXPECT_EQ(a.matching_size, 3u);
}

TEST(NodeControl, EmptyGraphIsAnError) {
  EXPECT_THROW(analyze_node_control(DirectedGraph{}), std::invalid_argument);
}

TEST(NodeControl, UniquenessIsUncheckedAboveLimit) {
  const auto g = testing::edgeless(5);
  const auto a = analyze_node_control(g, DriverOptions{4});
  EXPECT_EQ(a.uniqueness, Uniqueness::unchecked);
}

TEST(NodeControl, UnreachedCycleIsAttachedToAnExistingInput) {
  // Path 0->1 and a separate 2-cycle 2<->3: one unmatched node, but the
  // cycle cannot be reached from it.
  const auto g = DirectedGraph::from_edges(4, {{0, 1}, {2, 3}, {3, 2}});
  const auto a = analyze_node_control(g);
  EXPECT_EQ(a.driver_nodes, (std::vector<NodeId>{0}));
  EXPECT_EQ(a.attachments, (std::vector<InputAttachment>{{0, 2}}));

  // One independent input suffices once node 2 shares node 0's signal...
  EXPECT_TRUE(structural_rank_test(g, InputPattern::with_attachments(a.driver_nodes,
                                                                     a.attachments))
                  .full_rank);
  EXPECT_EQ(brute_force_min_inputs(g), 1u);
  // ...while dedicated inputs need a second driver node.
  EXPECT_FALSE(structural_rank_test(g, a.driver_nodes).full_rank);
  EXPECT_EQ(brute_force_min_drivers(g).size, 2u);
}

TEST(NodeControl, InvariantsOnRandomGraphs) {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_digraph(rng, 1 + rng.below(60), rng.uniform(0.0, 0.15));
    const auto a = analyze_node_control(g);
    const std::size_t n = g.node_count();
    EXPECT_EQ(a.driver_nodes.size(), std::max<std::size_t>(n - a.matching_size, 1));
    EXPECT_DOUBLE_EQ(a.n_d, static_cast<double>(a.driver_nodes.size()) / static_cast<double>(n));
    EXPECT_TRUE(std::is_sorted(a.driver_nodes.begin(), a.driver_nodes.end()));
    for (NodeId v = 0; v < n; ++v) {
      if (g.in_degree(v) == 0) {
        EXPECT_TRUE(std::binary_search(a.driver_nodes.begin(), a.driver_nodes.end(), v));
      }
    }
    // Drivers plus attachments reach every node.
    std::vector<NodeId> seeds = a.driver_nodes;
    for (const auto& att : a.attachments) seeds.push_back(att.node);
    const auto reach = reachable_from(g, seeds);
    EXPECT_TRUE(std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }));
  }
}

TEST(NodeControl, AddingAnEdgeNeverAddsDrivers) {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(40);
    const auto g = random_digraph(rng, n, rng.uniform(0.0, 0.2));
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const auto source = static_cast<NodeId>(rng.below(n));
    const auto target = static_cast<NodeId>(rng.below(n));
    if (source == target || g.has_edge(source, target)) continue;
    edges.push_back({source, target});
    const auto g2 = DirectedGraph::from_edges(n, edges);
    EXPECT_LE(analyze_node_control(g2).n_d, analyze_node_control(g).n_d);
  }
}

TEST(NodeControl, MinimumInputTheoremAgreesWithKalmanOracle) {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    const auto g = random_digraph(rng, 1 + rng.below(7), rng.uniform(0.05, 0.7));
    const auto a = analyze_node_control(g);
    EXPECT_EQ(brute_force_min_inputs(g), a.driver_nodes.size());
    const auto pattern = InputPattern::with_attachments(a.driver_nodes, a.attachments);
    EXPECT_TRUE(structural_rank_test(g, pattern).full_rank);
    // Dedicated inputs can only need more drivers, never fewer.
    EXPECT_GE(brute_force_min_drivers(g).size, a.driver_nodes.size());
    if (a.attachments.empty()) {
      EXPECT_EQ(brute_force_min_drivers(g).size, a.driver_nodes.size());
    }
  }
}

}  // namespace
}  // namespace netctl
