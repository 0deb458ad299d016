#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "netctl/graph.hpp"

namespace netctl {
namespace {

using testing::random_digraph;
using testing::reciprocity_example;
using testing::star;
using testing::three_cycle;

std::vector<Edge> edges_of(const DirectedGraph& g) { return {g.edges().begin(), g.edges().end()}; }

TEST(DirectedGraph, RejectsSelfLoopsDuplicatesAndBadIds) {
  EXPECT_THROW(DirectedGraph::from_edges(2, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(DirectedGraph::from_edges(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(DirectedGraph::from_edges(2, {{0, 2}}), std::invalid_argument);
}

TEST(DirectedGraph, NeighborsAreSorted) {
  const auto g = DirectedGraph::from_edges(4, {{2, 0}, {0, 3}, {0, 1}, {3, 0}});
  EXPECT_EQ(std::vector<NodeId>(g.out_neighbors(0).begin(), g.out_neighbors(0).end()),
            (std::vector<NodeId>{1, 3}));
  EXPECT_EQ(std::vector<NodeId>(g.in_neighbors(0).begin(), g.in_neighbors(0).end()),
            (std::vector<NodeId>{2, 3}));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(1, 0));
}

TEST(ParseEdgeList, TwoEdges) {
  const auto parsed = parse_edge_list(std::string("0 1\n0 2"));
  EXPECT_EQ(parsed.graph.node_count(), 3u);
  EXPECT_EQ(edges_of(parsed.graph), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(ParseEdgeList, CommentsAndRemapping) {
  const auto parsed = parse_edge_list(std::string("# comment\n5 9\n9 5"));
  EXPECT_EQ(parsed.graph.node_count(), 2u);
  EXPECT_EQ(edges_of(parsed.graph), (std::vector<Edge>{{0, 1}, {1, 0}}));
  EXPECT_EQ(parsed.original_ids, (std::vector<std::uint64_t>{5, 9}));
}

TEST(ParseEdgeList, SelfLoopIsRejectedWithLineNumber) {
  try {
    parse_edge_list(std::string("3 3"));
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("node 3"), std::string::npos);
  }
}

TEST(ParseEdgeList, SelfLoopsCanBeDropped) {
  const auto parsed =
      parse_edge_list(std::string("1 2\n2 2\n"), ParseOptions{SelfLoopPolicy::drop});
  EXPECT_EQ(parsed.dropped_self_loops, 1u);
  EXPECT_EQ(parsed.graph.edge_count(), 1u);
}

TEST(ParseEdgeList, MalformedLinesReportTheirLine) {
  for (const char* text : {"0 1\n0\n", "0 1\nx 2\n", "0 1\n1 2 3\n", "0 1\n-1 2\n"}) {
    try {
      parse_edge_list(std::string(text));
      FAIL() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 2u) << text;
    }
  }
}

TEST(ParseEdgeList, DuplicatesCollapse) {
  const auto parsed = parse_edge_list(std::string("0 1\n0 1\n1 0\n"));
  EXPECT_EQ(parsed.edge_lines, 3u);
  EXPECT_EQ(parsed.duplicate_edges, 1u);
  EXPECT_EQ(parsed.graph.edge_count(), 2u);
}

TEST(ParseEdgeList, NodeHeaderKeepsIsolatedNodes) {
  const auto parsed = parse_edge_list(std::string("# nodes 5\n3 1\n"));
  EXPECT_TRUE(parsed.declared_node_count);
  EXPECT_EQ(parsed.graph.node_count(), 5u);
  EXPECT_EQ(edges_of(parsed.graph), (std::vector<Edge>{{3, 1}}));
  EXPECT_THROW(parse_edge_list(std::string("# nodes 2\n3 1\n")), ParseError);
}

TEST(ParseEdgeList, RoundTripIsIdentity) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_digraph(rng, 1 + rng.below(30), rng.uniform(0.0, 0.4));
    const auto once = parse_edge_list(serialize_edge_list(g));
    EXPECT_EQ(once.graph, g);
    EXPECT_EQ(serialize_edge_list(once.graph), serialize_edge_list(g));
  }
}

TEST(ToBipartite, Star) {
  const auto b = to_bipartite(star());
  EXPECT_EQ(b.left_count, 3u);
  EXPECT_EQ(b.right_count, 3u);
  EXPECT_EQ(b.edges, (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(ToBipartite, EmptyAndCycle) {
  const auto empty = to_bipartite(testing::edgeless(4));
  EXPECT_EQ(empty.left_count, 4u);
  EXPECT_EQ(empty.right_count, 4u);
  EXPECT_TRUE(empty.edges.empty());
  EXPECT_EQ(to_bipartite(three_cycle()).edges, (std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(ToLineDigraph, StarBecomesTwoIsolatedNodes) {
  const auto ld = to_line_digraph(star());
  EXPECT_EQ(ld.graph.node_count(), 2u);
  EXPECT_EQ(ld.graph.edge_count(), 0u);
  EXPECT_EQ(ld.edge_of_node, (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(ToLineDigraph, ReciprocityExample) {
  const auto ld = to_line_digraph(reciprocity_example());
  // e01=0, e12=1, e21=2, e23=3
  ASSERT_EQ(ld.graph.node_count(), 4u);
  EXPECT_EQ(edges_of(ld.graph), (std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {2, 1}}));
}

TEST(ToLineDigraph, CycleIsSelfDual) {
  const auto ld = to_line_digraph(three_cycle());
  // e01=0, e12=1, e20=2
  EXPECT_EQ(edges_of(ld.graph), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(ToLineDigraph, EmptyGraph) {
  const auto ld = to_line_digraph(testing::edgeless(3));
  EXPECT_EQ(ld.graph.node_count(), 0u);
}

TEST(ToLineDigraph, SizeProperties) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_digraph(rng, 1 + rng.below(25), rng.uniform(0.0, 0.5));
    const auto ld = to_line_digraph(g);
    EXPECT_EQ(ld.graph.node_count(), g.edge_count());
    std::size_t paths = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) paths += g.in_degree(v) * g.out_degree(v);
    EXPECT_EQ(ld.graph.edge_count(), paths);
    for (const Edge& e : ld.graph.edges()) {
      EXPECT_EQ(ld.edge_of_node[e.source].target, ld.edge_of_node[e.target].source);
    }
    auto mapped = ld.edge_of_node;
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, edges_of(g));
  }
}

TEST(ComputeStats, Star) {
  const auto s = compute_stats(star());
  EXPECT_DOUBLE_EQ(s.density, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.density_pairs, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.mean_degree, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.reciprocity, 0.0);
  EXPECT_EQ(s.isolated_count, 0u);
}

TEST(ComputeStats, Reciprocity) {
  EXPECT_DOUBLE_EQ(compute_stats(reciprocity_example()).reciprocity, 0.5);
  EXPECT_DOUBLE_EQ(compute_stats(DirectedGraph::from_edges(2, {{0, 1}, {1, 0}})).reciprocity,
                   1.0);
}

TEST(ComputeStats, IsolatedAndEmpty) {
  const auto s = compute_stats(DirectedGraph::from_edges(5, {{0, 1}}));
  EXPECT_EQ(s.isolated_count, 3u);
  EXPECT_THROW(compute_stats(DirectedGraph{}), std::invalid_argument);
  const auto single = compute_stats(testing::edgeless(1));
  EXPECT_DOUBLE_EQ(single.density, 0.0);
}

TEST(ComputeStats, RangesHoldOnRandomGraphs) {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_digraph(rng, 1 + rng.below(20), rng.uniform(0.0, 1.0));
    const auto s = compute_stats(g);
    EXPECT_GE(s.density, 0.0);
    EXPECT_LE(s.density, 1.0);
    EXPECT_GE(s.reciprocity, 0.0);
    EXPECT_LE(s.reciprocity, 1.0);
    EXPECT_LE(s.isolated_count, g.node_count());
  }
}

}  // namespace
}  // namespace netctl
