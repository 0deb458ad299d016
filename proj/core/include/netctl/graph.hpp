#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace netctl {

using NodeId = std::uint32_t;

struct Edge {
  NodeId source = 0;
  NodeId target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple directed graph on dense node ids [0, node_count).
///
/// Edges are kept sorted by (source, target); self-loops and duplicate pairs
/// are rejected at construction. Adjacency is stored in CSR form in both
/// directions, so neighbor ranges come out in ascending id order.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Throws std::invalid_argument on out-of-range endpoints, self-loops or
  /// duplicate edges.
  static DirectedGraph from_edges(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const NodeId> out_neighbors(NodeId v) const;
  std::span<const NodeId> in_neighbors(NodeId v) const;
  std::size_t out_degree(NodeId v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }

  bool has_edge(NodeId source, NodeId target) const;
  /// Position of the edge in edges(), or edge_count() when absent.
  std::size_t edge_index(NodeId source, NodeId target) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<NodeId> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<NodeId> in_sources_;
};

/// Plus/minus split of a digraph: left node i is the out-copy of node i,
/// right node j the in-copy of node j, and (i, j) is an edge iff i->j is.
struct BipartiteGraph {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<Edge> edges;  // (left, right), sorted
  std::vector<std::size_t> left_offsets;
  std::vector<NodeId> left_adjacency;

  std::span<const NodeId> neighbors(NodeId left) const;
  bool has_edge(NodeId left, NodeId right) const;

  static BipartiteGraph from_edges(std::size_t left_count, std::size_t right_count,
                                   std::vector<Edge> edges);
};

/// Edge-space view of a digraph: node e stands for original edge
/// edge_of_node[e], and e1 -> e2 whenever target(e1) == source(e2).
struct LineDigraph {
  DirectedGraph graph;
  std::vector<Edge> edge_of_node;
};

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  /// E / (N (N - 1)); zero for a single node.
  double density = 0.0;
  /// 2E / (N (N - 1)), the convention that counts unordered pairs.
  double density_pairs = 0.0;
  /// E / N.
  double mean_degree = 0.0;
  /// Fraction of edges whose reverse edge also exists.
  double reciprocity = 0.0;
  std::size_t isolated_count = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class SelfLoopPolicy { reject, drop };

struct ParseOptions {
  SelfLoopPolicy self_loops = SelfLoopPolicy::reject;
};

struct ParsedGraph {
  DirectedGraph graph;
  /// original_ids[v] is the id that dense node v had in the input.
  std::vector<std::uint64_t> original_ids;
  std::size_t edge_lines = 0;
  std::size_t duplicate_edges = 0;
  std::size_t dropped_self_loops = 0;
  /// True when the input carried a "# nodes N" header and ids were kept as-is.
  bool declared_node_count = false;
};

/// Reads the "src dst" edge-list format. '#' lines are comments, except a
/// "# nodes N" header, which fixes the node count and disables remapping so
/// isolated nodes survive a round trip. Without the header, the ids that
/// occur are remapped to [0, N) in ascending order of their original value.
ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& options = {});
ParsedGraph parse_edge_list(const std::string& text, const ParseOptions& options = {});

/// One "src dst" line per edge in lexicographic order, preceded by a header
/// that declares the node count.
std::string serialize_edge_list(const DirectedGraph& g);

BipartiteGraph to_bipartite(const DirectedGraph& g);
LineDigraph to_line_digraph(const DirectedGraph& g);

/// Throws std::invalid_argument for the empty graph.
GraphStats compute_stats(const DirectedGraph& g);

/// Nodes reachable from `seeds` (seeds included), as a membership mask.
std::vector<bool> reachable_from(const DirectedGraph& g, std::span<const NodeId> seeds);

}  // namespace netctl
