#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "netctl/graph.hpp"
#include "netctl/node_control.hpp"

namespace netctl {

inline constexpr std::string_view kEdgeMethod = "edge-structural";

/// Edge (switchboard) controllability of a digraph.
///
/// Driver edges are the unmatched minus-nodes of a maximum matching on the
/// line digraph, mapped back to original edges. Driving an edge through its
/// source node turns them into driver nodes; n_d uses all N original nodes
/// as the denominator and m_d all E edges.
struct EdgeControlAnalysis {
  std::vector<Edge> driver_edges;  // sorted
  double m_d = 0.0;
  std::vector<NodeId> driver_nodes;  // unique sources of driver_edges
  double n_d = 0.0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t line_matching_size = 0;
  /// Line-digraph node ids (indices into the sorted edge list) hooked onto
  /// an existing driver edge's input.
  std::vector<InputAttachment> attachments;
  Uniqueness uniqueness = Uniqueness::unchecked;
  std::string_view method = kEdgeMethod;
  std::string_view controlled = "edges";
};

EdgeControlAnalysis analyze_edge_control(const DirectedGraph& g,
                                         const DriverOptions& options = {});

/// The (n_d, m_d) pair with its method and controlled-entity labels, so an
/// edge-method n_d never travels without the fact that it steers edges.
struct DriverEdgeReport {
  std::string_view method = "edge";
  std::string_view controlled = "edges";
  double n_d = 0.0;
  double m_d = 0.0;
  std::size_t driver_node_count = 0;
  std::size_t driver_edge_count = 0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
};

/// Throws std::invalid_argument when `a` cannot have come from `g`.
DriverEdgeReport driver_edge_report(const EdgeControlAnalysis& a, const DirectedGraph& g);

}  // namespace netctl
