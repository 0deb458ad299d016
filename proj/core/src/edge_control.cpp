#include "netctl/edge_control.hpp"

#include <algorithm>
#include <stdexcept>

namespace netctl {

EdgeControlAnalysis analyze_edge_control(const DirectedGraph& g, const DriverOptions& options) {
  EdgeControlAnalysis a;
  a.node_count = g.node_count();
  a.edge_count = g.edge_count();
  if (g.edge_count() == 0) {
    a.uniqueness = Uniqueness::unique;
    return a;
  }

  const LineDigraph line = to_line_digraph(g);
  const StructuralDrivers drivers = structural_drivers(line.graph, options);
  a.line_matching_size = drivers.matching_size;
  a.attachments = drivers.attachments;
  a.uniqueness = drivers.uniqueness;

  a.driver_edges.reserve(drivers.drivers.size());
  for (NodeId e : drivers.drivers) a.driver_edges.push_back(line.edge_of_node[e]);
  std::sort(a.driver_edges.begin(), a.driver_edges.end());

  for (const Edge& e : a.driver_edges) a.driver_nodes.push_back(e.source);
  std::sort(a.driver_nodes.begin(), a.driver_nodes.end());
  a.driver_nodes.erase(std::unique(a.driver_nodes.begin(), a.driver_nodes.end()),
                       a.driver_nodes.end());

  a.m_d = static_cast<double>(a.driver_edges.size()) / static_cast<double>(g.edge_count());
  a.n_d = static_cast<double>(a.driver_nodes.size()) / static_cast<double>(g.node_count());
  return a;
}

DriverEdgeReport driver_edge_report(const EdgeControlAnalysis& a, const DirectedGraph& g) {
  if (a.node_count != g.node_count() || a.edge_count != g.edge_count()) {
    throw std::invalid_argument("edge-control analysis was computed on a different graph");
  }
  for (const Edge& e : a.driver_edges) {
    if (!g.has_edge(e.source, e.target)) {
      throw std::invalid_argument("driver edge " + std::to_string(e.source) + "->" +
                                  std::to_string(e.target) + " is not in the graph");
    }
  }
  std::vector<NodeId> sources;
  for (const Edge& e : a.driver_edges) sources.push_back(e.source);
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  if (sources != a.driver_nodes) {
    throw std::invalid_argument("driver nodes are not the sources of the driver edges");
  }

  DriverEdgeReport r;
  r.node_count = g.node_count();
  r.edge_count = g.edge_count();
  r.driver_node_count = a.driver_nodes.size();
  r.driver_edge_count = a.driver_edges.size();
  r.n_d = a.n_d;
  r.m_d = a.m_d;
  return r;
}

}  // namespace netctl
