#include "netctl/node_control.hpp"

#include <stdexcept>

namespace netctl {

std::vector<InputAttachment> attach_unreached(const DirectedGraph& g,
                                              std::span<const NodeId> drivers) {
  std::vector<InputAttachment> attachments;
  if (drivers.empty()) return attachments;
  std::vector<bool> reached = reachable_from(g, drivers);
  std::vector<NodeId> stack;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (reached[v]) continue;
    attachments.push_back({drivers.front(), v});
    reached[v] = true;
    stack.push_back(v);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.out_neighbors(u)) {
        if (!reached[w]) {
          reached[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return attachments;
}

StructuralDrivers structural_drivers(const DirectedGraph& g, const DriverOptions& options) {
  if (g.node_count() == 0) {
    throw std::invalid_argument("driver set is undefined for a graph with no nodes");
  }
  const BipartiteGraph split = to_bipartite(g);
  const MatchingResult matching = maximum_matching(split);

  StructuralDrivers out;
  out.matching_size = matching.size;
  if (matching.perfect()) {
    out.drivers = {0};
    out.uniqueness = g.node_count() == 1 ? Uniqueness::unique : Uniqueness::alternatives_exist;
  } else {
    out.drivers = matching.unmatched_right;
    if (g.node_count() <= options.uniqueness_check_limit) {
      out.uniqueness = free_right_set_is_unique(split, matching) ? Uniqueness::unique
                                                                 : Uniqueness::alternatives_exist;
    }
  }
  out.attachments = attach_unreached(g, out.drivers);
  return out;
}

NodeControlAnalysis analyze_node_control(const DirectedGraph& g, const DriverOptions& options) {
  StructuralDrivers drivers = structural_drivers(g, options);
  NodeControlAnalysis a;
  a.node_count = g.node_count();
  a.matching_size = drivers.matching_size;
  a.driver_nodes = std::move(drivers.drivers);
  a.attachments = std::move(drivers.attachments);
  a.uniqueness = drivers.uniqueness;
  a.n_d = static_cast<double>(a.driver_nodes.size()) / static_cast<double>(g.node_count());
  return a;
}

}  // namespace netctl
