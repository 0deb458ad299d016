#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "netctl/graph.hpp"
#include "netctl/matching.hpp"

namespace netctl {

/// A node that is not itself a driver but shares the input signal of
/// `driver`. Needed when a cycle of the matching cannot be reached from any
/// driver: hooking one of its nodes onto an existing input makes it
/// accessible without adding an independent input.
struct InputAttachment {
  NodeId driver = 0;
  NodeId node = 0;

  friend bool operator==(const InputAttachment&, const InputAttachment&) = default;
};

/// Driver set of a digraph from a maximum matching of its plus/minus split.
struct StructuralDrivers {
  std::vector<NodeId> drivers;  // ascending
  std::size_t matching_size = 0;
  std::vector<InputAttachment> attachments;
  Uniqueness uniqueness = Uniqueness::unchecked;
};

struct DriverOptions {
  /// The alternative-driver-set check runs only up to this many nodes.
  std::size_t uniqueness_check_limit = 100;
};

/// Unmatched minus-nodes of a maximum matching, with the floor of one
/// driver (node 0) when the matching is perfect. Requires node_count >= 1.
StructuralDrivers structural_drivers(const DirectedGraph& g, const DriverOptions& options = {});

/// Nodes unreachable from `drivers`, each hooked onto the first driver's
/// input. Candidates are visited in ascending id and reachability is
/// expanded after every attachment.
std::vector<InputAttachment> attach_unreached(const DirectedGraph& g,
                                              std::span<const NodeId> drivers);

inline constexpr std::string_view kNodeMethod = "node-structural";

struct NodeControlAnalysis {
  std::vector<NodeId> driver_nodes;
  double n_d = 0.0;
  std::size_t node_count = 0;
  std::size_t matching_size = 0;
  std::vector<InputAttachment> attachments;
  Uniqueness uniqueness = Uniqueness::unchecked;
  std::string_view method = kNodeMethod;
  std::string_view controlled = "nodes";
};

/// Structural node controllability. Throws std::invalid_argument when the
/// graph has no nodes.
NodeControlAnalysis analyze_node_control(const DirectedGraph& g,
                                         const DriverOptions& options = {});

}  // namespace netctl
