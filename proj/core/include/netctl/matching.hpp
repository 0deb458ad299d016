#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "netctl/graph.hpp"

namespace netctl {

inline constexpr NodeId kUnmatched = std::numeric_limits<NodeId>::max();

struct MatchingResult {
  std::vector<Edge> pairs;  // (left, right), sorted by left
  std::vector<NodeId> match_of_left;   // kUnmatched when free
  std::vector<NodeId> match_of_right;  // kUnmatched when free
  std::vector<NodeId> matched_right;
  std::vector<NodeId> unmatched_right;
  std::size_t size = 0;

  bool perfect() const noexcept { return unmatched_right.empty(); }

  /// Builds the bookkeeping for an arbitrary set of pairs. Throws
  /// std::invalid_argument if the pairs are not a matching on `b`.
  static MatchingResult from_pairs(const BipartiteGraph& b, std::vector<Edge> pairs);
};

/// Hopcroft-Karp. Both the BFS layering and the DFS walk neighbors in
/// ascending id, so the result depends only on the graph.
MatchingResult maximum_matching(const BipartiteGraph& b);

/// True iff no augmenting path starts at a free left node.
bool verify_maximality(const BipartiteGraph& b, const MatchingResult& m);

enum class Uniqueness { unique, alternatives_exist, unchecked };

const char* to_string(Uniqueness u) noexcept;

/// Whether another maximum matching leaves a different set of right nodes
/// free. A free right node r with some neighbor l can be swapped in: l is
/// matched (otherwise (l, r) would augment), and re-matching l to r frees
/// l's old partner. With no such r the free set is forced.
bool free_right_set_is_unique(const BipartiteGraph& b, const MatchingResult& m);

}  // namespace netctl
