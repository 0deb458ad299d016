#pragma once

// Shared fixtures and brute-force oracles. Nothing here calls into the
// matching or control code, so it can check that code independently.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "netctl/graph.hpp"
#include "netctl/random.hpp"

namespace netctl::testing {

// Hub 0 pointing at 1 and 2.
inline DirectedGraph star() { return DirectedGraph::from_edges(3, {{0, 1}, {0, 2}}); }

// 1->2, 2->3, 3->2, 3->4 in 1-based labels.
inline DirectedGraph reciprocity_example() {
  return DirectedGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}});
}

inline DirectedGraph three_cycle() {
  return DirectedGraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
}

inline DirectedGraph edgeless(std::size_t n) { return DirectedGraph::from_edges(n, {}); }

// Each ordered pair present with probability p.
inline DirectedGraph random_digraph(SplitMix64& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i != j && rng.uniform() < p) edges.push_back({i, j});
    }
  }
  return DirectedGraph::from_edges(n, std::move(edges));
}

// Random digraph with exactly `edges` edges (edges <= n(n-1)), by shuffling
// all slots.
inline DirectedGraph random_digraph_with_edges(SplitMix64& rng, std::size_t n,
                                               std::size_t edges) {
  std::vector<Edge> all;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i != j) all.push_back({i, j});
    }
  }
  for (std::size_t i = all.size(); i > 1; --i) {
    std::swap(all[i - 1], all[rng.below(i)]);
  }
  all.resize(std::min(edges, all.size()));
  return DirectedGraph::from_edges(n, std::move(all));
}

// Maximum matching size by DP over subsets of right nodes (right_count <= 20).
inline std::size_t brute_force_matching_size(std::size_t left_count, std::size_t right_count,
                                             const std::vector<Edge>& edges) {
  std::vector<std::uint32_t> adj(left_count, 0);
  for (const Edge& e : edges) adj[e.source] |= (1u << e.target);
  const std::uint32_t full = 1u << right_count;
  std::vector<int> best(full, -1);
  best[0] = 0;
  for (std::size_t l = 0; l < left_count; ++l) {
    std::vector<int> next = best;  // l stays unmatched
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      if (best[mask] < 0) continue;
      std::uint32_t options = adj[l] & ~mask;
      while (options) {
        const std::uint32_t bit = options & (~options + 1);
        options ^= bit;
        next[mask | bit] = std::max(next[mask | bit], best[mask] + 1);
      }
    }
    best = std::move(next);
  }
  return static_cast<std::size_t>(*std::max_element(best.begin(), best.end()));
}

// Every set of free right nodes over all maximum matchings, by exhaustive
// enumeration of matchings (small graphs only).
inline std::vector<std::vector<NodeId>> all_maximum_free_right_sets(
    std::size_t right_count, const std::vector<Edge>& edges) {
  std::vector<std::vector<NodeId>> sets;
  std::size_t best = 0;
  std::vector<std::uint32_t> used_right_masks;
  const std::size_t e = edges.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << e); ++pick) {
    std::uint32_t left_mask = 0, right_mask = 0;
    bool ok = true;
    for (std::size_t i = 0; i < e && ok; ++i) {
      if (!(pick >> i & 1)) continue;
      const std::uint32_t lb = 1u << edges[i].source, rb = 1u << edges[i].target;
      if ((left_mask & lb) || (right_mask & rb)) ok = false;
      left_mask |= lb;
      right_mask |= rb;
    }
    if (!ok) continue;
    const auto size = static_cast<std::size_t>(std::popcount(right_mask));
    if (size > best) {
      best = size;
      used_right_masks.clear();
    }
    if (size == best) used_right_masks.push_back(right_mask);
  }
  std::sort(used_right_masks.begin(), used_right_masks.end());
  used_right_masks.erase(std::unique(used_right_masks.begin(), used_right_masks.end()),
                         used_right_masks.end());
  for (std::uint32_t mask : used_right_masks) {
    std::vector<NodeId> free;
    for (NodeId r = 0; r < right_count; ++r) {
      if (!(mask >> r & 1)) free.push_back(r);
    }
    sets.push_back(std::move(free));
  }
  return sets;
}

}  // namespace netctl::testing
