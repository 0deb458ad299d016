#include "netctl/matching.hpp"

#include <algorithm>
#include <queue>

namespace netctl {

namespace {

constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

void fill_partitions(MatchingResult& m) {
  m.pairs.clear();
  m.matched_right.clear();
  m.unmatched_right.clear();
  for (NodeId l = 0; l < m.match_of_left.size(); ++l) {
    if (m.match_of_left[l] != kUnmatched) m.pairs.push_back({l, m.match_of_left[l]});
  }
  for (NodeId r = 0; r < m.match_of_right.size(); ++r) {
    (m.match_of_right[r] == kUnmatched ? m.unmatched_right : m.matched_right).push_back(r);
  }
  m.size = m.pairs.size();
}

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& b)
      : b_(b),
        match_left_(b.left_count, kUnmatched),
        match_right_(b.right_count, kUnmatched),
        dist_(b.left_count, kInfinity),
        cursor_(b.left_count, 0) {}

  MatchingResult run() {
    while (layer()) {
      for (NodeId l = 0; l < b_.left_count; ++l) cursor_[l] = 0;
      for (NodeId l = 0; l < b_.left_count; ++l) {
        if (match_left_[l] == kUnmatched) augment(l);
      }
    }
    MatchingResult m;
    m.match_of_left = std::move(match_left_);
    m.match_of_right = std::move(match_right_);
    fill_partitions(m);
    return m;
  }

 private:
  // BFS from all free left nodes; true when some free right node is reached.
  bool layer() {
    std::queue<NodeId> queue;
    for (NodeId l = 0; l < b_.left_count; ++l) {
      if (match_left_[l] == kUnmatched) {
        dist_[l] = 0;
        queue.push(l);
      } else {
        dist_[l] = kInfinity;
      }
    }
    free_depth_ = kInfinity;
    while (!queue.empty()) {
      const NodeId l = queue.front();
      queue.pop();
      if (dist_[l] >= free_depth_) continue;
      for (NodeId r : b_.neighbors(l)) {
        const NodeId next = match_right_[r];
        if (next == kUnmatched) {
          free_depth_ = std::min(free_depth_, dist_[l] + 1);
        } else if (dist_[next] == kInfinity) {
          dist_[next] = dist_[l] + 1;
          queue.push(next);
        }
      }
    }
    return free_depth_ != kInfinity;
  }

  // Iterative layered DFS from a free left node; flips one augmenting path.
  bool augment(NodeId root) {
    std::vector<NodeId>& path = path_;
    path.clear();
    path.push_back(root);
    while (!path.empty()) {
      const NodeId l = path.back();
      auto nbrs = b_.neighbors(l);
      bool advanced = false;
      while (cursor_[l] < nbrs.size()) {
        const NodeId r = nbrs[cursor_[l]];
        const NodeId next = match_right_[r];
        if (next == kUnmatched && dist_[l] + 1 == free_depth_) {
          // Walk back up the path, re-pairing each left node with the right
          // node its cursor points at.
          for (auto it = path.rbegin(); it != path.rend(); ++it) {
            const NodeId left = *it;
            const NodeId right = b_.neighbors(left)[cursor_[left]];
            match_left_[left] = right;
            match_right_[right] = left;
          }
          return true;
        }
        if (next != kUnmatched && dist_[next] == dist_[l] + 1) {
          path.push_back(next);
          advanced = true;
          break;
        }
        ++cursor_[l];
      }
      if (!advanced) {
        dist_[l] = kInfinity;
        path.pop_back();
        if (!path.empty()) ++cursor_[path.back()];
      }
    }
    return false;
  }

  const BipartiteGraph& b_;
  std::vector<NodeId> match_left_;
  std::vector<NodeId> match_right_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> cursor_;
  std::vector<NodeId> path_;
  std::size_t free_depth_ = kInfinity;
};

}  // namespace

MatchingResult MatchingResult::from_pairs(const BipartiteGraph& b, std::vector<Edge> pairs) {
  MatchingResult m;
  m.match_of_left.assign(b.left_count, kUnmatched);
  m.match_of_right.assign(b.right_count, kUnmatched);
  for (const Edge& p : pairs) {
    if (!b.has_edge(p.source, p.target)) {
      throw std::invalid_argument("pair (" + std::to_string(p.source) + ", " +
                                  std::to_string(p.target) + ") is not a bipartite edge");
    }
    if (m.match_of_left[p.source] != kUnmatched || m.match_of_right[p.target] != kUnmatched) {
      throw std::invalid_argument("pairs share an endpoint; not a matching");
    }
    m.match_of_left[p.source] = p.target;
    m.match_of_right[p.target] = p.source;
  }
  fill_partitions(m);
  return m;
}

MatchingResult maximum_matching(const BipartiteGraph& b) { return HopcroftKarp(b).run(); }

bool verify_maximality(const BipartiteGraph& b, const MatchingResult& m) {
  if (m.match_of_left.size() != b.left_count || m.match_of_right.size() != b.right_count) {
    throw std::invalid_argument("matching does not belong to this bipartite graph");
  }
  std::size_t count = 0;
  for (NodeId l = 0; l < b.left_count; ++l) {
    const NodeId r = m.match_of_left[l];
    if (r == kUnmatched) continue;
    ++count;
    if (r >= b.right_count || m.match_of_right[r] != l || !b.has_edge(l, r)) {
      throw std::invalid_argument("inconsistent matching: left node " + std::to_string(l));
    }
  }
  for (NodeId r = 0; r < b.right_count; ++r) {
    const NodeId l = m.match_of_right[r];
    if (l != kUnmatched && (l >= b.left_count || m.match_of_left[l] != r)) {
      throw std::invalid_argument("inconsistent matching: right node " + std::to_string(r));
    }
  }
  if (count != m.size) throw std::invalid_argument("matching size disagrees with its pairs");

  // Alternating BFS: non-matching edges left->right, matching edges right->left.
  std::vector<bool> seen_left(b.left_count, false);
  std::queue<NodeId> queue;
  for (NodeId l = 0; l < b.left_count; ++l) {
    if (m.match_of_left[l] == kUnmatched) {
      seen_left[l] = true;
      queue.push(l);
    }
  }
  while (!queue.empty()) {
    const NodeId l = queue.front();
    queue.pop();
    for (NodeId r : b.neighbors(l)) {
      const NodeId next = m.match_of_right[r];
      if (next == kUnmatched) return false;
      if (!seen_left[next]) {
        seen_left[next] = true;
        queue.push(next);
      }
    }
  }
  return true;
}

const char* to_string(Uniqueness u) noexcept {
  switch (u) {
    case Uniqueness::unique:
      return "unique";
    case Uniqueness::alternatives_exist:
      return "alternatives_exist";
    case Uniqueness::unchecked:
      return "unchecked";
  }
  return "unchecked";
}

bool free_right_set_is_unique(const BipartiteGraph& b, const MatchingResult& m) {
  std::vector<bool> has_neighbor(b.right_count, false);
  for (const Edge& e : b.edges) has_neighbor[e.target] = true;
  return std::none_of(m.unmatched_right.begin(), m.unmatched_right.end(),
                      [&](NodeId r) { return has_neighbor[r]; });
}

}  // namespace netctl
