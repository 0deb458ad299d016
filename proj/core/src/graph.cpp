#include "netctl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace netctl {

namespace {

void build_csr(std::size_t node_count, std::span<const Edge> edges, bool by_source,
               std::vector<std::size_t>& offsets, std::vector<NodeId>& adjacency) {
  offsets.assign(node_count + 1, 0);
  for (const Edge& e : edges) ++offsets[(by_source ? e.source : e.target) + 1];
  for (std::size_t v = 0; v < node_count; ++v) offsets[v + 1] += offsets[v];
  adjacency.assign(edges.size(), 0);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // Edges are sorted by (source, target), so both directions come out sorted:
  // out-lists trivially, in-lists because sources are visited in order.
  for (const Edge& e : edges) {
    const NodeId key = by_source ? e.source : e.target;
    adjacency[cursor[key]++] = by_source ? e.target : e.source;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<std::uint64_t> parse_u64(std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

DirectedGraph DirectedGraph::from_edges(std::size_t node_count, std::vector<Edge> edges) {
  if (node_count > std::numeric_limits<NodeId>::max()) {
    throw std::invalid_argument("node count exceeds NodeId range");
  }
  for (const Edge& e : edges) {
    if (e.source >= node_count || e.target >= node_count) {
      throw std::invalid_argument("edge " + std::to_string(e.source) + "->" +
                                  std::to_string(e.target) + " has an endpoint outside [0, " +
                                  std::to_string(node_count) + ")");
    }
    if (e.source == e.target) {
      throw std::invalid_argument("self-loop on node " + std::to_string(e.source));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->source) + "->" +
                                std::to_string(dup->target));
  }

  DirectedGraph g;
  g.node_count_ = node_count;
  g.edges_ = std::move(edges);
  build_csr(node_count, g.edges_, true, g.out_offsets_, g.out_targets_);
  build_csr(node_count, g.edges_, false, g.in_offsets_, g.in_sources_);
  return g;
}

std::span<const NodeId> DirectedGraph::out_neighbors(NodeId v) const {
  if (v >= node_count_) throw std::out_of_range("node id out of range");
  return std::span<const NodeId>(out_targets_).subspan(out_offsets_[v],
                                                       out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const NodeId> DirectedGraph::in_neighbors(NodeId v) const {
  if (v >= node_count_) throw std::out_of_range("node id out of range");
  return std::span<const NodeId>(in_sources_).subspan(in_offsets_[v],
                                                      in_offsets_[v + 1] - in_offsets_[v]);
}

bool DirectedGraph::has_edge(NodeId source, NodeId target) const {
  return edge_index(source, target) != edges_.size();
}

std::size_t DirectedGraph::edge_index(NodeId source, NodeId target) const {
  const Edge key{source, target};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

std::span<const NodeId> BipartiteGraph::neighbors(NodeId left) const {
  if (left >= left_count) throw std::out_of_range("left node id out of range");
  return std::span<const NodeId>(left_adjacency)
      .subspan(left_offsets[left], left_offsets[left + 1] - left_offsets[left]);
}

bool BipartiteGraph::has_edge(NodeId left, NodeId right) const {
  if (left >= left_count) return false;
  auto nbrs = neighbors(left);
  return std::binary_search(nbrs.begin(), nbrs.end(), right);
}

BipartiteGraph BipartiteGraph::from_edges(std::size_t left_count, std::size_t right_count,
                                          std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.source >= left_count || e.target >= right_count) {
      throw std::invalid_argument("bipartite edge endpoint out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  BipartiteGraph b;
  b.left_count = left_count;
  b.right_count = right_count;
  b.edges = std::move(edges);
  build_csr(left_count, b.edges, true, b.left_offsets, b.left_adjacency);
  return b;
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& options) {
  struct RawEdge {
    std::uint64_t source;
    std::uint64_t target;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  std::optional<std::uint64_t> declared;
  ParsedGraph result;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      auto tokens = split_ws(trim(text.substr(1)));
      if (tokens.size() == 2 && tokens[0] == "nodes") {
        auto n = parse_u64(tokens[1]);
        if (!n) throw ParseError(line_no, "malformed node-count header");
        if (declared) throw ParseError(line_no, "node count declared twice");
        declared = *n;
      }
      continue;
    }
    auto tokens = split_ws(text);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected \"src dst\", got \"" + std::string(text) + "\"");
    }
    auto source = parse_u64(tokens[0]);
    auto target = parse_u64(tokens[1]);
    if (!source || !target) {
      throw ParseError(line_no, "node ids must be non-negative integers");
    }
    ++result.edge_lines;
    if (*source == *target) {
      if (options.self_loops == SelfLoopPolicy::reject) {
        throw ParseError(line_no, "self-loop on node " + std::to_string(*source));
      }
      ++result.dropped_self_loops;
      continue;
    }
    raw.push_back({*source, *target, line_no});
  }

  std::size_t node_count = 0;
  std::map<std::uint64_t, NodeId> dense;
  if (declared) {
    if (*declared > std::numeric_limits<NodeId>::max()) {
      throw ParseError(1, "declared node count too large");
    }
    node_count = static_cast<std::size_t>(*declared);
    for (const RawEdge& e : raw) {
      if (e.source >= node_count || e.target >= node_count) {
        throw ParseError(e.line, "node id outside the declared range [0, " +
                                     std::to_string(node_count) + ")");
      }
    }
    result.original_ids.resize(node_count);
    for (std::size_t v = 0; v < node_count; ++v) result.original_ids[v] = v;
    result.declared_node_count = true;
  } else {
    for (const RawEdge& e : raw) {
      dense.emplace(e.source, 0);
      dense.emplace(e.target, 0);
    }
    if (dense.size() > std::numeric_limits<NodeId>::max()) {
      throw ParseError(line_no, "too many distinct node ids");
    }
    for (auto& [original, id] : dense) {
      id = static_cast<NodeId>(result.original_ids.size());
      result.original_ids.push_back(original);
    }
    node_count = dense.size();
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) {
    if (declared) {
      edges.push_back({static_cast<NodeId>(e.source), static_cast<NodeId>(e.target)});
    } else {
      edges.push_back({dense.at(e.source), dense.at(e.target)});
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto unique_end = std::unique(edges.begin(), edges.end());
  result.duplicate_edges = static_cast<std::size_t>(edges.end() - unique_end);
  edges.erase(unique_end, edges.end());

  result.graph = DirectedGraph::from_edges(node_count, std::move(edges));
  return result;
}

ParsedGraph parse_edge_list(const std::string& text, const ParseOptions& options) {
  std::istringstream in(text);
  return parse_edge_list(in, options);
}

std::string serialize_edge_list(const DirectedGraph& g) {
  std::string out;
  out.reserve(32 + g.edge_count() * 12);
  out += "# nodes " + std::to_string(g.node_count()) + "\n";
  out += "# edges " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.source);
    out += ' ';
    out += std::to_string(e.target);
    out += '\n';
  }
  return out;
}

BipartiteGraph to_bipartite(const DirectedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  return BipartiteGraph::from_edges(g.node_count(), g.node_count(), std::move(edges));
}

LineDigraph to_line_digraph(const DirectedGraph& g) {
  LineDigraph ld;
  ld.edge_of_node.assign(g.edges().begin(), g.edges().end());

  // Edge (u, v) has index i in the sorted edge list; its successors are all
  // edges (v, w), which form the contiguous block of edges leaving v.
  std::vector<std::size_t> first_out(g.node_count() + 1, 0);
  for (const Edge& e : g.edges()) ++first_out[e.source + 1];
  for (std::size_t v = 0; v < g.node_count(); ++v) first_out[v + 1] += first_out[v];

  std::vector<Edge> line_edges;
  for (std::size_t i = 0; i < ld.edge_of_node.size(); ++i) {
    const NodeId via = ld.edge_of_node[i].target;
    // Backtracking (u, v) -> (v, u) is kept: it is a path of length two.
    for (std::size_t j = first_out[via]; j < first_out[via + 1]; ++j) {
      line_edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
    }
  }
  ld.graph = DirectedGraph::from_edges(ld.edge_of_node.size(), std::move(line_edges));
  return ld;
}

GraphStats compute_stats(const DirectedGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("statistics are undefined for a graph with no nodes");
  GraphStats s;
  s.node_count = n;
  s.edge_count = g.edge_count();
  const double e = static_cast<double>(g.edge_count());
  if (n > 1) {
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
    s.density = e / pairs;
    s.density_pairs = 2.0 * e / pairs;
  }
  s.mean_degree = e / static_cast<double>(n);
  std::size_t reciprocated = 0;
  for (const Edge& edge : g.edges()) {
    if (g.has_edge(edge.target, edge.source)) ++reciprocated;
  }
  s.reciprocity = g.edge_count() == 0 ? 0.0 : static_cast<double>(reciprocated) / e;
  for (NodeId v = 0; v < n; ++v) {
    if (g.in_degree(v) == 0 && g.out_degree(v) == 0) ++s.isolated_count;
  }
  return s;
}

std::vector<bool> reachable_from(const DirectedGraph& g, std::span<const NodeId> seeds) {
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack;
  for (NodeId s : seeds) {
    if (s >= g.node_count()) throw std::out_of_range("seed node out of range");
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : g.out_neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace netctl
