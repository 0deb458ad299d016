#include "netctl/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "netctl/random.hpp"

namespace netctl {

namespace {

using nlohmann::json;

json ids_json(std::span<const NodeId> nodes, const std::vector<std::uint64_t>& original) {
  json out = json::array();
  for (NodeId v : nodes) out.push_back(original.at(v));
  return out;
}

json edges_json(std::span<const Edge> edges, const std::vector<std::uint64_t>& original) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({original.at(e.source), original.at(e.target)});
  return out;
}

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return m;
}

}  // namespace

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("fnv1a64:{:016x}", h);
}

double round_sig6(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  return std::strtod(fmt::format("{:.6g}", x).c_str(), nullptr);
}

std::string format_sig6(double x) { return fmt::format("{:.6g}", x); }

AnalysisReport analyze(const ParsedGraph& parsed, std::string digest,
                       const DriverOptions& options) {
  const DirectedGraph& g = parsed.graph;
  if (g.node_count() == 0) throw std::invalid_argument("the input graph has no nodes");
  AnalysisReport r;
  r.digest = std::move(digest);
  r.edge_lines = parsed.edge_lines;
  r.duplicate_edges = parsed.duplicate_edges;
  r.dropped_self_loops = parsed.dropped_self_loops;
  r.original_ids = parsed.original_ids;
  r.stats = compute_stats(g);
  r.node = analyze_node_control(g, options);
  r.edge = analyze_edge_control(g, options);
  r.edge_report = driver_edge_report(r.edge, g);
  for (const InputAttachment& a : r.edge.attachments) {
    r.edge_attachments.emplace_back(g.edges()[a.driver], g.edges()[a.node]);
  }
  return r;
}

json to_json(const AnalysisReport& r) {
  const auto& ids = r.original_ids;

  json attachments = json::array();
  for (const InputAttachment& a : r.node.attachments) {
    attachments.push_back({ids.at(a.driver), ids.at(a.node)});
  }

  json edge_attachments = json::array();
  for (const auto& [driver, attached] : r.edge_attachments) {
    edge_attachments.push_back({{ids.at(driver.source), ids.at(driver.target)},
                                {ids.at(attached.source), ids.at(attached.target)}});
  }

  json out;
  out["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  out["input"] = {{"digest", r.digest},
                  {"edge_lines", r.edge_lines},
                  {"duplicate_edges", r.duplicate_edges},
                  {"dropped_self_loops", r.dropped_self_loops},
                  {"nodes", r.stats.node_count},
                  {"edges", r.stats.edge_count}};
  out["stats"] = {{"density", round_sig6(r.stats.density)},
                  {"density_pairs", round_sig6(r.stats.density_pairs)},
                  {"mean_degree", round_sig6(r.stats.mean_degree)},
                  {"reciprocity", round_sig6(r.stats.reciprocity)},
                  {"isolated_count", r.stats.isolated_count}};
  out["node_control"] = {
      {"method", r.node.method},
      {"controlled", r.node.controlled},
      {"n_d", round_sig6(r.node.n_d)},
      {"driver_count", r.node.driver_nodes.size()},
      {"driver_nodes", ids_json(r.node.driver_nodes, ids)},
      {"matching_size", r.node.matching_size},
      {"input_attachments", attachments},
      {"driver_set", fmt::format("a valid minimum set ({})", to_string(r.node.uniqueness))},
  };
  out["edge_control"] = {
      {"method", r.edge.method},
      {"controlled", r.edge.controlled},
      {"n_d", round_sig6(r.edge.n_d)},
      {"m_d", round_sig6(r.edge.m_d)},
      {"driver_node_count", r.edge.driver_nodes.size()},
      {"driver_nodes", ids_json(r.edge.driver_nodes, ids)},
      {"driver_edge_count", r.edge.driver_edges.size()},
      {"driver_edges", edges_json(r.edge.driver_edges, ids)},
      {"line_matching_size", r.edge.line_matching_size},
      {"input_attachments", edge_attachments},
      {"driver_set", fmt::format("a valid minimum set ({})", to_string(r.edge.uniqueness))},
  };
  out["edge_report"] = {{"method", r.edge_report.method},
                        {"controlled", r.edge_report.controlled},
                        {"n_d", round_sig6(r.edge_report.n_d)},
                        {"m_d", round_sig6(r.edge_report.m_d)}};
  return out;
}

void SweepConfig::validate() const {
  if (n == 0) throw InfeasibleSpec("n must be positive");
  if (k_steps == 0) throw InfeasibleSpec("k_steps must be positive");
  if (replicates == 0) throw InfeasibleSpec("replicates must be positive");
  if (k_min < 0.0 || k_max < k_min) throw InfeasibleSpec("need 0 <= k_min <= k_max");
  if (k_max > static_cast<double>(n - 1)) {
    throw InfeasibleSpec("k_max exceeds n - 1 = " + std::to_string(n - 1));
  }
  for (double k : degrees()) {
    GeneratorSpec{model, n, k, gamma, 0}.validate();
  }
}

std::vector<double> SweepConfig::degrees() const {
  std::vector<double> ks;
  ks.reserve(k_steps);
  for (std::size_t i = 0; i < k_steps; ++i) {
    ks.push_back(k_steps == 1 ? k_min
                              : k_min + (k_max - k_min) * static_cast<double>(i) /
                                            static_cast<double>(k_steps - 1));
  }
  return ks;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::vector<double> ks = config.degrees();
  const std::size_t total = ks.size() * config.replicates;
  std::vector<SweepRow> rows(total);

  std::size_t threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::clamp<std::size_t>(threads, 1, total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t job = next++; job < total; job = next++) {
      try {
        const std::size_t ki = job / config.replicates;
        SweepRow& row = rows[job];
        row.model = config.model;
        row.n = config.n;
        row.mean_degree = ks[ki];
        row.replicate = job % config.replicates;
        row.seed = derive_seed(config.seed, job);
        const DirectedGraph g =
            generate(GeneratorSpec{config.model, config.n, ks[ki], config.gamma, row.seed});
        const NodeControlAnalysis node = analyze_node_control(g);
        const EdgeControlAnalysis edge = analyze_edge_control(g);
        row.node_n_d = node.n_d;
        row.edge_n_d = edge.n_d;
        row.edge_m_d = edge.m_d;
        row.reciprocity = compute_stats(g).reciprocity;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "model,n,mean_degree,replicate,seed,node_n_d,edge_n_d,edge_m_d,reciprocity\n";
  for (const SweepRow& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", to_string(r.model), r.n,
                       format_sig6(r.mean_degree), r.replicate, r.seed, format_sig6(r.node_n_d),
                       format_sig6(r.edge_n_d), format_sig6(r.edge_m_d),
                       format_sig6(r.reciprocity));
  }
  return out;
}

json sweep_summary(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  json points = json::array();
  const std::vector<double> ks = config.degrees();
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    std::vector<double> node, edge, edge_m, recip;
    for (const SweepRow& r : rows) {
      if (r.mean_degree != ks[ki]) continue;
      node.push_back(r.node_n_d);
      edge.push_back(r.edge_n_d);
      edge_m.push_back(r.edge_m_d);
      recip.push_back(r.reciprocity);
    }
    auto entry = [](const std::vector<double>& xs) {
      const Moments m = moments(xs);
      return json{{"mean", round_sig6(m.mean)}, {"stddev", round_sig6(m.stddev)}};
    };
    points.push_back({{"mean_degree", round_sig6(ks[ki])},
                      {"replicates", node.size()},
                      {"node", {{"controlled", "nodes"}, {"n_d", entry(node)}}},
                      {"edge",
                       {{"controlled", "edges"}, {"n_d", entry(edge)}, {"m_d", entry(edge_m)}}},
                      {"reciprocity", entry(recip)}});
  }
  json cfg = {{"model", to_string(config.model)}, {"n", config.n},
              {"k_min", round_sig6(config.k_min)}, {"k_max", round_sig6(config.k_max)},
              {"k_steps", config.k_steps}, {"replicates", config.replicates},
              {"seed", config.seed}};
  if (config.model == GeneratorModel::sf) cfg["gamma"] = round_sig6(config.gamma);
  return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"config", cfg},
          {"points", points}};
}

std::size_t thread_limit_from_env() {
  const char* raw = std::getenv("NETCTL_THREADS");
  if (raw == nullptr) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return 0;
  return static_cast<std::size_t>(v);
}

}  // namespace netctl
