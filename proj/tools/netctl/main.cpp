// netctl: driver-node and driver-edge analysis of directed networks.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "netctl/edge_control.hpp"
#include "netctl/experiments.hpp"
#include "netctl/generators.hpp"
#include "netctl/graph.hpp"
#include "netctl/kalman.hpp"
#include "netctl/node_control.hpp"

namespace {

using namespace netctl;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;
constexpr std::size_t kMaxRankTestSize = 25;
constexpr std::size_t kMaxBruteForceSize = 10;

// Bad user input; reported on stderr with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::uint64_t parse_id(const std::string& token) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.front() == '-') throw InputError("bad node id \"" + token + "\"");
  return v;
}

NodeId dense_id(const ParsedGraph& parsed, std::uint64_t original) {
  const auto& ids = parsed.original_ids;
  const auto it = std::lower_bound(ids.begin(), ids.end(), original);
  if (it == ids.end() || *it != original) {
    throw InputError(fmt::format("node {} does not appear in the graph", original));
  }
  return static_cast<NodeId>(it - ids.begin());
}

std::vector<NodeId> parse_node_list(const ParsedGraph& parsed, const std::string& text) {
  std::vector<NodeId> nodes;
  for (const auto& token : split(text, ',')) nodes.push_back(dense_id(parsed, parse_id(token)));
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw InputError("driver list repeats a node");
  }
  if (nodes.empty()) throw InputError("driver list is empty");
  return nodes;
}

std::vector<Edge> parse_edge_drivers(const ParsedGraph& parsed, const std::string& text) {
  std::vector<Edge> edges;
  for (const auto& token : split(text, ',')) {
    const auto ends = split(token, '-');
    if (ends.size() != 2) throw InputError("driver edge must look like \"src-dst\": " + token);
    const Edge e{dense_id(parsed, parse_id(ends[0])), dense_id(parsed, parse_id(ends[1]))};
    if (!parsed.graph.has_edge(e.source, e.target)) {
      throw InputError("driver edge " + token + " is not an edge of the graph");
    }
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("driver list repeats an edge");
  }
  if (edges.empty()) throw InputError("driver list is empty");
  return edges;
}

Eigen::VectorXd parse_vector(const std::string& text, std::size_t n, const char* what) {
  if (text.empty()) return Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  const auto parts = split(text, ',');
  if (parts.size() != n) {
    throw InputError(fmt::format("{} needs {} comma-separated values, got {}", what, n, parts.size()));
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    try {
      std::size_t used = 0;
      v(static_cast<Eigen::Index>(i)) = std::stod(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
    } catch (const std::exception&) {
      throw InputError(fmt::format("{}: bad number \"{}\"", what, parts[i]));
    }
  }
  return v;
}

ParsedGraph load_graph(const std::string& path, bool drop_self_loops, std::string* bytes = nullptr) {
  const std::string text = read_file(path);
  ParseOptions options;
  if (drop_self_loops) options.self_loops = SelfLoopPolicy::drop;
  ParsedGraph parsed = parse_edge_list(text, options);
  if (parsed.graph.node_count() == 0) throw InputError(path + ": graph has no nodes");
  if (bytes) *bytes = text;
  return parsed;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// ---- analyze

struct AnalyzeArgs {
  std::string path;
  std::string out;
  bool drop_self_loops = false;
  bool timestamp = false;
};

int run_analyze(const AnalyzeArgs& args) {
  std::string bytes;
  const ParsedGraph parsed = load_graph(args.path, args.drop_self_loops, &bytes);
  json report = to_json(analyze(parsed, input_digest(bytes)));
  if (args.timestamp) report["generated_at"] = utc_timestamp();
  write_output(args.out, report.dump(2) + "\n");
  return kExitOk;
}

// ---- sweep

struct SweepArgs {
  std::string model = "er";
  SweepConfig config;
  std::string out;
  std::string summary;
  std::size_t threads = 0;
};

int run_sweep_cmd(SweepArgs args) {
  args.config.model = parse_model(args.model);
  args.config.threads = args.threads != 0 ? args.threads : thread_limit_from_env();
  args.config.validate();
  const auto rows = run_sweep(args.config);
  write_output(args.out, sweep_csv(rows));
  std::string summary_path = args.summary;
  if (summary_path.empty() && !args.out.empty() && args.out != "-") {
    summary_path = args.out + ".summary.json";
  }
  const std::string summary = sweep_summary(args.config, rows).dump(2) + "\n";
  if (summary_path.empty()) {
    std::cerr << summary;
  } else {
    write_output(summary_path, summary);
  }
  return kExitOk;
}

// ---- verify

struct VerifyArgs {
  std::string path;
  std::string drivers;
  std::string mode = "node";
  std::size_t samples = 3;
  double tol = kDefaultRankTolerance;
  std::uint64_t seed = RankOptions{}.seed;
  bool minimal = false;
};

int run_verify(const VerifyArgs& args) {
  const ParsedGraph parsed = load_graph(args.path, false);
  const DirectedGraph& g = parsed.graph;
  RankOptions options;
  options.samples = args.samples;
  options.tolerance = args.tol;
  options.seed = args.seed;
  if (args.samples == 0) throw InputError("--samples must be at least 1");

  json out{{"mode", args.mode}};
  RankVerdict verdict;
  std::size_t size = 0;
  const DirectedGraph* space = &g;
  LineDigraph line;
  if (args.mode == "node") {
    size = g.node_count();
    if (size > kMaxRankTestSize) {
      throw InputError(fmt::format(
          "rank test limited to N <= {} (got {}); use `netctl analyze` for large graphs",
          kMaxRankTestSize, size));
    }
    const auto drivers = parse_node_list(parsed, args.drivers);
    verdict = structural_rank_test(g, drivers, options);
    json ids = json::array();
    for (NodeId v : drivers) ids.push_back(parsed.original_ids[v]);
    out["controlled"] = "nodes";
    out["drivers"] = ids;
  } else if (args.mode == "edge") {
    size = g.edge_count();
    if (size > kMaxRankTestSize) {
      throw InputError(fmt::format(
          "edge-space rank test limited to E <= {} (got {}); use `netctl analyze` for large graphs",
          kMaxRankTestSize, size));
    }
    const auto drivers = parse_edge_drivers(parsed, args.drivers);
    verdict = edge_rank_test(g, drivers, options);
    json ids = json::array();
    for (const Edge& e : drivers) {
      ids.push_back({parsed.original_ids[e.source], parsed.original_ids[e.target]});
    }
    out["controlled"] = "edges";
    out["drivers"] = ids;
    line = to_line_digraph(g);
    space = &line.graph;
  } else {
    throw InputError("--mode must be node or edge");
  }
  out["dimension"] = size;
  out["full_rank"] = verdict.full_rank;
  out["rank"] = verdict.rank;
  out["samples_used"] = verdict.samples_used;
  out["tolerance"] = round_sig6(verdict.tolerance);
  if (args.minimal) {
    if (size <= kMaxBruteForceSize) {
      const auto best = brute_force_min_drivers(*space, kMaxBruteForceSize, options);
      out["minimal_dedicated_drivers"] = best.size;
      out["minimal_independent_inputs"] = brute_force_min_inputs(*space, options);
    } else {
      out["minimal_dedicated_drivers"] = nullptr;
      out["minimal_note"] = fmt::format("brute force skipped above {} states", kMaxBruteForceSize);
    }
  }
  std::cout << out.dump(2) << "\n";
  return verdict.full_rank ? kExitOk : kExitVerification;
}

// ---- generate

struct GenerateArgs {
  std::string model = "er";
  GeneratorSpec spec;
  std::string spec_path;
  std::string out;
};

int run_generate(GenerateArgs args) {
  if (!args.spec_path.empty()) {
    try {
      args.spec = json::parse(read_file(args.spec_path)).get<GeneratorSpec>();
    } catch (const json::exception& e) {
      throw InputError(args.spec_path + ": " + e.what());
    }
  } else {
    args.spec.model = parse_model(args.model);
  }
  const DirectedGraph g = generate(args.spec);
  std::string header = fmt::format("# generated by {} {}: model={} n={} k={} seed={}", kToolName,
                                   kToolVersion, to_string(args.spec.model), args.spec.n,
                                   format_sig6(args.spec.mean_degree), args.spec.seed);
  if (args.spec.model == GeneratorModel::sf) header += " gamma=" + format_sig6(args.spec.gamma);
  write_output(args.out, header + "\n" + serialize_edge_list(g));
  return kExitOk;
}

// ---- steer

struct SteerArgs {
  std::string path;
  std::string drivers;
  std::string x0;
  std::string xf;
  double tf = 1.0;
  std::size_t steps = 1000;
  std::uint64_t seed = RankOptions{}.seed;
  std::string out;
};

int run_steer(const SteerArgs& args) {
  const ParsedGraph parsed = load_graph(args.path, false);
  const DirectedGraph& g = parsed.graph;
  const std::size_t n = g.node_count();
  if (n > kMaxRankTestSize) {
    throw InputError(fmt::format("steering limited to N <= {} (got {})", kMaxRankTestSize, n));
  }
  if (!(args.tf > 0.0)) throw InputError("--tf must be positive");
  if (args.steps == 0) throw InputError("--steps must be at least 1");
  const auto drivers = parse_node_list(parsed, args.drivers);
  const Eigen::VectorXd x0 = parse_vector(args.x0, n, "--x0");
  const Eigen::VectorXd xf = parse_vector(args.xf, n, "--xf");

  SplitMix64 rng(args.seed);
  const LtiSystem system = sample_system(g, InputPattern::dedicated(drivers), rng);
  const Trajectory traj = steer(system, x0, xf, args.tf, args.steps);

  std::string csv = "time";
  for (std::size_t i = 0; i < n; ++i) csv += fmt::format(",x_{}", parsed.original_ids[i]);
  for (std::size_t k = 0; k < drivers.size(); ++k) csv += fmt::format(",u_{}", k);
  csv += '\n';
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    csv += format_sig6(traj.times[s]);
    for (Eigen::Index i = 0; i < traj.states[s].size(); ++i) csv += "," + format_sig6(traj.states[s](i));
    for (Eigen::Index k = 0; k < traj.inputs[s].size(); ++k) csv += "," + format_sig6(traj.inputs[s](k));
    csv += '\n';
  }
  write_output(args.out, csv);
  fmt::print(stderr, "steer: final_error={} relative_error={} energy={} gramian_condition={}\n",
             format_sig6(traj.final_error), format_sig6(traj.final_relative_error),
             format_sig6(traj.energy), format_sig6(traj.gramian_condition));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netctl: structural controllability of directed networks"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Node and edge control report as JSON");
  analyze_cmd->add_option("path", analyze_args.path, "Edge-list file")->required();
  analyze_cmd->add_option("-o,--out", analyze_args.out, "Output file (default stdout)");
  analyze_cmd->add_flag("--drop-self-loops", analyze_args.drop_self_loops,
                        "Drop self-loops instead of rejecting the file");
  analyze_cmd->add_flag("--timestamp", analyze_args.timestamp, "Add a generated_at field");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Driver fractions against mean degree as CSV");
  sweep_cmd->add_option("--model", sweep_args.model, "er or sf")->capture_default_str();
  sweep_cmd->add_option("--n", sweep_args.config.n, "Nodes")->capture_default_str();
  sweep_cmd->add_option("--k-min", sweep_args.config.k_min)->capture_default_str();
  sweep_cmd->add_option("--k-max", sweep_args.config.k_max)->capture_default_str();
  sweep_cmd->add_option("--k-steps", sweep_args.config.k_steps)->capture_default_str();
  sweep_cmd->add_option("--replicates", sweep_args.config.replicates)->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_args.config.seed)->capture_default_str();
  sweep_cmd->add_option("--gamma", sweep_args.config.gamma, "sf exponent")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep_args.threads, "Worker threads (default NETCTL_THREADS or all cores)");
  sweep_cmd->add_option("-o,--out", sweep_args.out, "CSV file (default stdout)");
  sweep_cmd->add_option("--summary", sweep_args.summary, "Summary JSON (default <out>.summary.json)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Kalman rank test of a driver set (N <= 25)");
  verify_cmd->add_option("path", verify_args.path, "Edge-list file")->required();
  verify_cmd->add_option("--drivers", verify_args.drivers, "Nodes \"0,2\" or edges \"0-1,2-3\"")
      ->required();
  verify_cmd->add_option("--mode", verify_args.mode, "node or edge")->capture_default_str();
  verify_cmd->add_option("--samples", verify_args.samples, "Random weight draws")->capture_default_str();
  verify_cmd->add_option("--tol", verify_args.tol, "Relative SVD threshold")->capture_default_str();
  verify_cmd->add_option("--seed", verify_args.seed, "Weight seed")->capture_default_str();
  verify_cmd->add_flag("--minimal", verify_args.minimal, "Brute-force minimum for N <= 10");

  GenerateArgs generate_args;
  auto* generate_cmd = app.add_subcommand("generate", "Random ER or SF digraph as an edge list");
  generate_cmd->add_option("--model", generate_args.model, "er or sf")->capture_default_str();
  generate_cmd->add_option("--n", generate_args.spec.n, "Nodes");
  generate_cmd->add_option("--k", generate_args.spec.mean_degree, "Mean degree E/N");
  generate_cmd->add_option("--gamma", generate_args.spec.gamma, "sf exponent")->capture_default_str();
  generate_cmd->add_option("--seed", generate_args.spec.seed)->capture_default_str();
  generate_cmd->add_option("--spec", generate_args.spec_path, "JSON spec file instead of flags");
  generate_cmd->add_option("-o,--out", generate_args.out, "Output file (default stdout)");

  SteerArgs steer_args;
  auto* steer_cmd = app.add_subcommand("steer", "Minimum-energy trajectory as CSV (N <= 25)");
  steer_cmd->add_option("path", steer_args.path, "Edge-list file")->required();
  steer_cmd->add_option("--drivers", steer_args.drivers, "Driver nodes \"0,2\"")->required();
  steer_cmd->add_option("--x0", steer_args.x0, "Initial state (default zero)");
  steer_cmd->add_option("--xf", steer_args.xf, "Target state (default zero)");
  steer_cmd->add_option("--tf", steer_args.tf, "Horizon")->capture_default_str();
  steer_cmd->add_option("--steps", steer_args.steps, "RK4 steps")->capture_default_str();
  steer_cmd->add_option("--seed", steer_args.seed, "Weight seed")->capture_default_str();
  steer_cmd->add_option("-o,--out", steer_args.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_args);
    if (*sweep_cmd) return run_sweep_cmd(sweep_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*generate_cmd) return run_generate(generate_args);
    if (*steer_cmd) return run_steer(steer_args);
  } catch (const UncontrollableError& e) {
    fmt::print(stderr, "netctl: uncontrollable: {}\n", e.what());
    return kExitVerification;
  } catch (const IllConditionedError& e) {
    fmt::print(stderr, "netctl: {}\n", e.what());
    return kExitVerification;
  } catch (const ParseError& e) {
    fmt::print(stderr, "netctl: parse error: {}\n", e.what());
    return kExitInput;
  } catch (const GenerationStalled& e) {
    fmt::print(stderr, "netctl: {}\n", e.what());
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "netctl: {}\n", e.what());
    return kExitInput;
  } catch (const InputError& e) {
    fmt::print(stderr, "netctl: {}\n", e.what());
    return kExitInput;
  }
  return kExitInput;
}
