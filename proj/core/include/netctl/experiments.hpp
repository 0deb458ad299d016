#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "netctl/edge_control.hpp"
#include "netctl/generators.hpp"
#include "netctl/graph.hpp"
#include "netctl/node_control.hpp"

namespace netctl {

inline constexpr std::string_view kToolName = "netctl";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// 64-bit FNV-1a of the raw input bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

/// Rounds to 6 significant digits, the precision of every emitted float.
double round_sig6(double x);
std::string format_sig6(double x);

/// Both analyses of one ingested graph.
struct AnalysisReport {
  std::string digest;
  std::size_t edge_lines = 0;
  std::size_t duplicate_edges = 0;
  std::size_t dropped_self_loops = 0;
  std::vector<std::uint64_t> original_ids;
  GraphStats stats;
  NodeControlAnalysis node;
  EdgeControlAnalysis edge;
  DriverEdgeReport edge_report;
  /// Edge-space attachments as (driver edge, attached edge) pairs.
  std::vector<std::pair<Edge, Edge>> edge_attachments;
};

/// Throws std::invalid_argument for a graph without nodes.
AnalysisReport analyze(const ParsedGraph& parsed, std::string digest,
                       const DriverOptions& options = {});

/// Canonical JSON. Node ids are the ids of the input file. Every object
/// carrying an n_d also carries the entity it controls.
nlohmann::json to_json(const AnalysisReport& report);

struct SweepConfig {
  GeneratorModel model = GeneratorModel::er;
  std::size_t n = 500;
  double k_min = 0.0;
  double k_max = 8.0;
  std::size_t k_steps = 9;
  std::size_t replicates = 20;
  std::uint64_t seed = 1;
  double gamma = 3.0;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  void validate() const;
  /// k_steps evenly spaced mean degrees from k_min to k_max inclusive.
  std::vector<double> degrees() const;
};

struct SweepRow {
  GeneratorModel model = GeneratorModel::er;
  std::size_t n = 0;
  double mean_degree = 0.0;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  double node_n_d = 0.0;
  double edge_n_d = 0.0;
  double edge_m_d = 0.0;
  double reciprocity = 0.0;
};

/// One row per (mean degree, replicate), in that order. Replicate r at
/// degree index i uses derive_seed(seed, i * replicates + r).
std::vector<SweepRow> run_sweep(const SweepConfig& config);

std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Mean and sample standard deviation of every fraction per mean degree.
nlohmann::json sweep_summary(const SweepConfig& config, const std::vector<SweepRow>& rows);

/// NETCTL_THREADS when set to a positive integer, otherwise 0.
std::size_t thread_limit_from_env();

}  // namespace netctl
