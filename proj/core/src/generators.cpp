#include "netctl/generators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <vector>

#include "netctl/random.hpp"

namespace netctl {

std::size_t GeneratorSpec::edge_count() const {
  return static_cast<std::size_t>(std::llround(mean_degree * static_cast<double>(n)));
}

void GeneratorSpec::validate() const {
  if (n == 0) throw InfeasibleSpec("n must be positive");
  if (!(mean_degree >= 0.0) || !std::isfinite(mean_degree)) {
    throw InfeasibleSpec("mean degree must be a finite non-negative number");
  }
  if (mean_degree > static_cast<double>(n - 1)) {
    throw InfeasibleSpec("mean degree " + std::to_string(mean_degree) + " exceeds n - 1 = " +
                         std::to_string(n - 1));
  }
  const double slots = static_cast<double>(n) * static_cast<double>(n - 1);
  if (static_cast<double>(edge_count()) > slots) {
    throw InfeasibleSpec("requested edge count exceeds n(n-1)");
  }
  if (model == GeneratorModel::sf && !(gamma > 2.0)) {
    throw InfeasibleSpec("scale-free exponent gamma must exceed 2");
  }
}

const char* to_string(GeneratorModel m) noexcept { return m == GeneratorModel::er ? "er" : "sf"; }

GeneratorModel parse_model(const std::string& name) {
  if (name == "er") return GeneratorModel::er;
  if (name == "sf") return GeneratorModel::sf;
  throw std::invalid_argument("unknown generator model \"" + name + "\" (expected er or sf)");
}

void to_json(nlohmann::json& j, const GeneratorSpec& spec) {
  j = nlohmann::json{{"model", to_string(spec.model)},
                     {"n", spec.n},
                     {"mean_degree", spec.mean_degree},
                     {"gamma", spec.gamma},
                     {"seed", spec.seed}};
}

void from_json(const nlohmann::json& j, GeneratorSpec& spec) {
  spec.model = parse_model(j.at("model").get<std::string>());
  spec.n = j.at("n").get<std::size_t>();
  spec.mean_degree = j.at("mean_degree").get<double>();
  spec.gamma = j.value("gamma", 3.0);
  spec.seed = j.value("seed", std::uint64_t{0});
}

DirectedGraph generate_er(const GeneratorSpec& spec) {
  if (spec.model != GeneratorModel::er) throw std::invalid_argument("spec model is not er");
  spec.validate();
  const std::uint64_t n = spec.n;
  const std::uint64_t slots = n * (n - 1);
  const std::uint64_t m = spec.edge_count();

  SplitMix64 rng(spec.seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  for (std::uint64_t j = slots - m; j < slots; ++j) {
    const std::uint64_t r = rng.below(j + 1);
    if (!chosen.insert(r).second) chosen.insert(j);
  }

  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  for (std::uint64_t slot : chosen) {
    const auto source = static_cast<NodeId>(slot / (n - 1));
    auto target = static_cast<NodeId>(slot % (n - 1));
    if (target >= source) ++target;
    edges.push_back({source, target});
  }
  return DirectedGraph::from_edges(spec.n, std::move(edges));
}

DirectedGraph generate_sf(const GeneratorSpec& spec) {
  if (spec.model != GeneratorModel::sf) throw std::invalid_argument("spec model is not sf");
  spec.validate();
  const std::size_t n = spec.n;
  const std::size_t m = spec.edge_count();

  const double exponent = -1.0 / (spec.gamma - 1.0);
  std::vector<double> cumulative(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += std::pow(static_cast<double>(i + 1), exponent);
    cumulative[i] = total;
  }
  auto draw = [&](SplitMix64& rng) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    return static_cast<NodeId>(it - cumulative.begin());
  };

  SplitMix64 rng(spec.seed);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  std::vector<Edge> edges;
  edges.reserve(m);
  std::size_t rejections = 0;
  const std::size_t stall_limit = 100 * std::max<std::size_t>(m, 1);
  while (edges.size() < m) {
    const NodeId source = draw(rng);
    const NodeId target = draw(rng);
    const std::uint64_t key = static_cast<std::uint64_t>(source) * n + target;
    if (source == target || !seen.insert(key).second) {
      if (++rejections > stall_limit) {
        throw GenerationStalled("scale-free generation stalled after " +
                                std::to_string(stall_limit) +
                                " consecutive rejections; lower the mean degree");
      }
      continue;
    }
    rejections = 0;
    edges.push_back({source, target});
  }
  return DirectedGraph::from_edges(n, std::move(edges));
}

DirectedGraph generate(const GeneratorSpec& spec) {
  return spec.model == GeneratorModel::er ? generate_er(spec) : generate_sf(spec);
}

}  // namespace netctl
