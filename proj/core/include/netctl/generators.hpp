#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "netctl/graph.hpp"

namespace netctl {

enum class GeneratorModel { er, sf };

struct GeneratorSpec {
  GeneratorModel model = GeneratorModel::er;
  std::size_t n = 0;
  double mean_degree = 0.0;
  double gamma = 3.0;  // sf only
  std::uint64_t seed = 0;

  /// round(mean_degree * n), half away from zero.
  std::size_t edge_count() const;
  /// Throws InfeasibleSpec when the spec cannot be realized.
  void validate() const;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

class InfeasibleSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GenerationStalled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* to_string(GeneratorModel m) noexcept;
GeneratorModel parse_model(const std::string& name);

void to_json(nlohmann::json& j, const GeneratorSpec& spec);
void from_json(const nlohmann::json& j, GeneratorSpec& spec);

/// G(n, E): exactly E distinct ordered pairs drawn uniformly without
/// replacement (Floyd's sampling over the n(n-1) non-loop slots).
DirectedGraph generate_er(const GeneratorSpec& spec);

/// Static model: node i has weight (i+1)^(-1/(gamma-1)); each edge draws a
/// source and a target independently in proportion to weight, and
/// self-loops and duplicates are redrawn. Throws GenerationStalled after
/// 100*E consecutive rejections.
DirectedGraph generate_sf(const GeneratorSpec& spec);

DirectedGraph generate(const GeneratorSpec& spec);

}  // namespace netctl
