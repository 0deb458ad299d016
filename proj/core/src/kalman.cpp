#include "netctl/kalman.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace netctl {

namespace {

constexpr double kWeightLo = 0.5;
constexpr double kWeightHi = 1.5;

bool next_combination(std::vector<NodeId>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void LtiSystem::validate() const {
  if (a.rows() != a.cols()) throw std::invalid_argument("state matrix must be square");
  if (b.rows() != a.rows()) {
    throw std::invalid_argument("input matrix has " + std::to_string(b.rows()) +
                                " rows, state dimension is " + std::to_string(a.rows()));
  }
  if (b.cols() < 1) throw std::invalid_argument("Kalman condition requires M >= 1");
  for (Eigen::Index k = 0; k < b.cols(); ++k) {
    if (b.col(k).isZero(0.0)) {
      throw std::invalid_argument("input column " + std::to_string(k) + " drives no node");
    }
  }
}

InputPattern InputPattern::dedicated(std::span<const NodeId> drivers) {
  InputPattern p;
  for (NodeId d : drivers) p.columns.push_back({d});
  return p;
}

InputPattern InputPattern::with_attachments(std::span<const NodeId> drivers,
                                            std::span<const InputAttachment> attachments) {
  InputPattern p = dedicated(drivers);
  for (const InputAttachment& att : attachments) {
    auto it = std::find(drivers.begin(), drivers.end(), att.driver);
    if (it == drivers.end()) {
      throw std::invalid_argument("attachment refers to node " + std::to_string(att.driver) +
                                  ", which is not a driver");
    }
    p.columns[static_cast<std::size_t>(it - drivers.begin())].push_back(att.node);
  }
  return p;
}

UncontrollableError::UncontrollableError(std::size_t rank, std::size_t n)
    : std::runtime_error("system is not controllable: rank(Q) = " + std::to_string(rank) +
                         " < N = " + std::to_string(n)),
      rank_(rank),
      n_(n) {}

IllConditionedError::IllConditionedError(double condition)
    : std::runtime_error("controllability Gramian is ill-conditioned (condition number " +
                         std::to_string(condition) +
                         "); use a longer horizon or a different driver set"),
      condition_(condition) {}

Eigen::MatrixXd controllability_matrix(const LtiSystem& s, bool normalize_blocks) {
  s.validate();
  const Eigen::Index n = s.a.rows();
  const Eigen::Index m = s.b.cols();
  Eigen::MatrixXd q(n, n * m);
  Eigen::MatrixXd block = s.b;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (normalize_blocks) {
      for (Eigen::Index c = 0; c < m; ++c) {
        const double norm = block.col(c).norm();
        if (norm > 0.0) block.col(c) /= norm;
      }
    }
    q.middleCols(k * m, m) = block;
    if (k + 1 < n) block = s.a * block;
  }
  return q;
}

std::size_t numerical_rank(const Eigen::MatrixXd& q, double tol) {
  if (q.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(q);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double threshold =
      tol * sigma(0) * static_cast<double>(std::max(q.rows(), q.cols()));
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold) ++rank;
  }
  return rank;
}

LtiSystem sample_system(const DirectedGraph& g, const InputPattern& pattern, SplitMix64& rng,
                        double damping) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  LtiSystem s;
  s.a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) s.a(e.target, e.source) = rng.uniform(kWeightLo, kWeightHi);
  if (damping != 0.0) s.a.diagonal().array() -= damping;

  s.b = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(pattern.columns.size()));
  for (std::size_t k = 0; k < pattern.columns.size(); ++k) {
    const auto& nodes = pattern.columns[k];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] >= g.node_count()) {
        throw std::invalid_argument("driver node " + std::to_string(nodes[i]) +
                                    " is not in the graph");
      }
      s.b(nodes[i], static_cast<Eigen::Index>(k)) =
          i == 0 ? 1.0 : rng.uniform(kWeightLo, kWeightHi);
    }
  }
  return s;
}

RankVerdict structural_rank_test(const DirectedGraph& g, const InputPattern& pattern,
                                 const RankOptions& options) {
  if (pattern.columns.empty()) {
    throw std::invalid_argument("Kalman condition requires M >= 1 driver");
  }
  if (options.samples == 0) throw std::invalid_argument("samples must be positive");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  RankVerdict verdict;
  verdict.tolerance = options.tolerance;
  for (std::size_t s = 0; s < options.samples; ++s) {
    SplitMix64 rng(derive_seed(options.seed, s));
    const LtiSystem sys = sample_system(g, pattern, rng, options.damping);
    const std::size_t rank = numerical_rank(controllability_matrix(sys), options.tolerance);
    verdict.rank = std::max(verdict.rank, rank);
    verdict.samples_used = s + 1;
    if (rank == g.node_count()) {
      verdict.full_rank = true;
      break;
    }
  }
  return verdict;
}

RankVerdict structural_rank_test(const DirectedGraph& g, std::span<const NodeId> drivers,
                                 const RankOptions& options) {
  if (drivers.empty()) throw std::invalid_argument("Kalman condition requires M >= 1 driver");
  return structural_rank_test(g, InputPattern::dedicated(drivers), options);
}

RankVerdict edge_rank_test(const DirectedGraph& g, std::span<const Edge> driver_edges,
                           const RankOptions& options) {
  const LineDigraph line = to_line_digraph(g);
  std::vector<NodeId> drivers;
  for (const Edge& e : driver_edges) {
    const std::size_t idx = g.edge_index(e.source, e.target);
    if (idx == g.edge_count()) {
      throw std::invalid_argument("driver edge " + std::to_string(e.source) + "-" +
                                  std::to_string(e.target) + " is not in the graph");
    }
    drivers.push_back(static_cast<NodeId>(idx));
  }
  return structural_rank_test(line.graph, drivers, options);
}

MinimalDriverSet brute_force_min_drivers(const DirectedGraph& g, std::size_t max_n,
                                         const RankOptions& options) {
  const std::size_t n = g.node_count();
  if (n > max_n) {
    throw SizeLimitError("brute force is limited to " + std::to_string(max_n) +
                         " nodes; graph has " + std::to_string(n));
  }
  if (n == 0) throw std::invalid_argument("graph has no nodes");
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<NodeId> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<NodeId>(i);
    do {
      if (structural_rank_test(g, subset, options).full_rank) return {k, subset};
    } while (next_combination(subset, n));
  }
  // Unreachable: driving every node always gives rank N.
  throw std::logic_error("no driver subset passed the rank test");
}

std::size_t brute_force_min_inputs(const DirectedGraph& g, const RankOptions& options) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("graph has no nodes");
  const InputPattern none;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t s = 0; s < options.samples; ++s) {
      SplitMix64 rng(derive_seed(options.seed ^ 0xD15EA5EULL, m * 1024 + s));
      LtiSystem sys = sample_system(g, none, rng, options.damping);
      sys.b.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
      for (Eigen::Index i = 0; i < sys.b.size(); ++i) {
        sys.b.data()[i] = rng.uniform(kWeightLo, kWeightHi);
      }
      if (numerical_rank(controllability_matrix(sys), options.tolerance) == n) return m;
    }
  }
  return n;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm requires a square matrix");
  return a.exp();
}

Eigen::MatrixXd controllability_gramian(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                        double tf, std::size_t panels) {
  if (!(tf > 0.0)) throw std::invalid_argument("horizon tf must be positive");
  if (panels == 0) throw std::invalid_argument("panels must be positive");
  const std::size_t intervals = 2 * panels;
  const double h = tf / static_cast<double>(intervals);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(a.rows(), a.rows());
  for (std::size_t k = 0; k <= intervals; ++k) {
    const Eigen::MatrixXd eb = expm(a * (h * static_cast<double>(k))) * b;
    const double weight = (k == 0 || k == intervals) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    w.noalias() += weight * (eb * eb.transpose());
  }
  w *= h / 3.0;
  return 0.5 * (w + w.transpose());
}

namespace {

Trajectory integrate(const LtiSystem& s, const Eigen::VectorXd& x0,
                     const std::function<Eigen::VectorXd(double)>& input, double tf,
                     std::size_t steps) {
  if (!(tf > 0.0)) throw std::invalid_argument("horizon tf must be positive");
  if (steps == 0) throw std::invalid_argument("steps must be positive");
  if (static_cast<std::size_t>(x0.size()) != s.n()) {
    throw std::invalid_argument("initial state has the wrong dimension");
  }
  const double h = tf / static_cast<double>(steps);
  auto rhs = [&](double t, const Eigen::VectorXd& x) -> Eigen::VectorXd {
    return s.a * x + s.b * input(t);
  };

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.inputs.reserve(steps + 1);
  Eigen::VectorXd x = x0;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = h * static_cast<double>(k);
    const Eigen::VectorXd u = input(t);
    traj.times.push_back(t);
    traj.states.push_back(x);
    traj.inputs.push_back(u);
    if (k == steps) break;
    const Eigen::VectorXd k1 = s.a * x + s.b * u;
    const Eigen::VectorXd k2 = rhs(t + 0.5 * h, x + 0.5 * h * k1);
    const Eigen::VectorXd k3 = rhs(t + 0.5 * h, x + 0.5 * h * k2);
    const Eigen::VectorXd k4 = rhs(t + h, x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return traj;
}

}  // namespace

Trajectory simulate(const LtiSystem& s, const Eigen::VectorXd& x0,
                    const std::function<Eigen::VectorXd(double)>& input, double tf,
                    std::size_t steps) {
  s.validate();
  return integrate(s, x0, input, tf, steps);
}

Trajectory steer(const LtiSystem& s, const Eigen::VectorXd& x0, const Eigen::VectorXd& xf,
                 double tf, std::size_t steps, const SteerOptions& options) {
  s.validate();
  if (static_cast<std::size_t>(xf.size()) != s.n()) {
    throw std::invalid_argument("target state has the wrong dimension");
  }
  const std::size_t rank = numerical_rank(controllability_matrix(s), options.rank_tolerance);
  if (rank < s.n()) throw UncontrollableError(rank, s.n());

  const Eigen::MatrixXd w = controllability_gramian(s.a, s.b, tf, options.panels);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(w, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  const double condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (!(condition <= options.max_condition)) throw IllConditionedError(condition);

  // u(t) = B' e^{A'(tf - t)} W^{-1} (xf - e^{A tf} x0)
  const Eigen::VectorXd gap = xf - expm(s.a * tf) * x0;
  const Eigen::VectorXd costate = w.ldlt().solve(gap);
  const Eigen::MatrixXd at = s.a.transpose();
  const Eigen::MatrixXd bt = s.b.transpose();
  auto input = [&](double t) -> Eigen::VectorXd {
    return bt * (expm(at * (tf - t)) * costate);
  };

  Trajectory traj = integrate(s, x0, input, tf, steps);
  traj.energy = gap.dot(costate);
  traj.gramian_condition = condition;
  traj.final_error = (traj.states.back() - xf).norm();
  const double scale = xf.norm();
  traj.final_relative_error = scale > 0.0 ? traj.final_error / scale : traj.final_error;
  return traj;
}

}  // namespace netctl
