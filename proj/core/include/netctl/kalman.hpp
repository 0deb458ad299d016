#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "netctl/graph.hpp"
#include "netctl/node_control.hpp"
#include "netctl/random.hpp"

namespace netctl {

/// dx/dt = A x + B u. a(i, j) != 0 iff the graph has edge j -> i.
struct LtiSystem {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;

  std::size_t n() const noexcept { return static_cast<std::size_t>(a.rows()); }
  std::size_t m() const noexcept { return static_cast<std::size_t>(b.cols()); }

  /// Throws std::invalid_argument unless A is square, B has N rows, M >= 1
  /// and no column of B is zero.
  void validate() const;
};

/// Which nodes each independent input drives. Column k always drives
/// columns[k].front(); further entries are nodes attached to the same
/// signal.
struct InputPattern {
  std::vector<std::vector<NodeId>> columns;

  /// One dedicated input per driver.
  static InputPattern dedicated(std::span<const NodeId> drivers);
  /// Dedicated inputs plus attachments sharing a driver's signal.
  static InputPattern with_attachments(std::span<const NodeId> drivers,
                                       std::span<const InputAttachment> attachments);
};

struct RankVerdict {
  bool full_rank = false;
  std::size_t rank = 0;  // best over the samples evaluated
  std::size_t samples_used = 0;
  double tolerance = 0.0;
};

inline constexpr double kDefaultRankTolerance = 1e-10;

struct RankOptions {
  std::size_t samples = 3;
  /// Relative singular-value threshold; scaled by sigma_max and max(N, N*M).
  double tolerance = kDefaultRankTolerance;
  std::uint64_t seed = 0x6b616c6d616eULL;
  /// Diagonal damping T in A = W - T (zero by default).
  double damping = 0.0;
};

class UncontrollableError : public std::runtime_error {
 public:
  UncontrollableError(std::size_t rank, std::size_t n);
  std::size_t rank() const noexcept { return rank_; }
  std::size_t n() const noexcept { return n_; }

 private:
  std::size_t rank_;
  std::size_t n_;
};

class IllConditionedError : public std::runtime_error {
 public:
  explicit IllConditionedError(double condition);
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

/// [B, AB, ..., A^{N-1}B]. With normalize_blocks, each column is rescaled to
/// unit norm before the next multiplication; this leaves the rank unchanged
/// and keeps the entries bounded.
Eigen::MatrixXd controllability_matrix(const LtiSystem& s, bool normalize_blocks = true);

/// Number of singular values above tol * sigma_max * max(rows, cols).
std::size_t numerical_rank(const Eigen::MatrixXd& q, double tol);

/// A with weights drawn uniformly from [0.5, 1.5] on every edge (minus
/// `damping` on the diagonal) and B from `pattern`: the driver entry of each
/// column is 1, attachment entries are drawn from [0.5, 1.5].
LtiSystem sample_system(const DirectedGraph& g, const InputPattern& pattern, SplitMix64& rng,
                        double damping = 0.0);

/// Kalman rank test over `samples` random weight draws; full rank on any
/// draw counts as structurally controllable. Throws std::invalid_argument
/// for an empty driver set.
RankVerdict structural_rank_test(const DirectedGraph& g, std::span<const NodeId> drivers,
                                 const RankOptions& options = {});
RankVerdict structural_rank_test(const DirectedGraph& g, const InputPattern& pattern,
                                 const RankOptions& options = {});

/// Rank test of the switchboard system x' = (W - T) x + B u on the line
/// digraph, with one dedicated input per driver edge.
RankVerdict edge_rank_test(const DirectedGraph& g, std::span<const Edge> driver_edges,
                           const RankOptions& options = {});

struct MinimalDriverSet {
  std::size_t size = 0;
  std::vector<NodeId> witness;
};

class SizeLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Smallest subset of nodes that passes structural_rank_test with one
/// dedicated input per node; subsets are tried by size, then
/// lexicographically. Throws SizeLimitError when N > max_n.
MinimalDriverSet brute_force_min_drivers(const DirectedGraph& g, std::size_t max_n = 10,
                                         const RankOptions& options = {});

/// Smallest number M of independent inputs for which a random dense N x M
/// input matrix passes the Kalman test. Makes no use of matchings.
std::size_t brute_force_min_inputs(const DirectedGraph& g, const RankOptions& options = {});

/// Matrix exponential (scaling and squaring with a Pade approximant).
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/// Integral of e^{At} B B' e^{A't} over [0, tf] by composite Simpson with
/// `panels` panels (2 * panels subintervals).
Eigen::MatrixXd controllability_gramian(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                        double tf, std::size_t panels = 200);

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  std::vector<Eigen::VectorXd> inputs;
  double energy = 0.0;
  double final_error = 0.0;           // |x(tf) - xf|
  double final_relative_error = 0.0;  // divided by |xf| (absolute when xf = 0)
  double gramian_condition = 0.0;
};

struct SteerOptions {
  std::size_t panels = 200;
  double rank_tolerance = kDefaultRankTolerance;
  double max_condition = 1e12;
};

/// Minimum-energy transfer from x0 to xf over [0, tf], integrated with
/// classical RK4 in `steps` steps. Throws UncontrollableError when the
/// system fails the Kalman test and IllConditionedError when the Gramian's
/// condition number exceeds options.max_condition.
Trajectory steer(const LtiSystem& s, const Eigen::VectorXd& x0, const Eigen::VectorXd& xf,
                 double tf, std::size_t steps, const SteerOptions& options = {});

/// Open-loop RK4 integration under an arbitrary input signal.
Trajectory simulate(const LtiSystem& s, const Eigen::VectorXd& x0,
                    const std::function<Eigen::VectorXd(double)>& input, double tf,
                    std::size_t steps);

}  // namespace netctl
