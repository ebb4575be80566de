#pragma once

#include <cstddef>
#include <limits>
#include <optional>

#include <Eigen/Dense>

namespace deagrs::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { maximize, minimize };

/**
 * Equality-form LP with box bounds on every variable:
 *
 *     opt  c'x   s.t.  A x = b,  lower <= x <= upper.
 *
 * Lower bounds must be finite; upper bounds may be +infinity.  The object is
 * validated on construction and immutable afterwards, so a single instance can
 * be shared across concurrent solves.
 */
class LinearProgram {
 public:
  /// Bounds default to 0 <= x < +inf.
  LinearProgram(Sense sense, Eigen::VectorXd objective, Eigen::MatrixXd constraints, Eigen::VectorXd rhs);

  LinearProgram(Sense sense, Eigen::VectorXd objective, Eigen::MatrixXd constraints, Eigen::VectorXd rhs,
                Eigen::VectorXd lower_bounds, Eigen::VectorXd upper_bounds);

  Sense sense() const noexcept { return sense_; }
  const Eigen::VectorXd& objective() const noexcept { return objective_; }
  const Eigen::MatrixXd& constraints() const noexcept { return constraints_; }
  const Eigen::VectorXd& rhs() const noexcept { return rhs_; }
  const Eigen::VectorXd& lower_bounds() const noexcept { return lower_; }
  const Eigen::VectorXd& upper_bounds() const noexcept { return upper_; }

  Eigen::Index num_rows() const noexcept { return constraints_.rows(); }
  Eigen::Index num_cols() const noexcept { return constraints_.cols(); }

 private:
  void validate() const;

  Sense sense_;
  Eigen::VectorXd objective_;
  Eigen::MatrixXd constraints_;
  Eigen::VectorXd rhs_;
  Eigen::VectorXd lower_;
  Eigen::VectorXd upper_;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Eigen::VectorXd primal;         // empty unless optimal
  double objective_value = 0.0;   // meaningful only when optimal
  std::size_t iterations = 0;     // pivots plus bound flips, both phases

  bool optimal() const noexcept { return status == Status::optimal; }
};

struct SolverSettings {
  double feas_tol = 1e-9;
  double opt_tol = 1e-9;
  /// Unset means 50 * (rows + cols).
  std::optional<std::size_t> max_iterations;
  /// Switch from Dantzig to Bland pricing after rows + cols consecutive
  /// degenerate steps.
  bool bland_fallback = true;
};

/**
 * Two-phase primal simplex with native variable bounds.  Nonbasic variables
 * sit at either bound; an entering variable may simply flip to its opposite
 * bound without a basis change.
 *
 * Throws IterationLimitError when the pivot budget is exhausted and
 * DimensionError when `settings` is invalid.
 */
Solution solve(const LinearProgram& lp, const SolverSettings& settings = {});

const char* to_string(Status status) noexcept;

}  // namespace deagrs::lp
