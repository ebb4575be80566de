#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "deagrs/dataset.hpp"
#include "deagrs/lp.hpp"
#include "deagrs/ram.hpp"

namespace deagrs {

/// Point of {A u + B v = d, u >= 0, v >= 0} whose u block has the largest
/// possible number of positive entries.
struct MaxSupportSolution {
  Eigen::VectorXd u;
  Eigen::VectorXd v;

  std::size_t support_size(double tol) const;
};

/**
 * Builds the maximal-support LP.  Variables are laid out as
 *
 *     [ u (q1) | u_h | w (q1) | w_h | v (q2) ]      when d is given,
 *     [ u (q1) | w (q1) | v (q2) ]                  when d is absent (= 0),
 *
 * with 0 <= w <= 1, everything else >= 0 (v additionally capped by
 * `v_upper` when supplied).  Rows read A (u + w) + B v - d (u_h + w_h) = 0
 * and the objective maximizes the sum of all w.
 */
lp::LinearProgram max_support_lp(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                  const std::optional<Eigen::VectorXd>& d,
                                  const std::optional<Eigen::VectorXd>& v_upper = std::nullopt);

/**
 * Solves max_support_lp() and recovers the maximal-support point.  For the
 * non-homogeneous system the optimum is divided by u_h + w_h.
 *
 * Throws DegenerateNormalizerError if that divisor is <= tol.support.
 */
MaxSupportSolution max_support_solution(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                        const std::optional<Eigen::VectorXd>& d, const Tolerances& tol = {},
                                        const std::optional<Eigen::VectorXd>& v_upper = std::nullopt);

/**
 * The set of all optimal solutions of the slack model for one unit, written
 * as a linear system over the efficient units:
 *
 *     sum_k lambda_k x_k + s-            = x_o
 *     sum_k lambda_k y_k          - s+   = y_o
 *     sum_k lambda_k                     = 1        (vrs only)
 *     w-.s- + w+.s+                      = budget
 *
 * where budget is the unit's optimal weighted slack total.
 */
struct OmegaSystem {
  std::size_t dmu = 0;
  Regime regime = Regime::vrs;
  std::vector<std::size_t> efficient_indices;
  Eigen::MatrixXd inputs;   // m x t
  Eigen::MatrixXd outputs;  // s x t
  Eigen::VectorXd target_inputs;
  Eigen::VectorXd target_outputs;
  Eigen::VectorXd input_row_weights;
  Eigen::VectorXd output_row_weights;
  double slack_budget = 0.0;

  std::size_t num_efficient() const noexcept { return efficient_indices.size(); }
  std::size_t num_inputs() const noexcept { return static_cast<std::size_t>(inputs.rows()); }
  std::size_t num_outputs() const noexcept { return static_cast<std::size_t>(outputs.rows()); }

  /// Coefficients on lambda: one column per efficient unit.
  Eigen::MatrixXd lambda_block() const;
  /// Coefficients on [s- | s+].
  Eigen::MatrixXd slack_block() const;
  Eigen::VectorXd rhs() const;
  /// 0 for slacks whose row weight is 0, +inf otherwise.
  Eigen::VectorXd slack_upper_bounds() const;
};

OmegaSystem omega_system(const Dataset& data, const RamResult& ram, std::span<const std::size_t> efficient);

struct GrsResult {
  std::size_t dmu = 0;
  /// Dataset indices of the global reference set, ascending.
  std::vector<std::size_t> members;
  std::vector<std::size_t> efficient_indices;
  /// Normalized intensities, one per efficient unit; zero off the members.
  Eigen::VectorXd weights;
  Eigen::VectorXd input_slacks;
  Eigen::VectorXd output_slacks;
  /// sum over members of weight * (x_j, y_j): a relative-interior point of
  /// the minimum face.
  Eigen::VectorXd projected_inputs;
  Eigen::VectorXd projected_outputs;

  /// Normalized weight of dataset unit j (0 when j is not a member).
  double weight_of(std::size_t j) const;
};

struct MinimumFace {
  std::vector<std::size_t> vertex_indices;
  std::size_t dimension = 0;
};

/// The single LP whose optimum yields the whole reference set.
lp::LinearProgram build_reference_set_lp(const OmegaSystem& omega);

GrsResult identify_grs(const OmegaSystem& omega, const Tolerances& tol = {});

/// Runs the slack model over every unit and then identify_grs() for unit o.
GrsResult identify_grs(const Dataset& data, std::size_t o, WeightScheme scheme = WeightScheme::ram,
                       Regime regime = Regime::vrs, const Tolerances& tol = {});

/// Reference-set membership by brute force: one LP per efficient unit k,
/// maximizing lambda_k over the optimal-solution system.
std::vector<std::size_t> oracle_grs(const OmegaSystem& omega, const Tolerances& tol = {});

MinimumFace minimum_face(const Dataset& data, const GrsResult& grs, const Tolerances& tol = {});

/// Rank of the differences between the given points (columns of `points`).
std::size_t affine_dimension(const Eigen::MatrixXd& points, double rank_tol);

}  // namespace deagrs
