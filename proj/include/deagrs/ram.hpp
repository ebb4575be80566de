#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "deagrs/dataset.hpp"
#include "deagrs/lp.hpp"

namespace deagrs {

enum class WeightScheme { ram, additive, bam };
enum class Regime { vrs, crs };

/// Thresholds shared by the whole pipeline.
struct Tolerances {
  lp::SolverSettings solver;
  double efficiency = 1e-7;  // on the optimal weighted slack total
  double support = 1e-7;     // on normalized reference weights
  double rts = 1e-6;         // zero test on the intercept interval
  double rank = 1e-9;        // relative singular-value cutoff for face dimension
};

/// Per-row spread max_j - min_j of the observed data.
struct Ranges {
  Eigen::VectorXd input;
  Eigen::VectorXd output;
};

/// Coefficients on s- and s+ in an additive-type objective.  A zero entry
/// means the slack is pinned at zero.
struct SlackWeights {
  Eigen::VectorXd input;
  Eigen::VectorXd output;
};

struct RamResult {
  std::size_t dmu = 0;
  WeightScheme scheme = WeightScheme::ram;
  Regime regime = Regime::vrs;
  /// rho in (-inf, 1] for the ram scheme; the raw optimal objective otherwise.
  double score = 1.0;
  /// Optimal value of sum(s-/R-) + sum(s+/R+) (or the scheme's analogue),
  /// taken straight from the solver.
  double slack_sum = 0.0;
  Eigen::VectorXd input_slacks;
  Eigen::VectorXd output_slacks;
  Eigen::VectorXd lambda;
  Eigen::VectorXd projected_inputs;
  Eigen::VectorXd projected_outputs;
  bool efficient = true;
};

const char* to_string(WeightScheme scheme) noexcept;
const char* to_string(Regime regime) noexcept;

Ranges compute_ranges(const Dataset& data);

/// Objective weights: ram 1/((m+s)R), additive 1, bam 1/((m+s)L) where L is
/// the distance of unit o to the worst observed value of that row.
SlackWeights slack_weights(const Dataset& data, WeightScheme scheme, std::size_t o);

/**
 * Weights that enter the slack-budget row of the optimal-solution system:
 * ram 1/R, additive 1, bam 1/L.  These are slack_weights() without the
 * 1/(m+s) factor and are also what evaluate() maximizes, so the budget equals
 * the solver's own objective value.
 */
SlackWeights slack_row_weights(const Dataset& data, WeightScheme scheme, std::size_t o);

/// Solves the range-adjusted (or additive/BAM) slack model for unit o.
RamResult evaluate(const Dataset& data, std::size_t o, WeightScheme scheme = WeightScheme::ram,
                   Regime regime = Regime::vrs, const Tolerances& tol = {});

/// Ascending indices of the units whose optimal slacks are all zero.
std::vector<std::size_t> efficient_set(const Dataset& data, WeightScheme scheme = WeightScheme::ram,
                                       Regime regime = Regime::vrs, const Tolerances& tol = {});

/// Same as efficient_set() but reusing already computed results.
std::vector<std::size_t> efficient_set(const std::vector<RamResult>& results);

}  // namespace deagrs
