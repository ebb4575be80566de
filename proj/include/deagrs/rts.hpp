#pragma once

#include <cstddef>
#include <optional>

#include <Eigen/Dense>

#include "deagrs/dataset.hpp"
#include "deagrs/ram.hpp"

namespace deagrs {

enum class RtsClass { increasing, constant, decreasing };

/// u.y - v.x = intercept, with u.y_j - v.x_j <= intercept for every unit.
struct SupportingHyperplane {
  Eigen::VectorXd output_multipliers;  // u, length s
  Eigen::VectorXd input_multipliers;   // v, length m
  double intercept = 0.0;
};

/// Range of intercepts over all supporting hyperplanes at a frontier point,
/// normalized by v.x = 1.  An end is +-infinity when the intercept is
/// unbounded in that direction (and no clamp was requested); the matching
/// hyperplane is then left empty.
struct InterceptBounds {
  double omega_min = 0.0;
  double omega_max = 0.0;
  SupportingHyperplane at_min;
  SupportingHyperplane at_max;
};

struct RtsClassification {
  double omega_min = 0.0;
  double omega_max = 0.0;
  RtsClass rts_class = RtsClass::constant;
};

const char* to_string(RtsClass c) noexcept;

/**
 * Solves the two intercept LPs at (x, y) over the variable-returns
 * technology spanned by every unit in `data`.  With `clamp` set, the
 * intercept is boxed to [-clamp, clamp] instead of being reported unbounded.
 *
 * Throws NormalizationUnattainableError when x has no positive entry and
 * NotOnFrontierError when no supporting hyperplane binds at the point.
 */
InterceptBounds intercept_bounds(const Dataset& data, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                 const Tolerances& tol = {}, std::optional<double> clamp = std::nullopt);

/// Zero attainable -> constant; interval strictly positive -> decreasing;
/// strictly negative -> increasing.
RtsClass classify_rts(double omega_min, double omega_max, double rts_tol);

/// Slack model, reference-set LP and intercept test at the resulting
/// relative-interior point.  Variable returns to scale only.
RtsClassification rts_of_dmu(const Dataset& data, std::size_t o, WeightScheme scheme = WeightScheme::ram,
                             const Tolerances& tol = {});

}  // namespace deagrs
