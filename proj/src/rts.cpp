#include "deagrs/rts.hpp"

#include <string>
#include <vector>

#include "deagrs/errors.hpp"
#include "deagrs/grs.hpp"

namespace deagrs {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

const char* to_string(RtsClass c) noexcept {
  switch (c) {
    case RtsClass::increasing: return "IRS";
    case RtsClass::constant: return "CRS";
    case RtsClass::decreasing: return "DRS";
  }
  return "unknown";
}

InterceptBounds intercept_bounds(const Dataset& data, const VectorXd& x, const VectorXd& y, const Tolerances& tol,
                                 std::optional<double> clamp) {
  const auto n = static_cast<Index>(data.size());
  const auto m = static_cast<Index>(data.num_inputs());
  const auto s = static_cast<Index>(data.num_outputs());
  if (x.size() != m || y.size() != s) throw DimensionError("point does not match the dataset's dimensions");
  if (clamp && !(*clamp > 0.0)) throw DataError("intercept clamp must be positive");
  if (!(x.array() > 0.0).any()) {
    throw NormalizationUnattainableError("input vector has no positive entry; v.x = 1 cannot hold with v >= 0");
  }

  // Columns: [u (s) | v (m) | omega+ | omega- | t (n)], omega = omega+ - omega-.
  const Index pos = s + m;
  const Index neg = pos + 1;
  const Index q = s + m + 2 + n;
  MatrixXd a = MatrixXd::Zero(n + 2, q);
  VectorXd b = VectorXd::Zero(n + 2);
  a.block(0, s, 1, m) = x.transpose();
  b[0] = 1.0;
  a.block(1, 0, 1, s) = y.transpose();
  a.block(1, s, 1, m) = -x.transpose();
  a(1, pos) = -1.0;
  a(1, neg) = 1.0;
  a.block(2, 0, n, s) = data.outputs().transpose();
  a.block(2, s, n, m) = -data.inputs().transpose();
  a.block(2, pos, n, 1).setConstant(-1.0);
  a.block(2, neg, n, 1).setConstant(1.0);
  a.block(2, neg + 1, n, n).setIdentity();

  VectorXd upper = VectorXd::Constant(q, lp::kInfinity);
  if (clamp) upper[pos] = upper[neg] = *clamp;

  VectorXd c = VectorXd::Zero(q);
  c[pos] = 1.0;
  c[neg] = -1.0;

  auto solve_for = [&](lp::Sense sense, double& intercept, SupportingHyperplane& plane) {
    const lp::LinearProgram model(sense, c, a, b, VectorXd::Zero(q), upper);
    const lp::Solution sol = lp::solve(model, tol.solver);
    switch (sol.status) {
      case lp::Status::infeasible:
        throw NotOnFrontierError("no supporting hyperplane binds at the given point");
      case lp::Status::unbounded:
        intercept = sense == lp::Sense::maximize ? lp::kInfinity : -lp::kInfinity;
        return;
      case lp::Status::optimal:
        intercept = sol.objective_value;
        plane = {sol.primal.head(s), sol.primal.segment(s, m), sol.objective_value};
        return;
    }
  };

  InterceptBounds out;
  solve_for(lp::Sense::minimize, out.omega_min, out.at_min);
  solve_for(lp::Sense::maximize, out.omega_max, out.at_max);
  return out;
}

RtsClass classify_rts(double omega_min, double omega_max, double rts_tol) {
  if (omega_min > rts_tol) return RtsClass::decreasing;
  if (omega_max < -rts_tol) return RtsClass::increasing;
  return RtsClass::constant;
}

RtsClassification rts_of_dmu(const Dataset& data, std::size_t o, WeightScheme scheme, const Tolerances& tol) {
  const GrsResult grs = identify_grs(data, o, scheme, Regime::vrs, tol);
  const InterceptBounds bounds = intercept_bounds(data, grs.projected_inputs, grs.projected_outputs, tol);
  return {bounds.omega_min, bounds.omega_max, classify_rts(bounds.omega_min, bounds.omega_max, tol.rts)};
}

}  // namespace deagrs
