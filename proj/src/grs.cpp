#include "deagrs/grs.hpp"

#include <algorithm>
#include <string>

#include "deagrs/errors.hpp"

namespace deagrs {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::size_t MaxSupportSolution::support_size(double tol) const {
  return static_cast<std::size_t>((u.array() > tol).count());
}

lp::LinearProgram max_support_lp(const MatrixXd& a, const MatrixXd& b, const std::optional<VectorXd>& d,
                                  const std::optional<VectorXd>& v_upper) {
  const Index p = a.rows();
  const Index q1 = a.cols();
  const Index q2 = b.cols();
  if (q2 > 0 && b.rows() != p) throw DimensionError("A and B must have the same number of rows");
  if (d && d->size() != p) throw DimensionError("d must have one entry per row of A");
  if (v_upper && v_upper->size() != q2) throw DimensionError("v_upper must have one entry per column of B");

  const Index k = q1 + (d ? 1 : 0);
  MatrixXd homogenized(p, k);
  homogenized.leftCols(q1) = a;
  if (d) homogenized.col(q1) = -*d;

  const Index q = 2 * k + q2;
  MatrixXd m(p, q);
  m.leftCols(k) = homogenized;
  m.middleCols(k, k) = homogenized;
  if (q2 > 0) m.rightCols(q2) = b;

  VectorXd c = VectorXd::Zero(q);
  c.segment(k, k).setOnes();

  VectorXd upper = VectorXd::Constant(q, lp::kInfinity);
  upper.segment(k, k).setOnes();
  if (v_upper) upper.tail(q2) = *v_upper;

  return lp::LinearProgram(lp::Sense::maximize, std::move(c), std::move(m), VectorXd::Zero(p), VectorXd::Zero(q),
                           std::move(upper));
}

MaxSupportSolution max_support_solution(const MatrixXd& a, const MatrixXd& b, const std::optional<VectorXd>& d,
                                        const Tolerances& tol, const std::optional<VectorXd>& v_upper) {
  const lp::LinearProgram model = max_support_lp(a, b, d, v_upper);
  const lp::Solution sol = lp::solve(model, tol.solver);
  if (!sol.optimal()) {
    throw SolverError(std::string("maximal-support LP is ") + lp::to_string(sol.status));
  }

  const Index q1 = a.cols();
  const Index q2 = b.cols();
  const Index k = q1 + (d ? 1 : 0);
  const VectorXd combined = sol.primal.head(k) + sol.primal.segment(k, k);

  MaxSupportSolution out;
  if (!d) {
    out.u = combined;
    out.v = sol.primal.tail(q2);
    return out;
  }
  const double divisor = combined[q1];
  if (divisor <= tol.support) {
    throw DegenerateNormalizerError("homogenizing component is " + std::to_string(divisor) +
                                    "; the system has no feasible point");
  }
  out.u = combined.head(q1) / divisor;
  out.v = sol.primal.tail(q2) / divisor;
  return out;
}

MatrixXd OmegaSystem::lambda_block() const {
  const Index m = inputs.rows();
  const Index s = outputs.rows();
  const Index t = inputs.cols();
  const Index conv = regime == Regime::vrs ? 1 : 0;
  MatrixXd out = MatrixXd::Zero(m + s + conv + 1, t);
  out.topRows(m) = inputs;
  out.middleRows(m, s) = outputs;
  if (conv) out.row(m + s).setOnes();
  return out;
}

MatrixXd OmegaSystem::slack_block() const {
  const Index m = inputs.rows();
  const Index s = outputs.rows();
  const Index conv = regime == Regime::vrs ? 1 : 0;
  const Index budget_row = m + s + conv;
  MatrixXd out = MatrixXd::Zero(budget_row + 1, m + s);
  out.block(0, 0, m, m).setIdentity();
  out.block(m, m, s, s) = -MatrixXd::Identity(s, s);
  out.block(budget_row, 0, 1, m) = input_row_weights.transpose();
  out.block(budget_row, m, 1, s) = output_row_weights.transpose();
  return out;
}

VectorXd OmegaSystem::rhs() const {
  const Index m = inputs.rows();
  const Index s = outputs.rows();
  const Index conv = regime == Regime::vrs ? 1 : 0;
  VectorXd out(m + s + conv + 1);
  out.head(m) = target_inputs;
  out.segment(m, s) = target_outputs;
  if (conv) out[m + s] = 1.0;
  out[m + s + conv] = slack_budget;
  return out;
}

VectorXd OmegaSystem::slack_upper_bounds() const {
  const Index m = inputs.rows();
  const Index s = outputs.rows();
  VectorXd out(m + s);
  for (Index i = 0; i < m; ++i) out[i] = input_row_weights[i] == 0.0 ? 0.0 : lp::kInfinity;
  for (Index r = 0; r < s; ++r) out[m + r] = output_row_weights[r] == 0.0 ? 0.0 : lp::kInfinity;
  return out;
}

OmegaSystem omega_system(const Dataset& data, const RamResult& ram, std::span<const std::size_t> efficient) {
  if (efficient.empty()) throw DataError("efficient set is empty");
  if (ram.dmu >= data.size()) throw DataError("slack-model result refers to a unit outside the dataset");

  OmegaSystem omega;
  omega.dmu = ram.dmu;
  omega.regime = ram.regime;
  omega.efficient_indices.assign(efficient.begin(), efficient.end());
  std::sort(omega.efficient_indices.begin(), omega.efficient_indices.end());

  const auto t = static_cast<Index>(omega.efficient_indices.size());
  omega.inputs.resize(static_cast<Index>(data.num_inputs()), t);
  omega.outputs.resize(static_cast<Index>(data.num_outputs()), t);
  for (Index k = 0; k < t; ++k) {
    const std::size_t j = omega.efficient_indices[static_cast<std::size_t>(k)];
    if (j >= data.size()) throw DataError("efficient index out of range");
    omega.inputs.col(k) = data.inputs().col(static_cast<Index>(j));
    omega.outputs.col(k) = data.outputs().col(static_cast<Index>(j));
  }
  omega.target_inputs = data.inputs().col(static_cast<Index>(ram.dmu));
  omega.target_outputs = data.outputs().col(static_cast<Index>(ram.dmu));

  const SlackWeights w = slack_row_weights(data, ram.scheme, ram.dmu);
  omega.input_row_weights = w.input;
  omega.output_row_weights = w.output;
  // An efficient unit lies in J_E itself, so a zero budget is exactly feasible.
  omega.slack_budget = ram.efficient ? 0.0 : std::max(ram.slack_sum, 0.0);
  return omega;
}

double GrsResult::weight_of(std::size_t j) const {
  const auto it = std::find(efficient_indices.begin(), efficient_indices.end(), j);
  if (it == efficient_indices.end()) return 0.0;
  return weights[it - efficient_indices.begin()];
}

lp::LinearProgram build_reference_set_lp(const OmegaSystem& omega) {
  return max_support_lp(omega.lambda_block(), omega.slack_block(), omega.rhs(), omega.slack_upper_bounds());
}

GrsResult identify_grs(const OmegaSystem& omega, const Tolerances& tol) {
  const MaxSupportSolution sol =
      max_support_solution(omega.lambda_block(), omega.slack_block(), omega.rhs(), tol, omega.slack_upper_bounds());

  const auto m = static_cast<Index>(omega.num_inputs());
  const auto s = static_cast<Index>(omega.num_outputs());

  GrsResult out;
  out.dmu = omega.dmu;
  out.efficient_indices = omega.efficient_indices;
  out.weights = sol.u;
  for (Index k = 0; k < out.weights.size(); ++k) {
    if (out.weights[k] > tol.support) {
      out.members.push_back(omega.efficient_indices[static_cast<std::size_t>(k)]);
    } else {
      out.weights[k] = 0.0;
    }
  }
  out.input_slacks = sol.v.head(m);
  out.output_slacks = sol.v.tail(s);
  out.projected_inputs = omega.inputs * out.weights;
  out.projected_outputs = omega.outputs * out.weights;
  return out;
}

GrsResult identify_grs(const Dataset& data, std::size_t o, WeightScheme scheme, Regime regime, const Tolerances& tol) {
  std::vector<RamResult> results;
  results.reserve(data.size());
  for (std::size_t j = 0; j < data.size(); ++j) results.push_back(evaluate(data, j, scheme, regime, tol));
  const auto efficient = efficient_set(results);
  return identify_grs(omega_system(data, results.at(o), efficient), tol);
}

std::vector<std::size_t> oracle_grs(const OmegaSystem& omega, const Tolerances& tol) {
  const MatrixXd lambda = omega.lambda_block();
  const MatrixXd slack = omega.slack_block();
  const Index t = lambda.cols();
  const Index q = t + slack.cols();

  MatrixXd a(lambda.rows(), q);
  a << lambda, slack;
  VectorXd upper = VectorXd::Constant(q, lp::kInfinity);
  upper.tail(slack.cols()) = omega.slack_upper_bounds();

  std::vector<std::size_t> members;
  for (Index k = 0; k < t; ++k) {
    VectorXd c = VectorXd::Zero(q);
    c[k] = 1.0;
    const lp::LinearProgram model(lp::Sense::maximize, std::move(c), a, omega.rhs(), VectorXd::Zero(q), upper);
    const lp::Solution sol = lp::solve(model, tol.solver);
    if (sol.status == lp::Status::infeasible) {
      throw SolverError("optimal-solution system is numerically empty");
    }
    if (sol.status == lp::Status::unbounded || sol.objective_value > tol.support) {
      members.push_back(omega.efficient_indices[static_cast<std::size_t>(k)]);
    }
  }
  return members;
}

std::size_t affine_dimension(const MatrixXd& points, double rank_tol) {
  if (points.cols() <= 1) return 0;
  const MatrixXd diffs = points.rightCols(points.cols() - 1).colwise() - points.col(0);
  Eigen::JacobiSVD<MatrixXd> svd(diffs);
  const VectorXd& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = rank_tol * std::max(1.0, sv.maxCoeff());
  return static_cast<std::size_t>((sv.array() > cutoff).count());
}

MinimumFace minimum_face(const Dataset& data, const GrsResult& grs, const Tolerances& tol) {
  const auto m = static_cast<Index>(data.num_inputs());
  const auto s = static_cast<Index>(data.num_outputs());
  MatrixXd points(m + s, static_cast<Index>(grs.members.size()));
  for (Index k = 0; k < points.cols(); ++k) {
    const auto j = static_cast<Index>(grs.members[static_cast<std::size_t>(k)]);
    points.col(k).head(m) = data.inputs().col(j);
    points.col(k).tail(s) = data.outputs().col(j);
  }
  return {grs.members, affine_dimension(points, tol.rank)};
}

}  // namespace deagrs
