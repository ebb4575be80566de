#include "deagrs/ram.hpp"

#include <string>

#include "deagrs/errors.hpp"

namespace deagrs {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

const char* to_string(WeightScheme scheme) noexcept {
  switch (scheme) {
    case WeightScheme::ram: return "ram";
    case WeightScheme::additive: return "additive";
    case WeightScheme::bam: return "bam";
  }
  return "unknown";
}

const char* to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::vrs: return "vrs";
    case Regime::crs: return "crs";
  }
  return "unknown";
}

Ranges compute_ranges(const Dataset& data) {
  return {data.inputs().rowwise().maxCoeff() - data.inputs().rowwise().minCoeff(),
          data.outputs().rowwise().maxCoeff() - data.outputs().rowwise().minCoeff()};
}

namespace {

VectorXd reciprocal_or_zero(const VectorXd& v) {
  VectorXd out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = v[i] > 0.0 ? 1.0 / v[i] : 0.0;
  return out;
}

void check_unit(const Dataset& data, std::size_t o) {
  if (o >= data.size()) {
    throw DataError("unit index " + std::to_string(o) + " out of range (n = " + std::to_string(data.size()) + ")");
  }
}

}  // namespace

SlackWeights slack_row_weights(const Dataset& data, WeightScheme scheme, std::size_t o) {
  check_unit(data, o);
  const auto m = static_cast<Index>(data.num_inputs());
  const auto s = static_cast<Index>(data.num_outputs());
  switch (scheme) {
    case WeightScheme::ram: {
      const Ranges r = compute_ranges(data);
      return {reciprocal_or_zero(r.input), reciprocal_or_zero(r.output)};
    }
    case WeightScheme::additive:
      return {VectorXd::Ones(m), VectorXd::Ones(s)};
    case WeightScheme::bam: {
      const auto col = static_cast<Index>(o);
      const VectorXd lower_gap = data.inputs().col(col) - data.inputs().rowwise().minCoeff();
      const VectorXd upper_gap = data.outputs().rowwise().maxCoeff() - data.outputs().col(col);
      return {reciprocal_or_zero(lower_gap), reciprocal_or_zero(upper_gap)};
    }
  }
  throw DataError("unknown weight scheme");
}

SlackWeights slack_weights(const Dataset& data, WeightScheme scheme, std::size_t o) {
  SlackWeights w = slack_row_weights(data, scheme, o);
  if (scheme == WeightScheme::additive) return w;
  const double k = static_cast<double>(data.num_inputs() + data.num_outputs());
  w.input /= k;
  w.output /= k;
  return w;
}

RamResult evaluate(const Dataset& data, std::size_t o, WeightScheme scheme, Regime regime, const Tolerances& tol) {
  check_unit(data, o);
  const auto n = static_cast<Index>(data.size());
  const auto m = static_cast<Index>(data.num_inputs());
  const auto s = static_cast<Index>(data.num_outputs());
  const Index q = n + m + s;
  const Index p = m + s + (regime == Regime::vrs ? 1 : 0);
  const auto col = static_cast<Index>(o);

  const SlackWeights w = slack_row_weights(data, scheme, o);

  // Columns: [lambda (n) | s- (m) | s+ (s)]
  MatrixXd a = MatrixXd::Zero(p, q);
  VectorXd b(p);
  a.block(0, 0, m, n) = data.inputs();
  a.block(0, n, m, m).setIdentity();
  b.head(m) = data.inputs().col(col);
  a.block(m, 0, s, n) = data.outputs();
  a.block(m, n + m, s, s) = -MatrixXd::Identity(s, s);
  b.segment(m, s) = data.outputs().col(col);
  if (regime == Regime::vrs) {
    a.block(m + s, 0, 1, n).setOnes();
    b[m + s] = 1.0;
  }

  VectorXd c = VectorXd::Zero(q);
  c.segment(n, m) = w.input;
  c.segment(n + m, s) = w.output;

  VectorXd upper = VectorXd::Constant(q, lp::kInfinity);
  for (Index i = 0; i < m; ++i) {
    if (w.input[i] == 0.0) upper[n + i] = 0.0;
  }
  for (Index r = 0; r < s; ++r) {
    if (w.output[r] == 0.0) upper[n + m + r] = 0.0;
  }

  const lp::LinearProgram model(lp::Sense::maximize, std::move(c), std::move(a), std::move(b), VectorXd::Zero(q),
                                std::move(upper));
  const lp::Solution sol = lp::solve(model, tol.solver);
  if (!sol.optimal()) {
    throw SolverError(std::string("slack model for unit ") + data.name(o) + " is " + lp::to_string(sol.status));
  }

  RamResult out;
  out.dmu = o;
  out.scheme = scheme;
  out.regime = regime;
  out.lambda = sol.primal.head(n);
  out.input_slacks = sol.primal.segment(n, m);
  out.output_slacks = sol.primal.segment(n + m, s);
  out.slack_sum = sol.objective_value;
  out.projected_inputs = data.inputs().col(col) - out.input_slacks;
  out.projected_outputs = data.outputs().col(col) + out.output_slacks;
  out.efficient = out.slack_sum <= tol.efficiency;

  const double k = static_cast<double>(m + s);
  switch (scheme) {
    case WeightScheme::ram: out.score = 1.0 - out.slack_sum / k; break;
    case WeightScheme::bam: out.score = out.slack_sum / k; break;
    case WeightScheme::additive: out.score = out.slack_sum; break;
  }
  return out;
}

std::vector<std::size_t> efficient_set(const std::vector<RamResult>& results) {
  std::vector<std::size_t> out;
  for (const auto& r : results) {
    if (r.efficient) out.push_back(r.dmu);
  }
  return out;
}

std::vector<std::size_t> efficient_set(const Dataset& data, WeightScheme scheme, Regime regime, const Tolerances& tol) {
  std::vector<RamResult> results;
  results.reserve(data.size());
  for (std::size_t j = 0; j < data.size(); ++j) results.push_back(evaluate(data, j, scheme, regime, tol));
  return efficient_set(results);
}

}  // namespace deagrs
