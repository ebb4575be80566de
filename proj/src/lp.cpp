#include "deagrs/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "deagrs/errors.hpp"

namespace deagrs::lp {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

LinearProgram::LinearProgram(Sense sense, VectorXd objective, MatrixXd constraints, VectorXd rhs)
    : sense_(sense),
      objective_(std::move(objective)),
      constraints_(std::move(constraints)),
      rhs_(std::move(rhs)),
      lower_(VectorXd::Zero(objective_.size())),
      upper_(VectorXd::Constant(objective_.size(), kInfinity)) {
  validate();
}

LinearProgram::LinearProgram(Sense sense, VectorXd objective, MatrixXd constraints, VectorXd rhs,
                             VectorXd lower_bounds, VectorXd upper_bounds)
    : sense_(sense),
      objective_(std::move(objective)),
      constraints_(std::move(constraints)),
      rhs_(std::move(rhs)),
      lower_(std::move(lower_bounds)),
      upper_(std::move(upper_bounds)) {
  validate();
}

void LinearProgram::validate() const {
  const Index q = objective_.size();
  if (constraints_.cols() != q) {
    throw DimensionError("constraint matrix has " + std::to_string(constraints_.cols()) + " columns, objective has " +
                         std::to_string(q) + " entries");
  }
  if (rhs_.size() != constraints_.rows()) {
    throw DimensionError("rhs has " + std::to_string(rhs_.size()) + " entries, constraint matrix has " +
                         std::to_string(constraints_.rows()) + " rows");
  }
  if (lower_.size() != q || upper_.size() != q) {
    throw DimensionError("bound vectors must have one entry per variable");
  }
  if (!objective_.allFinite() || !constraints_.allFinite() || !rhs_.allFinite()) {
    throw DimensionError("objective, constraints and rhs must be finite");
  }
  for (Index j = 0; j < q; ++j) {
    if (!std::isfinite(lower_[j])) throw DimensionError("lower bound of variable " + std::to_string(j) + " is not finite");
    if (std::isnan(upper_[j]) || upper_[j] < lower_[j]) {
      throw DimensionError("bounds of variable " + std::to_string(j) + " are inconsistent");
    }
  }
}

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr double kPivotTol = 1e-9;

enum class VarState : unsigned char { basic, at_lower, at_upper };

// Works on the minimization form over [structural | artificial] columns.  One
// artificial per row, signed so that the all-at-lower-bound start is feasible.
class BoundedSimplex {
 public:
  BoundedSimplex(const LinearProgram& lp, const SolverSettings& settings)
      : lp_(lp),
        settings_(settings),
        rows_(lp.num_rows()),
        structural_(lp.num_cols()),
        total_(structural_ + rows_) {
    max_iterations_ = settings.max_iterations.value_or(50 * static_cast<std::size_t>(rows_ + structural_));

    columns_ = MatrixXd::Zero(rows_, total_);
    columns_.leftCols(structural_) = lp.constraints();
    lower_ = VectorXd::Zero(total_);
    upper_ = VectorXd::Constant(total_, kInfinity);
    lower_.head(structural_) = lp.lower_bounds();
    upper_.head(structural_) = lp.upper_bounds();

    x_ = VectorXd::Zero(total_);
    x_.head(structural_) = lp.lower_bounds();
    state_.assign(static_cast<std::size_t>(total_), VarState::at_lower);

    const VectorXd residual = lp.rhs() - lp.constraints() * x_.head(structural_);
    basis_.resize(static_cast<std::size_t>(rows_));
    for (Index i = 0; i < rows_; ++i) {
      const Index art = structural_ + i;
      columns_(i, art) = residual[i] >= 0.0 ? 1.0 : -1.0;
      x_[art] = std::abs(residual[i]);
      basis_[static_cast<std::size_t>(i)] = art;
      state_[static_cast<std::size_t>(art)] = VarState::basic;
    }
  }

  Solution run() {
    Solution out;

    VectorXd phase1_cost = VectorXd::Zero(total_);
    phase1_cost.tail(rows_).setOnes();
    iterate(phase1_cost);  // bounded below by zero, cannot be unbounded

    for (Index i = 0; i < rows_; ++i) {
      if (x_[structural_ + i] > settings_.feas_tol * (1.0 + std::abs(lp_.rhs()[i]))) {
        out.status = Status::infeasible;
        out.iterations = iterations_;
        return out;
      }
    }

    // Artificials are pinned at zero from here on; any still basic leave on
    // the first pivot that touches their row.
    upper_.tail(rows_).setZero();
    for (Index i = 0; i < rows_; ++i) {
      const Index art = structural_ + i;
      if (state_[static_cast<std::size_t>(art)] != VarState::basic) {
        state_[static_cast<std::size_t>(art)] = VarState::at_lower;
        x_[art] = 0.0;
      }
    }

    VectorXd phase2_cost = VectorXd::Zero(total_);
    phase2_cost.head(structural_) = lp_.sense() == Sense::maximize ? VectorXd(-lp_.objective()) : lp_.objective();
    if (!iterate(phase2_cost)) {
      out.status = Status::unbounded;
      out.iterations = iterations_;
      return out;
    }

    out.status = Status::optimal;
    out.primal = x_.head(structural_);
    for (Index j = 0; j < structural_; ++j) {
      out.primal[j] = std::clamp(out.primal[j], lower_[j], upper_[j]);
    }
    out.objective_value = lp_.objective().dot(out.primal);
    out.iterations = iterations_;
    return out;
  }

 private:
  void refactor() {
    if (rows_ == 0) return;
    MatrixXd basis_matrix(rows_, rows_);
    VectorXd rhs = lp_.rhs();
    for (Index i = 0; i < rows_; ++i) basis_matrix.col(i) = columns_.col(basis_[static_cast<std::size_t>(i)]);
    for (Index j = 0; j < total_; ++j) {
      if (state_[static_cast<std::size_t>(j)] != VarState::basic && x_[j] != 0.0) rhs -= columns_.col(j) * x_[j];
    }
    lu_.compute(basis_matrix);
    const VectorXd xb = lu_.solve(rhs);
    for (Index i = 0; i < rows_; ++i) x_[basis_[static_cast<std::size_t>(i)]] = xb[i];
  }

  // Returns false when the objective is unbounded below along a feasible ray.
  bool iterate(const VectorXd& cost) {
    std::size_t degenerate_run = 0;
    bool bland = false;
    const std::size_t bland_trigger = static_cast<std::size_t>(rows_ + structural_);

    for (;;) {
      refactor();

      VectorXd duals = VectorXd::Zero(rows_);
      if (rows_ > 0) {
        VectorXd basic_cost(rows_);
        for (Index i = 0; i < rows_; ++i) basic_cost[i] = cost[basis_[static_cast<std::size_t>(i)]];
        duals = lu_.transpose().solve(basic_cost);
      }

      Index entering = -1;
      double best = 0.0;
      for (Index j = 0; j < total_; ++j) {
        const VarState st = state_[static_cast<std::size_t>(j)];
        if (st == VarState::basic || lower_[j] == upper_[j]) continue;
        const double reduced = cost[j] - duals.dot(columns_.col(j));
        const bool improving = (st == VarState::at_lower && reduced < -settings_.opt_tol) ||
                               (st == VarState::at_upper && reduced > settings_.opt_tol);
        if (!improving) continue;
        if (bland) {
          entering = j;
          break;
        }
        if (std::abs(reduced) > best) {
          best = std::abs(reduced);
          entering = j;
        }
      }
      if (entering < 0) return true;

      const VectorXd alpha = rows_ > 0 ? VectorXd(lu_.solve(columns_.col(entering))) : VectorXd(0);
      const double direction = state_[static_cast<std::size_t>(entering)] == VarState::at_lower ? 1.0 : -1.0;

      double step = upper_[entering] - lower_[entering];
      Index leaving_row = -1;
      bool leaves_at_upper = false;
      for (Index i = 0; i < rows_; ++i) {
        const double delta = direction * alpha[i];
        if (std::abs(delta) <= kPivotTol) continue;
        const Index var = basis_[static_cast<std::size_t>(i)];
        double limit;
        bool to_upper;
        if (delta > 0.0) {
          limit = (x_[var] - lower_[var]) / delta;
          to_upper = false;
        } else {
          if (!std::isfinite(upper_[var])) continue;
          limit = (upper_[var] - x_[var]) / -delta;
          to_upper = true;
        }
        limit = std::max(limit, 0.0);

        const double tie = 1e-12 * std::max(1.0, std::isfinite(step) ? step : 1.0);
        bool take = limit < step - tie;
        if (!take && leaving_row >= 0 && std::abs(limit - step) <= tie) {
          if (bland) {
            take = var < basis_[static_cast<std::size_t>(leaving_row)];
          } else {
            take = std::abs(alpha[i]) > std::abs(alpha[leaving_row]);
          }
        }
        if (take) {
          step = limit;
          leaving_row = i;
          leaves_at_upper = to_upper;
        }
      }

      if (!std::isfinite(step)) return false;

      if (++iterations_ > max_iterations_) {
        throw IterationLimitError("simplex exceeded " + std::to_string(max_iterations_) + " iterations");
      }

      if (step <= settings_.feas_tol) {
        if (++degenerate_run >= bland_trigger && settings_.bland_fallback) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }

      if (leaving_row < 0) {
        const bool to_upper = direction > 0.0;
        state_[static_cast<std::size_t>(entering)] = to_upper ? VarState::at_upper : VarState::at_lower;
        x_[entering] = to_upper ? upper_[entering] : lower_[entering];
        continue;
      }

      const Index leaving = basis_[static_cast<std::size_t>(leaving_row)];
      state_[static_cast<std::size_t>(leaving)] = leaves_at_upper ? VarState::at_upper : VarState::at_lower;
      x_[leaving] = leaves_at_upper ? upper_[leaving] : lower_[leaving];
      basis_[static_cast<std::size_t>(leaving_row)] = entering;
      state_[static_cast<std::size_t>(entering)] = VarState::basic;
    }
  }

  const LinearProgram& lp_;
  const SolverSettings& settings_;
  Index rows_;
  Index structural_;
  Index total_;
  std::size_t max_iterations_ = 0;
  std::size_t iterations_ = 0;

  MatrixXd columns_;
  VectorXd lower_;
  VectorXd upper_;
  VectorXd x_;
  std::vector<Index> basis_;
  std::vector<VarState> state_;
  Eigen::PartialPivLU<MatrixXd> lu_;
};

}  // namespace

Solution solve(const LinearProgram& lp, const SolverSettings& settings) {
  if (!(settings.feas_tol > 0.0) || !(settings.opt_tol > 0.0)) {
    throw DimensionError("solver tolerances must be strictly positive");
  }
  if (settings.max_iterations && *settings.max_iterations == 0) {
    throw DimensionError("max_iterations must be positive");
  }
  BoundedSimplex simplex(lp, settings);
  return simplex.run();
}

}  // namespace deagrs::lp
