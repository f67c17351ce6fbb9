#include "sara/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace sara {

namespace {

// dr_gamma is expressed in units of the data scale; the l1 prox threshold
// becomes dr_gamma * kGammaDataScale * ||Phi^dagger y||_inf.
constexpr double kGammaDataScale = 1e-2;
constexpr int kCleanupMaxRounds = 50;

double weighted_l1(const Dictionary& dict, const Vector& w, const Vector& x) {
  const Vector alpha = dict.analysis(x);
  return (w.array() * alpha.array().abs()).sum();
}

}  // namespace

void SolverParams::validate() const {
  if (epsilon < 0) throw std::invalid_argument("SolverParams: epsilon must be >= 0");
  if (max_iters < 1) throw std::invalid_argument("SolverParams: max_iters must be >= 1");
  if (rel_tol <= 0) throw std::invalid_argument("SolverParams: rel_tol must be > 0");
  if (dr_gamma <= 0) throw std::invalid_argument("SolverParams: dr_gamma must be > 0");
  if (dr_lambda <= 0 || dr_lambda >= 2)
    throw std::invalid_argument("SolverParams: dr_lambda must be in (0, 2)");
  if (ball_proj_tol <= 0) throw std::invalid_argument("SolverParams: ball_proj_tol must be > 0");
  if (ball_proj_max_iters < 1)
    throw std::invalid_argument("SolverParams: ball_proj_max_iters must be >= 1");
}

SolverResult solve_weighted_l1(const ComplexVector& y, const SensingOperator& op,
                               const Dictionary& dict, const Vector& w,
                               const SolverParams& params, const ComplexVector* warm_start) {
  params.validate();
  if (y.size() != op.measurement_dim())
    throw std::invalid_argument("solve_weighted_l1: measurement length mismatch");
  if (op.signal_dim() != dict.signal_dim())
    throw std::invalid_argument("solve_weighted_l1: operator/dictionary dimension mismatch");
  if (w.size() != dict.coeff_dim())
    throw std::invalid_argument("solve_weighted_l1: weight length mismatch");
  if ((w.array() <= 0.0).any() || (w.array() > 1.0).any())
    throw std::invalid_argument("solve_weighted_l1: weights must lie in (0, 1]");

  const Eigen::Index n = op.signal_dim();
  SolverResult result;

  const ComplexVector back_projection = op.adjoint(y);
  const double data_scale = back_projection.cwiseAbs().maxCoeff();
  const double gamma = (data_scale > 0) ? params.dr_gamma * kGammaDataScale * data_scale
                                        : params.dr_gamma;

  const ComplexVector x0 = warm_start ? *warm_start : back_projection;
  ComplexVector z1 = x0, z2 = x0, z3 = x0;
  ComplexVector mean = x0;
  ComplexVector mean_prev(n);
  ComplexVector reflected(n);
  result.fp_residuals.reserve(params.max_iters);

  bool stopped_by_tol = false;
  for (int k = 0; k < params.max_iters; ++k) {
    mean_prev = mean;
    double delta_sq = 0.0;

    // f1: weighted analysis-l1 prox
    reflected = 2.0 * mean - z1;
    ComplexVector p1 = prox_weighted_l1_analysis(reflected, dict, w, gamma);
    p1 -= mean;
    p1 *= params.dr_lambda;
    delta_sq += p1.squaredNorm();
    z1 += p1;

    // f2: measurement-ball projection
    reflected = 2.0 * mean - z2;
    ComplexVector p2;
    try {
      p2 = project_l2_ball(reflected, op, y, params.epsilon, params.ball_proj_tol,
                           params.ball_proj_max_iters);
    } catch (const BallProjectionError& e) {
      result.projection_warning = true;
      p2 = e.last_iterate;
    }
    p2 -= mean;
    p2 *= params.dr_lambda;
    delta_sq += p2.squaredNorm();
    z2 += p2;

    // f3: positivity
    reflected = 2.0 * mean - z3;
    ComplexVector p3 = project_positive(reflected).cast<Complex>();
    p3 -= mean;
    p3 *= params.dr_lambda;
    delta_sq += p3.squaredNorm();
    z3 += p3;

    result.fp_residuals.push_back(std::sqrt(delta_sq));
    result.iterations = k + 1;

    mean = (z1 + z2 + z3) / 3.0;
    const double prev_norm = mean_prev.norm();
    const double change = (mean - mean_prev).norm();
    if (change <= params.rel_tol * std::max(prev_norm, 1e-300)) {
      stopped_by_tol = true;
      break;
    }
  }

  // Feasibility polish: alternate the positivity clamp with the ball
  // projection until both constraints hold within tolerance.
  const double feas_slack = params.epsilon * (1.0 + 5e-4) + 1e-12 * std::max(1.0, y.norm());
  Vector x_hat = project_positive(mean);
  double residual = (y - op.forward(x_hat.cast<Complex>())).norm();
  for (int round = 0; round < kCleanupMaxRounds && residual > feas_slack; ++round) {
    ComplexVector projected;
    try {
      projected = project_l2_ball(x_hat.cast<Complex>(), op, y, params.epsilon,
                                  params.ball_proj_tol, params.ball_proj_max_iters);
    } catch (const BallProjectionError& e) {
      result.projection_warning = true;
      projected = e.last_iterate;
    }
    x_hat = project_positive(projected);
    residual = (y - op.forward(x_hat.cast<Complex>())).norm();
  }

  result.x_hat = std::move(x_hat);
  result.residual_norm = residual;
  result.objective = weighted_l1(dict, w, result.x_hat);
  result.converged =
      stopped_by_tol && residual <= params.epsilon * (1.0 + 1e-3) + 1e-12 * std::max(1.0, y.norm());
  return result;
}

}  // namespace sara
