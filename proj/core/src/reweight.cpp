#include "sara/reweight.hpp"

#include <cmath>
#include <stdexcept>

namespace sara {

void ReweightParams::validate() const {
  if (beta <= 0 || beta >= 1) throw std::invalid_argument("ReweightParams: beta must be in (0, 1)");
  if (eta <= 0 || eta >= 1) throw std::invalid_argument("ReweightParams: eta must be in (0, 1)");
  if (n_max < 1) throw std::invalid_argument("ReweightParams: n_max must be >= 1");
  if (sigma_alpha <= 0) throw std::invalid_argument("ReweightParams: sigma_alpha must be > 0");
}

double weight_fn(double gamma, Complex a) {
  if (gamma <= 0) throw std::invalid_argument("weight_fn: gamma must be > 0");
  return gamma / (gamma + std::abs(a));
}

Vector update_weights(const ComplexVector& alpha_hat, double gamma) {
  if (gamma <= 0) throw std::invalid_argument("update_weights: gamma must be > 0");
  Vector w(alpha_hat.size());
  for (Eigen::Index i = 0; i < alpha_hat.size(); ++i)
    w[i] = gamma / (gamma + std::abs(alpha_hat[i]));
  return w;
}

Vector update_weights(const Vector& alpha_hat, double gamma) {
  if (gamma <= 0) throw std::invalid_argument("update_weights: gamma must be > 0");
  Vector w(alpha_hat.size());
  for (Eigen::Index i = 0; i < alpha_hat.size(); ++i)
    w[i] = gamma / (gamma + std::abs(alpha_hat[i]));
  return w;
}

double initial_gamma(const Vector& x0, const Dictionary& dict) {
  if (x0.norm() == 0.0) throw std::invalid_argument("initial_gamma: x0 must be nonzero");
  const Vector alpha = dict.analysis(x0);
  const double mean = alpha.mean();
  return std::sqrt((alpha.array() - mean).square().sum() / static_cast<double>(alpha.size()));
}

double gamma_step(double gamma_prev, double beta, double sigma_alpha) {
  if (gamma_prev <= 0 || beta <= 0 || sigma_alpha <= 0)
    throw std::invalid_argument("gamma_step: arguments must be positive");
  return std::max(beta * gamma_prev, sigma_alpha);
}

double relative_change(const Vector& x_t, const Vector& x_prev) {
  const double prev_norm = x_prev.norm();
  if (prev_norm == 0.0) throw std::invalid_argument("relative_change: x_prev must be nonzero");
  return (x_t - x_prev).norm() / prev_norm;
}

SaraResult sara_reconstruct(const ComplexVector& y, const SensingOperator& op,
                            const Dictionary& dict, const NoiseModel& noise,
                            const ReweightParams& rw, const SolverParams& sp_in) {
  rw.validate();
  SolverParams sp = sp_in;
  sp.epsilon = noise.epsilon;

  SaraResult res;
  ReweightState& st = res.state;

  // unweighted solve: W = I
  Vector w = Vector::Ones(dict.coeff_dim());
  SolverResult sol = solve_weighted_l1(y, op, dict, w, sp);
  st.any_warning |= sol.projection_warning || !sol.converged;
  st.x = sol.x_hat;
  st.rho = 1.0;

  double sigma_s = 0.0;
  if (st.x.norm() > 0.0) sigma_s = initial_gamma(st.x, dict);
  st.gamma = (sigma_s > 0.0) ? sigma_s : rw.sigma_alpha;
  st.history.push_back({0, st.gamma, st.rho, sol.objective, sol.residual_norm, sol.iterations,
                        sol.converged});

  st.t = 1;
  while (st.rho > rw.eta && st.t < rw.n_max) {
    const Vector alpha = dict.analysis(st.x);
    st.weights = update_weights(alpha, st.gamma);

    const ComplexVector warm = st.x.cast<Complex>();
    sol = solve_weighted_l1(y, op, dict, st.weights, sp, &warm);
    st.any_warning |= sol.projection_warning || !sol.converged;

    st.gamma = gamma_step(st.gamma, rw.beta, rw.sigma_alpha);
    const double prev_norm = st.x.norm();
    if (prev_norm == 0.0)
      st.rho = (sol.x_hat.norm() == 0.0) ? 0.0 : 1.0;
    else
      st.rho = relative_change(sol.x_hat, st.x);
    st.x = sol.x_hat;

    st.history.push_back({st.t, st.gamma, st.rho, sol.objective, sol.residual_norm,
                          sol.iterations, sol.converged});
    ++st.t;
  }

  if (st.weights.size() == 0) st.weights = std::move(w);
  res.x_hat = st.x;
  return res;
}

}  // namespace sara
