#ifndef SARA_REWEIGHT_HPP
#define SARA_REWEIGHT_HPP

#include <vector>

#include "sara/solver.hpp"

namespace sara {

struct ReweightParams {
  double beta = 0.1;   // gamma decay rate, in (0, 1)
  double eta = 1e-3;   // relative-change stopping bound, in (0, 1)
  int n_max = 10;      // maximum reweighting iterations
  double sigma_alpha = 0.0;  // gamma floor (sparsity-domain noise level)

  void validate() const;
};

struct ReweightIterate {
  int t = 0;
  double gamma = 0.0;
  double rho = 1.0;
  double objective = 0.0;
  double residual_norm = 0.0;
  int inner_iterations = 0;
  bool solver_converged = false;
};

struct ReweightState {
  int t = 0;
  double gamma = 0.0;
  Vector weights;
  Vector x;
  double rho = 1.0;
  std::vector<ReweightIterate> history;
  bool any_warning = false;
};

/// f(gamma, a) = gamma / (gamma + |a|), in (0, 1].
double weight_fn(double gamma, Complex a);

/// Componentwise weight_fn over the previous coefficient estimate.
Vector update_weights(const ComplexVector& alpha_hat, double gamma);
Vector update_weights(const Vector& alpha_hat, double gamma);

/// Empirical standard deviation of the analysis coefficients of x0
/// (mean subtracted; magnitudes enter through |alpha_i - mean|).
double initial_gamma(const Vector& x0, const Dictionary& dict);

/// max(beta * gamma_prev, sigma_alpha).
double gamma_step(double gamma_prev, double beta, double sigma_alpha);

/// ||x_t - x_prev|| / ||x_prev||.
double relative_change(const Vector& x_t, const Vector& x_prev);

struct SaraResult {
  Vector x_hat;
  ReweightState state;
};

/// The reweighting driver: an unweighted solve, then repeated weight updates
/// with a geometrically decreasing, sigma_alpha-floored homotopy parameter,
/// stopping when the relative change drops below eta or after n_max rounds.
/// Each weighted subproblem is warm-started from the previous solution.
SaraResult sara_reconstruct(const ComplexVector& y, const SensingOperator& op,
                            const Dictionary& dict, const NoiseModel& noise,
                            const ReweightParams& rw, const SolverParams& sp);

}  // namespace sara

#endif
