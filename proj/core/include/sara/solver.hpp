#ifndef SARA_SOLVER_HPP
#define SARA_SOLVER_HPP

#include <vector>

#include "sara/dictionary.hpp"
#include "sara/prox.hpp"
#include "sara/sensing.hpp"

namespace sara {

struct SolverParams {
  double epsilon = 0.0;  // data-fidelity ball radius
  int max_iters = 500;
  double rel_tol = 1e-4;  // stop on relative change of the consensus iterate
  double dr_gamma = 1.0;  // prox scaling, in units of the data scale
  double dr_lambda = 1.0; // relaxation, in (0, 2)
  double ball_proj_tol = 1e-6;
  int ball_proj_max_iters = 200;

  void validate() const;
};

struct SolverResult {
  Vector x_hat;
  int iterations = 0;
  double objective = 0.0;      // ||W Psi^dagger x_hat||_1
  double residual_norm = 0.0;  // ||y - Phi x_hat||_2
  bool converged = false;
  bool projection_warning = false;
  std::vector<double> fp_residuals;  // ||z_k - z_{k-1}||_2 per iteration
};

/// Solves min ||W Psi^dagger x||_1  s.t.  ||y - Phi x|| <= eps, x in R_+^N
/// by product-space Douglas-Rachford over the three prox-able terms.
/// Consensus copies start at the warm start when given, else at Phi^dagger y.
SolverResult solve_weighted_l1(const ComplexVector& y, const SensingOperator& op,
                               const Dictionary& dict, const Vector& w,
                               const SolverParams& params,
                               const ComplexVector* warm_start = nullptr);

}  // namespace sara

#endif
