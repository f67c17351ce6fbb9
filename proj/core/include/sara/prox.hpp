#ifndef SARA_PROX_HPP
#define SARA_PROX_HPP

#include "sara/dictionary.hpp"
#include "sara/sensing.hpp"

namespace sara {

/// Soft thresholding: v max(|v| - t, 0) / |v|, phase preserved, 0 at v = 0.
Complex soft_threshold(Complex v, double t);

/// Componentwise soft thresholding with per-entry thresholds.
ComplexVector soft_threshold(const ComplexVector& v, const Vector& thresholds);

/// Exact prox of tau ||W Psi^dagger . ||_1 for a Parseval frame:
/// x + Psi (soft_{tau w}(Psi^dagger x) - Psi^dagger x).
ComplexVector prox_weighted_l1_analysis(const ComplexVector& x, const Dictionary& dict,
                                        const Vector& w, double tau);

/// Projection of x onto {u : ||y - Phi u|| <= eps}.  Throws
/// BallProjectionError carrying the last iterate on non-convergence.
ComplexVector project_l2_ball(const ComplexVector& x, const SensingOperator& op,
                              const ComplexVector& y, double eps, double tol = 1e-6,
                              int max_iters = 200);

/// Componentwise real part clamped to [0, inf).
Vector project_positive(const ComplexVector& x);
Vector project_positive(const Vector& x);

}  // namespace sara

#endif
