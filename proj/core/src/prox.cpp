#include "sara/prox.hpp"

#include <cmath>
#include <stdexcept>

namespace sara {

Complex soft_threshold(Complex v, double t) {
  if (t < 0) throw std::invalid_argument("soft_threshold: threshold must be >= 0");
  const double mag = std::abs(v);
  if (mag <= t) return {0.0, 0.0};
  return v * ((mag - t) / mag);
}

ComplexVector soft_threshold(const ComplexVector& v, const Vector& thresholds) {
  if (v.size() != thresholds.size())
    throw std::invalid_argument("soft_threshold: threshold length mismatch");
  ComplexVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = soft_threshold(v[i], thresholds[i]);
  return out;
}

ComplexVector prox_weighted_l1_analysis(const ComplexVector& x, const Dictionary& dict,
                                        const Vector& w, double tau) {
  if (tau < 0) throw std::invalid_argument("prox_weighted_l1_analysis: tau must be >= 0");
  if (w.size() != dict.coeff_dim())
    throw std::invalid_argument("prox_weighted_l1_analysis: weight length mismatch");
  if (tau == 0.0) return x;
  ComplexVector alpha = dict.analysis(x);
  ComplexVector shrunk(alpha.size());
  for (Eigen::Index i = 0; i < alpha.size(); ++i)
    shrunk[i] = soft_threshold(alpha[i], tau * w[i]) - alpha[i];
  return x + dict.synthesis(shrunk);
}

ComplexVector project_l2_ball(const ComplexVector& x, const SensingOperator& op,
                              const ComplexVector& y, double eps, double tol, int max_iters) {
  if (eps < 0) throw std::invalid_argument("project_l2_ball: eps must be >= 0");
  return op.project_measurement_ball(x, y, eps, tol, max_iters).point;
}

Vector project_positive(const ComplexVector& x) {
  return x.real().cwiseMax(0.0);
}

Vector project_positive(const Vector& x) {
  return x.cwiseMax(0.0);
}

}  // namespace sara
