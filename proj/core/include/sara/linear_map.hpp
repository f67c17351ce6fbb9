#ifndef SARA_LINEAR_MAP_HPP
#define SARA_LINEAR_MAP_HPP

#include <Eigen/Core>
#include <complex>

namespace sara {

using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Common contract for the sensing and frame operators: a linear map
/// C^{in_dim} -> C^{out_dim} with its adjoint, satisfying
/// <forward(u), v> = <u, adjoint(v)>.
class LinearMap {
 public:
  virtual ~LinearMap() = default;

  virtual Eigen::Index in_dim() const = 0;
  virtual Eigen::Index out_dim() const = 0;
  virtual ComplexVector forward(const ComplexVector& u) const = 0;
  virtual ComplexVector adjoint(const ComplexVector& v) const = 0;
};

}  // namespace sara

#endif
