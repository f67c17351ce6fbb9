#ifndef SARA_SENSING_HPP
#define SARA_SENSING_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sara/fourier.hpp"
#include "sara/image.hpp"
#include "sara/linear_map.hpp"

namespace sara {

/// Requested allocation exceeds the configured dense-storage budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Measurement-ball projection failed to reach its tolerance; carries the
/// last iterate so callers can continue with it.
struct BallProjectionError : std::runtime_error {
  BallProjectionError(std::string msg, ComplexVector iterate, int iters)
      : std::runtime_error(std::move(msg)), last_iterate(std::move(iterate)), iterations(iters) {}
  ComplexVector last_iterate;
  int iterations;
};

/// Noise calibration derived from the chi^2(2M) model of i.i.d. complex
/// Gaussian noise: epsilon^2 = (2M + 4 sqrt(M)) sigma_n^2 / 2 and
/// sigma_alpha = sqrt(M/D) sigma_n.
struct NoiseModel {
  double sigma_n = 0.0;      // measurement-space standard deviation
  double isnr_db = 0.0;      // input SNR target used for calibration
  double epsilon = 0.0;      // l2-ball radius
  double sigma_alpha = 0.0;  // sparsity-domain noise floor
};

NoiseModel noise_from_sigma(double sigma_n, Eigen::Index m, Eigen::Index coeff_dim,
                            double isnr_db = 0.0);

/// sigma_n = ||y0|| 10^{-isnr/20} / sqrt(M), so E||n||^2 meets the target ISNR.
NoiseModel calibrate_noise(const ComplexVector& y0, double isnr_db, Eigen::Index coeff_dim);

class SensingOperator : public LinearMap {
 public:
  struct ProjectionOutcome {
    ComplexVector point;
    int iterations = 0;
  };

  Eigen::Index measurement_dim() const { return m_; }
  Eigen::Index signal_dim() const { return n_; }
  Eigen::Index in_dim() const final { return n_; }
  Eigen::Index out_dim() const final { return m_; }

  /// nu with Phi Phi^dagger = nu I, when the operator is tight.
  virtual std::optional<double> tight_constant() const { return std::nullopt; }
  virtual std::string kind_name() const = 0;

  /// Projection of z onto {u : ||y - forward(u)|| <= eps}.  Closed form for
  /// tight operators; dense operators override.  Throws BallProjectionError
  /// when the tolerance cannot be met within max_iters.
  virtual ProjectionOutcome project_measurement_ball(const ComplexVector& z,
                                                     const ComplexVector& y, double eps,
                                                     double tol, int max_iters) const;

 protected:
  SensingOperator(Eigen::Index n, Eigen::Index m) : n_(n), m_(m) {}
  Eigen::Index n_;
  Eigen::Index m_;
};

/// Phi = M F C: random +-1 modulation, unitary DFT of the vectorized signal,
/// selection of M distinct coefficients.  Tight with nu = 1.
class SpreadSpectrumOperator final : public SensingOperator {
 public:
  SpreadSpectrumOperator(Eigen::Index n, Eigen::Index m, std::uint64_t seed);

  ComplexVector forward(const ComplexVector& x) const override;
  ComplexVector adjoint(const ComplexVector& y) const override;
  std::optional<double> tight_constant() const override { return 1.0; }
  std::string kind_name() const override { return "spread_spectrum"; }

  const Vector& signs() const { return signs_; }
  const std::vector<Eigen::Index>& mask() const { return mask_; }

 private:
  Vector signs_;
  std::vector<Eigen::Index> mask_;
  UnitaryFft fft_;
};

/// Selection of M distinct 2D frequencies of a unitary DFT, sampled without
/// replacement with probability proportional to (1 + |k|/k_max)^(-decay);
/// the zero frequency is always included.  Tight with nu = 1.
class VariableDensityFourierOperator final : public SensingOperator {
 public:
  VariableDensityFourierOperator(int height, int width, Eigen::Index m, std::uint64_t seed,
                                 double decay);

  ComplexVector forward(const ComplexVector& x) const override;
  ComplexVector adjoint(const ComplexVector& y) const override;
  std::optional<double> tight_constant() const override { return 1.0; }
  std::string kind_name() const override { return "vd_fourier"; }

  int height() const { return height_; }
  int width() const { return width_; }
  double decay() const { return decay_; }
  const std::vector<Eigen::Index>& mask() const { return mask_; }

 private:
  int height_;
  int width_;
  double decay_;
  std::vector<Eigen::Index> mask_;
  UnitaryFft fft_;
};

/// Dense i.i.d. complex Gaussian matrix with entry variance 1/M, so
/// E||Phi x||^2 = ||x||^2.  Ball projections solve the KKT secular equation
/// through a precomputed eigendecomposition of Phi Phi^dagger.
class GaussianOperator final : public SensingOperator {
 public:
  GaussianOperator(Eigen::Index n, Eigen::Index m, std::uint64_t seed,
                   std::size_t max_dense_bytes = kDefaultDenseBudget);

  static constexpr std::size_t kDefaultDenseBudget = std::size_t{1} << 30;

  ComplexVector forward(const ComplexVector& x) const override;
  ComplexVector adjoint(const ComplexVector& y) const override;
  std::string kind_name() const override { return "gaussian"; }

  ProjectionOutcome project_measurement_ball(const ComplexVector& z, const ComplexVector& y,
                                             double eps, double tol,
                                             int max_iters) const override;

  const Eigen::MatrixXcd& matrix() const { return mat_; }

 private:
  void ensure_factorization() const;

  Eigen::MatrixXcd mat_;
  mutable Eigen::MatrixXcd gram_eigvecs_;
  mutable Vector gram_eigvals_;
  mutable bool factorized_ = false;
  mutable std::mutex factorization_mutex_;
};

std::unique_ptr<SensingOperator> make_spread_spectrum(Eigen::Index n, Eigen::Index m,
                                                      std::uint64_t seed);
std::unique_ptr<SensingOperator> make_gaussian(Eigen::Index n, Eigen::Index m, std::uint64_t seed,
                                               std::size_t max_dense_bytes =
                                                   GaussianOperator::kDefaultDenseBudget);
std::unique_ptr<SensingOperator> make_variable_density_fourier(int height, int width,
                                                               Eigen::Index m, std::uint64_t seed,
                                                               double decay);

/// y = Phi x + n with n i.i.d. complex Gaussian of per-component variance
/// sigma_n^2; returns (y, n) so the realized ISNR can be recorded.
std::pair<ComplexVector, ComplexVector> simulate_measurements(const Image& x,
                                                              const SensingOperator& op,
                                                              const NoiseModel& noise,
                                                              std::uint64_t seed);

}  // namespace sara

#endif
