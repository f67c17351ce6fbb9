#include "sara/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sara/rng.hpp"

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace sara {

NoiseModel noise_from_sigma(double sigma_n, Eigen::Index m, Eigen::Index coeff_dim,
                            double isnr_db) {
  if (sigma_n < 0 || m <= 0 || coeff_dim <= 0)
    throw std::invalid_argument("noise_from_sigma: bad arguments");
  NoiseModel nm;
  nm.sigma_n = sigma_n;
  nm.isnr_db = isnr_db;
  const double md = static_cast<double>(m);
  nm.epsilon = std::sqrt((2.0 * md + 4.0 * std::sqrt(md)) * sigma_n * sigma_n / 2.0);
  nm.sigma_alpha = std::sqrt(md / static_cast<double>(coeff_dim)) * sigma_n;
  return nm;
}

NoiseModel calibrate_noise(const ComplexVector& y0, double isnr_db, Eigen::Index coeff_dim) {
  const double norm = y0.norm();
  if (norm == 0.0) throw std::invalid_argument("calibrate_noise: clean measurements are zero");
  const double m = static_cast<double>(y0.size());
  const double sigma_n = norm * std::pow(10.0, -isnr_db / 20.0) / std::sqrt(m);
  return noise_from_sigma(sigma_n, y0.size(), coeff_dim, isnr_db);
}

SensingOperator::ProjectionOutcome SensingOperator::project_measurement_ball(
    const ComplexVector& z, const ComplexVector& y, double eps, double /*tol*/,
    int /*max_iters*/) const {
  const auto nu = tight_constant();
  if (!nu)
    throw std::logic_error("project_measurement_ball: no closed form for non-tight operator");
  ComplexVector d = forward(z) - y;
  const double dist = d.norm();
  if (dist <= eps) return {z, 0};
  // exact projection onto the preimage of the ball for Phi Phi^dagger = nu I
  ComplexVector out = z + adjoint(d * ((eps / dist - 1.0) / *nu));
  return {std::move(out), 1};
}

// ---------------------------------------------------------------------------
// spread spectrum

namespace {

std::vector<Eigen::Index> uniform_mask(Eigen::Index n, Eigen::Index m, Rng& rng) {
  std::vector<Eigen::Index> idx(n);
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index j = i + static_cast<Eigen::Index>(rng.uniform_below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(m);
  return idx;
}

}  // namespace

SpreadSpectrumOperator::SpreadSpectrumOperator(Eigen::Index n, Eigen::Index m, std::uint64_t seed)
    : SensingOperator(n, m), fft_(1, static_cast<int>(n)) {
  if (n < 1 || m < 1 || m > n)
    throw std::invalid_argument("SpreadSpectrumOperator: need 1 <= M <= N");
  Rng rng(seed);
  signs_.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) signs_[i] = rng.rademacher();
  mask_ = uniform_mask(n, m, rng);
}

ComplexVector SpreadSpectrumOperator::forward(const ComplexVector& x) const {
  if (x.size() != n_) throw std::invalid_argument("forward: dimension mismatch");
  ComplexVector t = signs_.asDiagonal() * x;
  ComplexVector f(n_);
  fft_.forward(t.data(), f.data());
  ComplexVector y(m_);
  for (Eigen::Index k = 0; k < m_; ++k) y[k] = f[mask_[k]];
  return y;
}

ComplexVector SpreadSpectrumOperator::adjoint(const ComplexVector& y) const {
  if (y.size() != m_) throw std::invalid_argument("adjoint: dimension mismatch");
  ComplexVector f = ComplexVector::Zero(n_);
  for (Eigen::Index k = 0; k < m_; ++k) f[mask_[k]] = y[k];
  ComplexVector t(n_);
  fft_.inverse(f.data(), t.data());
  return signs_.asDiagonal() * t;
}

// ---------------------------------------------------------------------------
// variable-density Fourier

VariableDensityFourierOperator::VariableDensityFourierOperator(int height, int width,
                                                               Eigen::Index m,
                                                               std::uint64_t seed, double decay)
    : SensingOperator(static_cast<Eigen::Index>(height) * width, m),
      height_(height),
      width_(width),
      decay_(decay),
      fft_(height, width) {
  if (m < 1 || m > n_)
    throw std::invalid_argument("VariableDensityFourierOperator: need 1 <= M <= N");
  if (decay < 0) throw std::invalid_argument("VariableDensityFourierOperator: decay must be >= 0");
  Rng rng(seed);
  // Efraimidis-Spirakis weighted sampling without replacement: keep the M-1
  // largest keys log(u)/w among nonzero frequencies; zero frequency is forced.
  const double kmax = std::hypot(height / 2.0, width / 2.0);
  std::vector<std::pair<double, Eigen::Index>> keys;
  keys.reserve(n_ - 1);
  for (Eigen::Index i = 0; i < n_; ++i) {
    const int r = static_cast<int>(i) / width;
    const int c = static_cast<int>(i) % width;
    const int ky = (r <= height / 2) ? r : r - height;
    const int kx = (c <= width / 2) ? c : c - width;
    const double w = std::pow(1.0 + std::hypot(double(ky), double(kx)) / kmax, -decay);
    double u;
    do {
      u = rng.uniform();
    } while (u <= 0.0);
    if (i == 0) continue;  // forced below
    keys.emplace_back(std::log(u) / w, i);
  }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  mask_.reserve(m);
  mask_.push_back(0);
  for (Eigen::Index k = 0; k + 1 < m; ++k) mask_.push_back(keys[k].second);
}

ComplexVector VariableDensityFourierOperator::forward(const ComplexVector& x) const {
  if (x.size() != n_) throw std::invalid_argument("forward: dimension mismatch");
  ComplexVector f(n_);
  fft_.forward(x.data(), f.data());
  ComplexVector y(m_);
  for (Eigen::Index k = 0; k < m_; ++k) y[k] = f[mask_[k]];
  return y;
}

ComplexVector VariableDensityFourierOperator::adjoint(const ComplexVector& y) const {
  if (y.size() != m_) throw std::invalid_argument("adjoint: dimension mismatch");
  ComplexVector f = ComplexVector::Zero(n_);
  for (Eigen::Index k = 0; k < m_; ++k) f[mask_[k]] = y[k];
  ComplexVector x(n_);
  fft_.inverse(f.data(), x.data());
  return x;
}

// ---------------------------------------------------------------------------
// dense Gaussian

GaussianOperator::GaussianOperator(Eigen::Index n, Eigen::Index m, std::uint64_t seed,
                                   std::size_t max_dense_bytes)
    : SensingOperator(n, m) {
  if (n < 1 || m < 1) throw std::invalid_argument("GaussianOperator: bad dimensions");
  const std::size_t bytes = sizeof(Complex) * static_cast<std::size_t>(n) * m;
  if (bytes > max_dense_bytes)
    throw ResourceError("GaussianOperator: dense matrix of " + std::to_string(bytes) +
                        " bytes exceeds the budget of " + std::to_string(max_dense_bytes));
  Rng rng(seed);
  mat_.resize(m, n);
  const double sigma = 1.0 / std::sqrt(static_cast<double>(m));
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < n; ++c) mat_(r, c) = rng.complex_normal(sigma);
}

ComplexVector GaussianOperator::forward(const ComplexVector& x) const {
  if (x.size() != n_) throw std::invalid_argument("forward: dimension mismatch");
  return mat_ * x;
}

ComplexVector GaussianOperator::adjoint(const ComplexVector& y) const {
  if (y.size() != m_) throw std::invalid_argument("adjoint: dimension mismatch");
  return mat_.adjoint() * y;
}

void GaussianOperator::ensure_factorization() const {
  std::lock_guard<std::mutex> lock(factorization_mutex_);
  if (factorized_) return;
  Eigen::MatrixXcd gram = mat_ * mat_.adjoint();
  Vector evals(m_);
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(m_),
      reinterpret_cast<lapack_complex_double*>(gram.data()), static_cast<lapack_int>(m_),
      evals.data());
  if (info != 0)
    throw std::runtime_error("GaussianOperator: eigendecomposition failed, info=" +
                             std::to_string(info));
  gram_eigvecs_ = std::move(gram);
  gram_eigvals_ = evals.cwiseMax(0.0);
  factorized_ = true;
}

GaussianOperator::ProjectionOutcome GaussianOperator::project_measurement_ball(
    const ComplexVector& z, const ComplexVector& y, double eps, double tol,
    int max_iters) const {
  ComplexVector r0 = forward(z) - y;
  if (r0.norm() <= eps) return {z, 0};
  ensure_factorization();

  // KKT: x' = z - mu Phi^dagger r'(mu), r'(mu) = (I + mu Phi Phi^dagger)^{-1} r0;
  // pick mu > 0 with ||r'(mu)|| = eps via safeguarded Newton on 1/||r'|| - 1/eps.
  const ComplexVector beta = gram_eigvecs_.adjoint() * r0;
  const Vector beta2 = beta.cwiseAbs2();
  const Vector& lam = gram_eigvals_;

  const auto resid2 = [&](double mu) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < beta2.size(); ++i) {
      const double d = 1.0 + mu * lam[i];
      s += beta2[i] / (d * d);
    }
    return s;
  };
  const auto resid2_deriv = [&](double mu) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < beta2.size(); ++i) {
      const double d = 1.0 + mu * lam[i];
      s += -2.0 * lam[i] * beta2[i] / (d * d * d);
    }
    return s;
  };

  const double floor_mass = [&] {
    double s = 0.0;
    const double lam_tiny = lam.size() ? lam[lam.size() - 1] * 1e-14 : 0.0;
    for (Eigen::Index i = 0; i < beta2.size(); ++i)
      if (lam[i] <= lam_tiny) s += beta2[i];
    return s;
  }();
  if (floor_mass >= eps * eps)
    throw BallProjectionError("project_measurement_ball: ball unreachable from operator range", z,
                              0);

  double lo = 0.0, hi = 1.0;
  int iters = 0;
  while (resid2(hi) > eps * eps) {
    lo = hi;
    hi *= 16.0;
    if (++iters > 200)
      throw BallProjectionError("project_measurement_ball: bracketing failed", z, iters);
  }
  double mu = hi;
  double s = resid2(mu);
  for (; iters < max_iters; ++iters) {
    const double r = std::sqrt(s);
    if (r <= eps * (1.0 + tol) && r >= eps * (1.0 - tol)) break;
    // Newton on f(mu) = s^{-1/2} - 1/eps (monotone increasing, near-linear)
    const double fp = -0.5 * std::pow(s, -1.5) * resid2_deriv(mu);
    double next = mu - (1.0 / r - 1.0 / eps) / fp;
    if (r > eps)
      lo = mu;
    else
      hi = mu;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    mu = next;
    s = resid2(mu);
  }
  const double r_final = std::sqrt(s);
  ComplexVector w(beta.size());
  for (Eigen::Index i = 0; i < beta.size(); ++i) w[i] = beta[i] * (mu / (1.0 + mu * lam[i]));
  ComplexVector out = z - adjoint(gram_eigvecs_ * w);
  if (r_final > eps * (1.0 + tol))
    throw BallProjectionError("project_measurement_ball: tolerance not reached", out, iters);
  return {std::move(out), iters};
}

// ---------------------------------------------------------------------------

std::unique_ptr<SensingOperator> make_spread_spectrum(Eigen::Index n, Eigen::Index m,
                                                      std::uint64_t seed) {
  return std::make_unique<SpreadSpectrumOperator>(n, m, seed);
}

std::unique_ptr<SensingOperator> make_gaussian(Eigen::Index n, Eigen::Index m, std::uint64_t seed,
                                               std::size_t max_dense_bytes) {
  return std::make_unique<GaussianOperator>(n, m, seed, max_dense_bytes);
}

std::unique_ptr<SensingOperator> make_variable_density_fourier(int height, int width,
                                                               Eigen::Index m, std::uint64_t seed,
                                                               double decay) {
  return std::make_unique<VariableDensityFourierOperator>(height, width, m, seed, decay);
}

std::pair<ComplexVector, ComplexVector> simulate_measurements(const Image& x,
                                                              const SensingOperator& op,
                                                              const NoiseModel& noise,
                                                              std::uint64_t seed) {
  if (x.size() != op.signal_dim())
    throw std::invalid_argument("simulate_measurements: image size does not match operator");
  ComplexVector xc = x.pixels.cast<Complex>();
  ComplexVector y = op.forward(xc);
  ComplexVector n(op.measurement_dim());
  Rng rng(seed);
  for (Eigen::Index i = 0; i < n.size(); ++i) n[i] = rng.complex_normal(noise.sigma_n);
  y += n;
  return {std::move(y), std::move(n)};
}

}  // namespace sara
