#ifndef SARA_RNG_HPP
#define SARA_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sara {

/// Deterministic random source. mt19937_64 output is fully specified by the
/// standard and the derived draws below avoid the implementation-defined
/// std:: distributions, so identical seeds give identical streams on every
/// platform and build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::uniform_below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % bound;
  }

  /// Standard normal via Box-Muller (pairs cached).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Complex Gaussian with total variance sigma^2 (real/imag each sigma^2/2).
  std::complex<double> complex_normal(double sigma) {
    const double s = sigma * std::numbers::sqrt2 / 2.0;
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
  }

  /// +1 or -1 with equal probability.
  double rademacher() { return (gen_() & 1u) ? 1.0 : -1.0; }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sara

#endif
