#ifndef SARA_METRICS_HPP
#define SARA_METRICS_HPP

#include <cstdint>
#include <span>
#include <string>

#include "sara/image.hpp"
#include "sara/linear_map.hpp"

namespace sara {

/// Reported instead of an infinite SNR on exact recovery; also the cap.
inline constexpr double kExactRecoveryDb = 300.0;

/// 20 log10(||x|| / ||x - x_hat||), capped at the exact-recovery sentinel.
double snr_db(const Image& x, const Image& x_hat);
double snr_db(const Vector& x, const Vector& x_hat);

/// 20 log10(||y0|| / ||n||) on the realized noise vector.
double realized_isnr_db(const ComplexVector& y0, const ComplexVector& n);

struct TrialRecord {
  std::uint64_t trial_seed = 0;
  double snr_db = 0.0;
  double realized_isnr_db = 0.0;
  long iterations_total = 0;
  double wall_time_s = 0.0;
  std::string config_digest;
  std::string error;
};

struct SnrAggregate {
  double mean_snr_db = 0.0;
  double std_snr_db = 0.0;  // sample standard deviation (n-1); 0 for one record
  int count = 0;
};

SnrAggregate aggregate(std::span<const TrialRecord> records);

}  // namespace sara

#endif
