#include "sara/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace sara {

double snr_db(const Vector& x, const Vector& x_hat) {
  if (x.size() != x_hat.size()) throw std::invalid_argument("snr_db: size mismatch");
  const double ref = x.norm();
  if (ref == 0.0) throw std::invalid_argument("snr_db: reference signal is zero");
  const double err = (x - x_hat).norm();
  if (err == 0.0) return kExactRecoveryDb;
  return std::min(20.0 * std::log10(ref / err), kExactRecoveryDb);
}

double snr_db(const Image& x, const Image& x_hat) {
  if (x.width != x_hat.width || x.height != x_hat.height)
    throw std::invalid_argument("snr_db: image dimensions differ");
  return snr_db(x.pixels, x_hat.pixels);
}

double realized_isnr_db(const ComplexVector& y0, const ComplexVector& n) {
  if (y0.size() != n.size()) throw std::invalid_argument("realized_isnr_db: size mismatch");
  const double noise = n.norm();
  if (noise == 0.0) return kExactRecoveryDb;  // noiseless sentinel
  return std::min(20.0 * std::log10(y0.norm() / noise), kExactRecoveryDb);
}

SnrAggregate aggregate(std::span<const TrialRecord> records) {
  if (records.empty()) throw std::invalid_argument("aggregate: no records");
  SnrAggregate a;
  a.count = static_cast<int>(records.size());
  double sum = 0.0;
  for (const auto& r : records) sum += r.snr_db;
  a.mean_snr_db = sum / a.count;
  if (a.count > 1) {
    double ss = 0.0;
    for (const auto& r : records) {
      const double d = r.snr_db - a.mean_snr_db;
      ss += d * d;
    }
    a.std_snr_db = std::sqrt(ss / (a.count - 1));
  }
  return a;
}

}  // namespace sara
