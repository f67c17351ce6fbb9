#include "sara/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace sara {

namespace {
// The FFTW planner is not thread-safe; execution via the new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct UnitaryFft::Impl {
  int height = 0, width = 0;
  double scale = 1.0;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
  }
};

UnitaryFft::UnitaryFft(int height, int width) : impl_(std::make_unique<Impl>()) {
  if (height < 1 || width < 1) throw std::invalid_argument("UnitaryFft: bad dimensions");
  impl_->height = height;
  impl_->width = width;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(height) * width;
  impl_->scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> dummy_in(n), dummy_out(n);
  auto* in = reinterpret_cast<fftw_complex*>(dummy_in.data());
  auto* out = reinterpret_cast<fftw_complex*>(dummy_out.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (height == 1 || width == 1) {
    const int len = static_cast<int>(n);
    impl_->fwd = fftw_plan_dft_1d(len, in, out, FFTW_FORWARD, flags);
    impl_->bwd = fftw_plan_dft_1d(len, in, out, FFTW_BACKWARD, flags);
  } else {
    impl_->fwd = fftw_plan_dft_2d(height, width, in, out, FFTW_FORWARD, flags);
    impl_->bwd = fftw_plan_dft_2d(height, width, in, out, FFTW_BACKWARD, flags);
  }
  if (!impl_->fwd || !impl_->bwd) throw std::runtime_error("UnitaryFft: planning failed");
}

UnitaryFft::~UnitaryFft() = default;
UnitaryFft::UnitaryFft(UnitaryFft&&) noexcept = default;

Eigen::Index UnitaryFft::size() const {
  return static_cast<Eigen::Index>(impl_->height) * impl_->width;
}

void UnitaryFft::forward(const Complex* in, Complex* out) const {
  fftw_execute_dft(impl_->fwd,
                   reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
  const double s = impl_->scale;
  const Eigen::Index n = size();
  for (Eigen::Index i = 0; i < n; ++i) out[i] *= s;
}

void UnitaryFft::inverse(const Complex* in, Complex* out) const {
  fftw_execute_dft(impl_->bwd,
                   reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
  const double s = impl_->scale;
  const Eigen::Index n = size();
  for (Eigen::Index i = 0; i < n; ++i) out[i] *= s;
}

}  // namespace sara
