#ifndef SARA_FOURIER_HPP
#define SARA_FOURIER_HPP

#include <memory>

#include "sara/linear_map.hpp"

namespace sara {

/// Unitary DFT (1/sqrt(N) scaling both ways) backed by FFTW.  height == 1
/// gives the 1D transform of length width.  Plans are built once at
/// construction; execution on caller-provided buffers is thread-safe.
class UnitaryFft {
 public:
  UnitaryFft(int height, int width);
  ~UnitaryFft();
  UnitaryFft(const UnitaryFft&) = delete;
  UnitaryFft& operator=(const UnitaryFft&) = delete;
  UnitaryFft(UnitaryFft&&) noexcept;

  Eigen::Index size() const;

  void forward(const Complex* in, Complex* out) const;
  void inverse(const Complex* in, Complex* out) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sara

#endif
