#ifndef SARA_WAVELET_HPP
#define SARA_WAVELET_HPP

#include <Eigen/Core>
#include <span>

#include "sara/image.hpp"

namespace sara {

inline constexpr int kMinDaubechiesOrder = 1;
inline constexpr int kMaxDaubechiesOrder = 8;

/// Orthonormal Daubechies lowpass (scaling) filter of the given order (1..8),
/// minimum-phase orientation, sum = sqrt(2).  Order 1 is the Haar filter.
std::span<const double> daubechies_filter(int order);

/// A depth is admissible when every non-singleton axis extent is divisible by
/// 2^levels; this keeps the periodic transform exactly orthonormal.
bool depth_admissible(int height, int width, int levels);
void require_depth_admissible(int height, int width, int levels);

// Separable orthonormal 2D discrete wavelet transform with periodic boundary
// handling.  Output uses the blocked subband layout
//
//   [ A_L | H_L V_L D_L | H_{L-1} V_{L-1} D_{L-1} | ... | H_1 V_1 D_1 ]
//
// where level-l subbands are (height>>l) x (width>>l) row-major grids,
// H = highpass along width, V = highpass along height, D = both, so the
// level-l detail blocks occupy [N>>2l, N>>(2l-2)).  A singleton axis is left
// untransformed and each level contributes the single highpass subband.
template <class Scalar>
void dwt2_forward(const Scalar* in, Scalar* out, int height, int width, int levels, int order);
template <class Scalar>
void dwt2_inverse(const Scalar* in, Scalar* out, int height, int width, int levels, int order);

/// Forward transform of an image; output norm equals input norm.
Eigen::VectorXd dwt_forward(const Image& img, int order, int levels);

/// Exact inverse of dwt_forward.
Image dwt_inverse(const Eigen::VectorXd& coeffs, int height, int width, int order, int levels);

}  // namespace sara

#endif
