#include "sara/wavelet.hpp"

#include <complex>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace sara {

namespace {

// Minimum-phase orthonormal Daubechies scaling filters, computed by spectral
// factorization of the Daubechies polynomial at 60-digit precision and rounded
// to double.  sum h = sqrt(2), double-shift orthonormal.
constexpr double kDb1[] = {0.707106781186547524, 0.707106781186547524};
constexpr double kDb2[] = {0.482962913144534143, 0.836516303737807906, 0.224143868042013381,
                           -0.129409522551260381};
constexpr double kDb3[] = {0.332670552950082616,   0.806891509311092576, 0.459877502118491570,
                           -0.135011020010254589,  -0.0854412738820266617,
                           0.0352262918857095366};
constexpr double kDb4[] = {0.230377813308896501,   0.714846570552915647,  0.630880767929858908,
                           -0.0279837694168598542, -0.187034811719093084, 0.0308413818355607636,
                           0.0328830116668851997,  -0.0105974017850690321};
constexpr double kDb5[] = {0.160102397974192914,    0.603829269797189671,   0.724308528437772928,
                           0.138428145901320732,    -0.242294887066382032,  -0.0322448695846383746,
                           0.0775714938400457135,   -0.00624149021279827427,
                           -0.0125807519990819995,  0.00333572528547377128};
constexpr double kDb6[] = {0.111540743350109464,    0.494623890398453086,   0.751133908021095351,
                           0.315250351709197629,    -0.226264693965439820,  -0.129766867567261936,
                           0.0975016055873230491,   0.0275228655303057286,  -0.0315820393174860296,
                           0.000553842201161496139, 0.00477725751094551064,
                           -0.00107730108530847956};
constexpr double kDb7[] = {0.0778520540850091790,   0.396539319481917307,   0.729132090846235120,
                           0.469782287405193122,    -0.143906003928564975,  -0.224036184993874983,
                           0.0713092192668302648,   0.0806126091510830719,  -0.0380299369350144136,
                           -0.0165745416306668807,  0.0125509985560998406,  0.000429577972921366521,
                           -0.00180164070404749092, 0.000353713799974520248};
constexpr double kDb8[] = {0.0544158422431040100,    0.312871590914299971,
                           0.675630736297289807,     0.585354683654206713,
                           -0.0158291052563493057,   -0.284015542961546927,
                           0.000472484573913282770,  0.128747426620478459,
                           -0.0173693010018075462,   -0.0440882539307947515,
                           0.0139810279173982816,    0.00874609404740577672,
                           -0.00487035299345157431,  -0.000391740373376947046,
                           0.000675449406450569366,  -0.000117476784124769534};

struct Kernel {
  std::vector<double> h;
  std::vector<double> g;  // g[j] = (-1)^j h[len-1-j]
};

const Kernel& kernel(int order) {
  static const std::vector<Kernel> table = [] {
    const std::pair<const double*, int> raw[] = {
        {kDb1, 2}, {kDb2, 4}, {kDb3, 6}, {kDb4, 8},
        {kDb5, 10}, {kDb6, 12}, {kDb7, 14}, {kDb8, 16}};
    std::vector<Kernel> t;
    for (auto [h, len] : raw) {
      Kernel k;
      k.h.assign(h, h + len);
      k.g.resize(len);
      for (int j = 0; j < len; ++j) k.g[j] = (j % 2 == 0 ? 1.0 : -1.0) * h[len - 1 - j];
      t.push_back(std::move(k));
    }
    return t;
  }();
  if (order < kMinDaubechiesOrder || order > kMaxDaubechiesOrder)
    throw std::invalid_argument("daubechies_filter: order must be in [1, 8]");
  return table[order - 1];
}

// One periodic analysis step: x[0..n) -> out[0..n) = [lowpass | highpass].
template <class Scalar>
void analysis_step(const Scalar* x, Scalar* out, int n, const Kernel& k) {
  const int len = static_cast<int>(k.h.size());
  const int half = n / 2;
  const double* h = k.h.data();
  const double* g = k.g.data();
  // indices 2i+j stay below n for i <= (n - len) / 2
  const int nowrap = (n >= len) ? (n - len) / 2 + 1 : 0;
  for (int i = 0; i < nowrap; ++i) {
    const Scalar* xi = x + 2 * i;
    Scalar a{}, d{};
    for (int j = 0; j < len; ++j) {
      a += h[j] * xi[j];
      d += g[j] * xi[j];
    }
    out[i] = a;
    out[half + i] = d;
  }
  for (int i = nowrap; i < half; ++i) {
    Scalar a{}, d{};
    int idx = 2 * i;
    for (int j = 0; j < len; ++j) {
      const Scalar v = x[idx];
      a += h[j] * v;
      d += g[j] * v;
      if (++idx == n) idx = 0;
    }
    out[i] = a;
    out[half + i] = d;
  }
}

// One periodic synthesis step: coeffs[0..n) = [lowpass | highpass] -> x[0..n).
template <class Scalar>
void synthesis_step(const Scalar* coeffs, Scalar* x, int n, const Kernel& k) {
  const int len = static_cast<int>(k.h.size());
  const int half = n / 2;
  const double* h = k.h.data();
  const double* g = k.g.data();
  std::fill(x, x + n, Scalar{});
  const int nowrap = (n >= len) ? (n - len) / 2 + 1 : 0;
  for (int i = 0; i < nowrap; ++i) {
    const Scalar a = coeffs[i];
    const Scalar d = coeffs[half + i];
    Scalar* xi = x + 2 * i;
    for (int j = 0; j < len; ++j) xi[j] += a * h[j] + d * g[j];
  }
  for (int i = nowrap; i < half; ++i) {
    const Scalar a = coeffs[i];
    const Scalar d = coeffs[half + i];
    int idx = 2 * i;
    for (int j = 0; j < len; ++j) {
      x[idx] += a * h[j] + d * g[j];
      if (++idx == n) idx = 0;
    }
  }
}

template <class Scalar>
struct Scratch {
  std::vector<Scalar> line;   // one row or column
  std::vector<Scalar> out;    // transformed line
  void reserve(int n) {
    line.resize(n);
    out.resize(n);
  }
};

// Analysis of the hc x wc region held compactly in cur (row-major), in place.
template <class Scalar>
void level_analysis(Scalar* cur, int hc, int wc, const Kernel& k, Scratch<Scalar>& s) {
  if (wc >= 2) {
    for (int r = 0; r < hc; ++r) {
      Scalar* row = cur + static_cast<std::ptrdiff_t>(r) * wc;
      analysis_step(row, s.out.data(), wc, k);
      std::copy(s.out.begin(), s.out.begin() + wc, row);
    }
  }
  if (hc >= 2) {
    for (int c = 0; c < wc; ++c) {
      for (int r = 0; r < hc; ++r) s.line[r] = cur[static_cast<std::ptrdiff_t>(r) * wc + c];
      analysis_step(s.line.data(), s.out.data(), hc, k);
      for (int r = 0; r < hc; ++r) cur[static_cast<std::ptrdiff_t>(r) * wc + c] = s.out[r];
    }
  }
}

template <class Scalar>
void level_synthesis(Scalar* cur, int hc, int wc, const Kernel& k, Scratch<Scalar>& s) {
  if (hc >= 2) {
    for (int c = 0; c < wc; ++c) {
      for (int r = 0; r < hc; ++r) s.line[r] = cur[static_cast<std::ptrdiff_t>(r) * wc + c];
      synthesis_step(s.line.data(), s.out.data(), hc, k);
      for (int r = 0; r < hc; ++r) cur[static_cast<std::ptrdiff_t>(r) * wc + c] = s.out[r];
    }
  }
  if (wc >= 2) {
    for (int r = 0; r < hc; ++r) {
      Scalar* row = cur + static_cast<std::ptrdiff_t>(r) * wc;
      synthesis_step(row, s.out.data(), wc, k);
      std::copy(s.out.begin(), s.out.begin() + wc, row);
    }
  }
}

}  // namespace

std::span<const double> daubechies_filter(int order) {
  const Kernel& k = kernel(order);
  return {k.h.data(), k.h.size()};
}

bool depth_admissible(int height, int width, int levels) {
  if (height < 1 || width < 1 || levels < 1 || levels > 30) return false;
  if (height == 1 && width == 1) return false;
  const long long div = 1LL << levels;
  if (height > 1 && height % div != 0) return false;
  if (width > 1 && width % div != 0) return false;
  return true;
}

void require_depth_admissible(int height, int width, int levels) {
  if (!depth_admissible(height, width, levels))
    throw std::invalid_argument(
        "wavelet depth " + std::to_string(levels) + " not admissible for " +
        std::to_string(height) + "x" + std::to_string(width) +
        " signal (each non-singleton extent must be divisible by 2^depth)");
}

template <class Scalar>
void dwt2_forward(const Scalar* in, Scalar* out, int height, int width, int levels, int order) {
  require_depth_admissible(height, width, levels);
  const Kernel& k = kernel(order);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(height) * width;
  std::vector<Scalar> cur(in, in + n);
  Scratch<Scalar> s;
  s.reserve(std::max(height, width));

  int hc = height, wc = width;
  for (int l = 1; l <= levels; ++l) {
    level_analysis(cur.data(), hc, wc, k, s);
    const int h2 = (hc >= 2) ? hc / 2 : 1;
    const int w2 = (wc >= 2) ? wc / 2 : 1;
    const std::ptrdiff_t nl = static_cast<std::ptrdiff_t>(h2) * w2;
    if (hc >= 2 && wc >= 2) {
      for (int r = 0; r < h2; ++r)
        for (int c = 0; c < w2; ++c) {
          out[nl + r * w2 + c] = cur[static_cast<std::ptrdiff_t>(r) * wc + w2 + c];        // H
          out[2 * nl + r * w2 + c] = cur[static_cast<std::ptrdiff_t>(h2 + r) * wc + c];    // V
          out[3 * nl + r * w2 + c] = cur[static_cast<std::ptrdiff_t>(h2 + r) * wc + w2 + c];  // D
        }
      for (int r = 0; r < h2; ++r)  // compact LL; ascending copy is safe in place
        for (int c = 0; c < w2; ++c) cur[static_cast<std::ptrdiff_t>(r) * w2 + c] =
            cur[static_cast<std::ptrdiff_t>(r) * wc + c];
    } else {
      // singleton axis: one detail subband per level, already contiguous
      for (std::ptrdiff_t i = 0; i < nl; ++i) out[nl + i] = cur[nl + i];
    }
    hc = h2;
    wc = w2;
  }
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(hc) * wc; ++i) out[i] = cur[i];
}

template <class Scalar>
void dwt2_inverse(const Scalar* in, Scalar* out, int height, int width, int levels, int order) {
  require_depth_admissible(height, width, levels);
  const Kernel& k = kernel(order);
  std::vector<Scalar> cur;
  std::vector<Scalar> buf;
  Scratch<Scalar> s;
  s.reserve(std::max(height, width));

  int hc = (height >= 2) ? height >> levels : 1;
  int wc = (width >= 2) ? width >> levels : 1;
  cur.assign(in, in + static_cast<std::ptrdiff_t>(hc) * wc);

  for (int l = levels; l >= 1; --l) {
    const int h2 = hc, w2 = wc;
    const std::ptrdiff_t nl = static_cast<std::ptrdiff_t>(h2) * w2;
    const int hn = (height >= 2) ? h2 * 2 : 1;
    const int wn = (width >= 2) ? w2 * 2 : 1;
    buf.resize(static_cast<std::ptrdiff_t>(hn) * wn);
    if (height >= 2 && width >= 2) {
      for (int r = 0; r < h2; ++r)
        for (int c = 0; c < w2; ++c) {
          buf[static_cast<std::ptrdiff_t>(r) * wn + c] = cur[static_cast<std::ptrdiff_t>(r) * w2 + c];
          buf[static_cast<std::ptrdiff_t>(r) * wn + w2 + c] = in[nl + r * w2 + c];
          buf[static_cast<std::ptrdiff_t>(h2 + r) * wn + c] = in[2 * nl + r * w2 + c];
          buf[static_cast<std::ptrdiff_t>(h2 + r) * wn + w2 + c] = in[3 * nl + r * w2 + c];
        }
    } else {
      for (std::ptrdiff_t i = 0; i < nl; ++i) buf[i] = cur[i];
      for (std::ptrdiff_t i = 0; i < nl; ++i) buf[nl + i] = in[nl + i];
    }
    level_synthesis(buf.data(), hn, wn, k, s);
    cur.swap(buf);
    hc = hn;
    wc = wn;
  }
  std::copy(cur.begin(), cur.end(), out);
}

template void dwt2_forward<double>(const double*, double*, int, int, int, int);
template void dwt2_forward<std::complex<double>>(const std::complex<double>*,
                                                 std::complex<double>*, int, int, int, int);
template void dwt2_inverse<double>(const double*, double*, int, int, int, int);
template void dwt2_inverse<std::complex<double>>(const std::complex<double>*,
                                                 std::complex<double>*, int, int, int, int);

Eigen::VectorXd dwt_forward(const Image& img, int order, int levels) {
  Eigen::VectorXd out(img.size());
  dwt2_forward(img.pixels.data(), out.data(), img.height, img.width, levels, order);
  return out;
}

Image dwt_inverse(const Eigen::VectorXd& coeffs, int height, int width, int order, int levels) {
  if (coeffs.size() != static_cast<Eigen::Index>(height) * width)
    throw std::invalid_argument("dwt_inverse: coefficient length does not match dimensions");
  Eigen::VectorXd out(coeffs.size());
  dwt2_inverse(coeffs.data(), out.data(), height, width, levels, order);
  return Image(height, width, std::move(out));
}

}  // namespace sara
