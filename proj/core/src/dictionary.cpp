#include "sara/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sara/wavelet.hpp"

namespace sara {

BasisId BasisId::daubechies(int order) {
  if (order < kMinDaubechiesOrder || order > kMaxDaubechiesOrder)
    throw std::invalid_argument("BasisId: Daubechies order must be in [1, 8]");
  return {Kind::daubechies, order};
}

std::string BasisId::name() const {
  if (kind == Kind::dirac) return "dirac";
  return "db" + std::to_string(order);
}

BasisId BasisId::parse(std::string_view s) {
  if (s == "dirac") return dirac();
  if (s.size() >= 3 && s.substr(0, 2) == "db") {
    int order = 0;
    for (char c : s.substr(2)) {
      if (c < '0' || c > '9') throw std::invalid_argument("BasisId: cannot parse '" + std::string(s) + "'");
      order = order * 10 + (c - '0');
    }
    return daubechies(order);
  }
  throw std::invalid_argument("BasisId: cannot parse '" + std::string(s) + "'");
}

std::vector<BasisId> parse_basis_list(std::string_view spec) {
  std::vector<BasisId> out;
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    rest = (comma == std::string_view::npos) ? std::string_view{} : rest.substr(comma + 1);
    if (tok.empty()) continue;
    auto dots = tok.find("..");
    auto dash = tok.find('-');
    std::string_view lo, hi;
    if (dots != std::string_view::npos) {
      lo = tok.substr(0, dots);
      hi = tok.substr(dots + 2);
    } else if (dash != std::string_view::npos) {
      lo = tok.substr(0, dash);
      hi = tok.substr(dash + 1);
    }
    if (!lo.empty() && !hi.empty()) {
      const BasisId a = BasisId::parse(lo);
      const BasisId b = BasisId::parse(hi);
      if (a.kind != BasisId::Kind::daubechies || b.kind != BasisId::Kind::daubechies || a.order > b.order)
        throw std::invalid_argument("basis range must be ascending Daubechies, e.g. db1..db8");
      for (int k = a.order; k <= b.order; ++k) out.push_back(BasisId::daubechies(k));
    } else {
      out.push_back(BasisId::parse(tok));
    }
  }
  if (out.empty()) throw std::invalid_argument("empty basis list");
  return out;
}

std::string format_basis_list(const std::vector<BasisId>& bases) {
  std::string s;
  for (const auto& b : bases) {
    if (!s.empty()) s += ',';
    s += b.name();
  }
  return s;
}

Dictionary::Dictionary(std::vector<BasisId> bases, int depth, int height, int width)
    : bases_(std::move(bases)), depth_(depth), height_(height), width_(width) {
  if (bases_.empty()) throw std::invalid_argument("Dictionary: basis list must be non-empty");
  for (std::size_t i = 0; i < bases_.size(); ++i)
    for (std::size_t j = i + 1; j < bases_.size(); ++j)
      if (bases_[i] == bases_[j])
        throw std::invalid_argument("Dictionary: duplicate basis " + bases_[i].name());
  if (height < 1 || width < 1 || static_cast<std::int64_t>(height) * width < 2)
    throw std::invalid_argument("Dictionary: signal dimensions too small");
  const bool any_wavelet =
      std::any_of(bases_.begin(), bases_.end(),
                  [](const BasisId& b) { return b.kind == BasisId::Kind::daubechies; });
  if (any_wavelet)
    require_depth_admissible(height, width, depth);
  else if (depth < 1)
    throw std::invalid_argument("Dictionary: depth must be positive");
  scale_ = 1.0 / std::sqrt(static_cast<double>(bases_.size()));
}

namespace {

template <class Scalar, class Vec>
Vec analysis_impl(const Dictionary& dict, const Vec& x, double scale) {
  if (x.size() != dict.signal_dim())
    throw std::invalid_argument("Dictionary::analysis: input length mismatch");
  Vec out(dict.coeff_dim());
  const Eigen::Index n = dict.signal_dim();
  for (int i = 0; i < dict.num_bases(); ++i) {
    Scalar* block = out.data() + static_cast<Eigen::Index>(i) * n;
    const BasisId& b = dict.bases()[i];
    if (b.kind == BasisId::Kind::dirac) {
      std::copy(x.data(), x.data() + n, block);
    } else {
      dwt2_forward(x.data(), block, dict.height(), dict.width(), dict.depth(), b.order);
    }
  }
  out *= scale;
  return out;
}

template <class Scalar, class Vec>
Vec synthesis_impl(const Dictionary& dict, const Vec& coeffs, double scale) {
  if (coeffs.size() != dict.coeff_dim())
    throw std::invalid_argument("Dictionary::synthesis: coefficient length mismatch");
  const Eigen::Index n = dict.signal_dim();
  Vec out = Vec::Zero(n);
  Vec tmp(n);
  for (int i = 0; i < dict.num_bases(); ++i) {
    const Scalar* block = coeffs.data() + static_cast<Eigen::Index>(i) * n;
    const BasisId& b = dict.bases()[i];
    if (b.kind == BasisId::Kind::dirac) {
      out += Eigen::Map<const Vec>(block, n);
    } else {
      dwt2_inverse(block, tmp.data(), dict.height(), dict.width(), dict.depth(), b.order);
      out += tmp;
    }
  }
  out *= scale;
  return out;
}

class AnalysisMap final : public LinearMap {
 public:
  explicit AnalysisMap(const Dictionary& d) : dict_(d) {}
  Eigen::Index in_dim() const override { return dict_.signal_dim(); }
  Eigen::Index out_dim() const override { return dict_.coeff_dim(); }
  ComplexVector forward(const ComplexVector& u) const override { return dict_.analysis(u); }
  ComplexVector adjoint(const ComplexVector& v) const override { return dict_.synthesis(v); }

 private:
  Dictionary dict_;
};

}  // namespace

ComplexVector Dictionary::analysis(const ComplexVector& x) const {
  return analysis_impl<Complex>(*this, x, scale_);
}
Vector Dictionary::analysis(const Vector& x) const {
  return analysis_impl<double>(*this, x, scale_);
}
ComplexVector Dictionary::synthesis(const ComplexVector& coeffs) const {
  return synthesis_impl<Complex>(*this, coeffs, scale_);
}
Vector Dictionary::synthesis(const Vector& coeffs) const {
  return synthesis_impl<double>(*this, coeffs, scale_);
}

std::unique_ptr<LinearMap> Dictionary::analysis_map() const {
  return std::make_unique<AnalysisMap>(*this);
}

std::int64_t average_l0(const ComplexVector& coeffs, double threshold) {
  if (threshold < 0) throw std::invalid_argument("average_l0: threshold must be >= 0");
  std::int64_t count = 0;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (std::abs(coeffs[i]) > threshold) ++count;
  return count;
}

std::int64_t average_l0(const Vector& coeffs, double threshold) {
  if (threshold < 0) throw std::invalid_argument("average_l0: threshold must be >= 0");
  std::int64_t count = 0;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (std::abs(coeffs[i]) > threshold) ++count;
  return count;
}

}  // namespace sara
