#ifndef SARA_DICTIONARY_HPP
#define SARA_DICTIONARY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sara/image.hpp"
#include "sara/linear_map.hpp"

namespace sara {

/// Identifier of one orthonormal basis in a dictionary.
struct BasisId {
  enum class Kind { daubechies, dirac };
  Kind kind = Kind::daubechies;
  int order = 1;  // Daubechies order in [1, 8]; ignored for dirac

  static BasisId daubechies(int order);
  static BasisId dirac() { return {Kind::dirac, 0}; }

  bool operator==(const BasisId&) const = default;

  std::string name() const;                     // "db3", "dirac"
  static BasisId parse(std::string_view name);  // inverse of name()
};

/// Parses a basis list such as "db1..db8", "db1-db4,dirac", "db8".
std::vector<BasisId> parse_basis_list(std::string_view spec);
std::string format_basis_list(const std::vector<BasisId>& bases);

/// Concatenation of q orthonormal bases normalized by 1/sqrt(q); a Parseval
/// frame, so synthesis(analysis(x)) == x and analysis preserves the l2 norm.
/// Coefficients are stored as q contiguous length-N blocks in basis order,
/// each block using the wavelet subband layout documented in wavelet.hpp.
class Dictionary {
 public:
  Dictionary(std::vector<BasisId> bases, int depth, int height, int width);

  int height() const { return height_; }
  int width() const { return width_; }
  int depth() const { return depth_; }
  int num_bases() const { return static_cast<int>(bases_.size()); }
  const std::vector<BasisId>& bases() const { return bases_; }
  Eigen::Index signal_dim() const { return static_cast<Eigen::Index>(width_) * height_; }
  Eigen::Index coeff_dim() const { return signal_dim() * num_bases(); }

  /// Block i of the result is (1/sqrt(q)) Psi_i^dagger x.
  ComplexVector analysis(const ComplexVector& x) const;
  Vector analysis(const Vector& x) const;

  /// (1/sqrt(q)) sum_i Psi_i block_i; adjoint of analysis.
  ComplexVector synthesis(const ComplexVector& coeffs) const;
  Vector synthesis(const Vector& coeffs) const;

  /// The analysis operator as a LinearMap (forward: N -> D, adjoint: D -> N).
  std::unique_ptr<LinearMap> analysis_map() const;

 private:
  std::vector<BasisId> bases_;
  int depth_;
  int height_;
  int width_;
  double scale_;  // 1/sqrt(q)
};

/// Count of coefficient entries with magnitude strictly above the threshold;
/// the sparsity diagnostic the reweighting scheme drives down.
std::int64_t average_l0(const ComplexVector& coeffs, double threshold);
std::int64_t average_l0(const Vector& coeffs, double threshold);

}  // namespace sara

#endif
