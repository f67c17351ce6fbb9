#include <chrono>
#include <cmath>
#include <ostream>

#include "sara/experiment.hpp"
#include "sara/prox.hpp"
#include "sara/rng.hpp"
#include "sara/wavelet.hpp"

namespace sara {

namespace {

ComplexVector random_complex(Eigen::Index n, Rng& rng) {
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(rng.normal(), rng.normal());
  return v;
}

Vector random_real(Eigen::Index n, Rng& rng) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = 255.0 * rng.uniform();
  return v;
}

double adjointness_gap(const LinearMap& map, Rng& rng) {
  const ComplexVector u = random_complex(map.in_dim(), rng);
  const ComplexVector v = random_complex(map.out_dim(), rng);
  const Complex lhs = map.forward(u).dot(v);
  const Complex rhs = u.dot(map.adjoint(v));
  return std::abs(lhs - rhs) / (u.norm() * v.norm());
}

}  // namespace

int selftest(std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  const auto check = [&](bool ok, const std::string& label) {
    out << (ok ? "[ok]   " : "[FAIL] ") << label << "\n";
    if (!ok) ++failures;
  };
  Rng rng(0x5e1f7e57u);

  std::vector<BasisId> all_bases;
  for (int k = 1; k <= 8; ++k) all_bases.push_back(BasisId::daubechies(k));
  all_bases.push_back(BasisId::dirac());

  for (int q = 1; q <= 9; ++q) {
    for (int depth : {1, 4, 8}) {
      const int dim = (depth == 8) ? 256 : 64;
      const std::vector<BasisId> bases(all_bases.begin(), all_bases.begin() + q);
      const Dictionary dict(bases, depth, dim, dim);
      const std::string tag =
          "q=" + std::to_string(q) + " L=" + std::to_string(depth) + " " + std::to_string(dim) +
          "x" + std::to_string(dim);

      const Vector x = random_real(dict.signal_dim(), rng);
      double pr_err = 0.0, norm_err = 0.0;
      for (const BasisId& b : bases) {
        if (b.kind != BasisId::Kind::daubechies) continue;
        const Image img(dim, dim, x);
        const Vector coeffs = dwt_forward(img, b.order, depth);
        norm_err = std::max(norm_err, std::abs(coeffs.norm() - x.norm()) / x.norm());
        const Image back = dwt_inverse(coeffs, dim, dim, b.order, depth);
        pr_err = std::max(pr_err, (back.pixels - x).norm() / x.norm());
      }
      check(pr_err <= 1e-10, "wavelet perfect reconstruction <= 1e-10   " + tag +
                                 " (err " + std::to_string(pr_err) + ")");
      check(norm_err <= 1e-12, "wavelet orthonormality       <= 1e-12   " + tag);

      const ComplexVector xc = random_complex(dict.signal_dim(), rng);
      const ComplexVector coeffs = dict.analysis(xc);
      const double parseval_norm = std::abs(coeffs.norm() - xc.norm()) / xc.norm();
      const double parseval_inv = (dict.synthesis(coeffs) - xc).norm() / xc.norm();
      check(parseval_norm <= 1e-12 && parseval_inv <= 1e-12,
            "Parseval frame identity      <= 1e-12   " + tag);

      const auto map = dict.analysis_map();
      double gap = 0.0;
      for (int i = 0; i < 3; ++i) gap = std::max(gap, adjointness_gap(*map, rng));
      check(gap <= 1e-10, "frame adjointness            <= 1e-10   " + tag);
    }
  }

  {
    const Dictionary dict(all_bases, 4, 64, 64);
    const auto map = dict.analysis_map();
    double gap = 0.0;
    for (int i = 0; i < 100; ++i) gap = std::max(gap, adjointness_gap(*map, rng));
    check(gap <= 1e-10, "frame adjointness, 100 random pairs     q=9 L=4");
  }

  {
    const auto op = make_spread_spectrum(4096, 1024, 0xabcdefu);
    double gap = 0.0, tight = 0.0;
    for (int i = 0; i < 20; ++i) {
      gap = std::max(gap, adjointness_gap(*op, rng));
      const ComplexVector y = random_complex(op->measurement_dim(), rng);
      tight = std::max(tight, (op->forward(op->adjoint(y)) - y).norm() / y.norm());
    }
    check(gap <= 1e-10, "spread spectrum adjointness  <= 1e-10");
    check(tight <= 1e-12, "spread spectrum tightness    <= 1e-12");
    const auto unitary = make_spread_spectrum(1024, 1024, 0x123u);
    const ComplexVector x = random_complex(1024, rng);
    check(std::abs(unitary->forward(x).norm() - x.norm()) <= 1e-12 * x.norm(),
          "spread spectrum M=N unitary  <= 1e-12");
  }

  {
    const auto op = make_variable_density_fourier(64, 64, 820, 0x77u, 2.0);
    double gap = 0.0, tight = 0.0;
    for (int i = 0; i < 20; ++i) {
      gap = std::max(gap, adjointness_gap(*op, rng));
      const ComplexVector y = random_complex(op->measurement_dim(), rng);
      tight = std::max(tight, (op->forward(op->adjoint(y)) - y).norm() / y.norm());
    }
    check(gap <= 1e-10, "vd Fourier adjointness       <= 1e-10");
    check(tight <= 1e-12, "vd Fourier tightness         <= 1e-12");
  }

  {
    const auto op = make_gaussian(256, 128, 0x99u);
    double gap = 0.0;
    for (int i = 0; i < 20; ++i) gap = std::max(gap, adjointness_gap(*op, rng));
    check(gap <= 1e-10, "gaussian adjointness         <= 1e-10");
  }

  {
    // prox reduction: Dirac dictionary makes the analysis prox plain soft thresholding
    const Dictionary dirac({BasisId::dirac()}, 1, 1, 32);
    const ComplexVector x = random_complex(32, rng);
    Vector w(32);
    for (int i = 0; i < 32; ++i) w[i] = 0.1 + 0.9 * rng.uniform();
    const double tau = 0.7;
    const ComplexVector got = prox_weighted_l1_analysis(x, dirac, w, tau);
    double err = 0.0;
    for (int i = 0; i < 32; ++i)
      err = std::max(err, std::abs(got[i] - soft_threshold(x[i], tau * w[i])));
    check(err <= 1e-14, "analysis prox reduces to soft thresholding on dirac");
  }

  const double elapsed = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - t0).count();
  out << (failures == 0 ? "selftest PASSED" : "selftest FAILED") << " ("
      << failures << " failures, " << elapsed << " s)\n";
  return failures;
}

}  // namespace sara
