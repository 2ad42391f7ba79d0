#include "vacent/small_eigen.hpp"

#include <cmath>
#include <numbers>

namespace vacent {

namespace {

using cld = std::complex<long double>;
using Mat4L = Eigen::Matrix<cld, 4, 4>;

// p(z) = z^4 + c3 z^3 + c2 z^2 + c1 z + c0 and p'(z).
std::pair<cld, cld> eval(const std::array<cld, 4>& c, cld z) {
  cld p = 1.0L;
  cld dp = 0.0L;
  for (int k = 3; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

}  // namespace

std::array<cld, 4> characteristic_polynomial(const CMat4& m) {
  const Mat4L a = m.cast<cld>();
  std::array<cld, 4> c{};
  Mat4L mk = Mat4L::Zero();
  cld ck = 1.0L;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k)/k
  for (int k = 1; k <= 4; ++k) {
    mk = a * mk + ck * Mat4L::Identity();
    const Mat4L amk = a * mk;
    ck = -amk.trace() / static_cast<long double>(k);
    c[4 - k] = ck;
  }
  return c;
}

std::array<std::complex<double>, 4> eigenvalues4(const CMat4& m) {
  const auto c = characteristic_polynomial(m);

  // Initial guesses on a circle enclosing all roots (Cauchy bound).
  long double bound = 0.0L;
  for (const auto& ck : c) bound = std::max(bound, std::abs(ck));
  const long double radius = 1.0L + bound;
  std::array<cld, 4> z{};
  for (int i = 0; i < 4; ++i) {
    const long double phase = 2.0L * std::numbers::pi_v<long double> * i / 4.0L + 0.4L;
    z[i] = std::polar(0.5L * radius, phase);
  }

  for (int iter = 0; iter < 500; ++iter) {
    long double max_step = 0.0L;
    for (int i = 0; i < 4; ++i) {
      const auto [p, dp] = eval(c, z[i]);
      if (p == cld(0.0L)) continue;
      const cld ratio = p / dp;
      cld repulsion = 0.0L;
      for (int j = 0; j < 4; ++j) {
        if (j != i) repulsion += 1.0L / (z[i] - z[j]);
      }
      const cld step = ratio / (1.0L - ratio * repulsion);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (max_step < 1e-19L) break;
  }

  // Newton polishing on the polynomial.
  for (auto& zi : z) {
    for (int iter = 0; iter < 4; ++iter) {
      const auto [p, dp] = eval(c, zi);
      if (std::abs(dp) == 0.0L) break;
      const cld step = p / dp;
      if (!(std::abs(step) < std::abs(zi) + 1.0L)) break;
      zi -= step;
    }
  }

  std::array<std::complex<double>, 4> out{};
  for (int i = 0; i < 4; ++i) {
    out[i] = {static_cast<double>(z[i].real()), static_cast<double>(z[i].imag())};
  }
  return out;
}

}  // namespace vacent
