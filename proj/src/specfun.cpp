#include "vacent/specfun.hpp"

#include "vacent/errors.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace vacent::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfPi = std::numbers::pi / 2.0;

struct SeriesResult {
  double si;
  double ci;
  double abs_err;
};

// Power series, accurate for 0 < x < ~6. Ci = gamma + ln x + sum.
SeriesResult series(double x) {
  const double x2 = x * x;
  double si_sum = 0.0;
  double ci_sum = 0.0;
  double abs_sum = 0.0;
  // term_n = (-1)^n x^{2n+1} / (2n+1)!  (shared by both series)
  double t_odd = x;         // (-1)^n x^{2n+1}/(2n+1)!
  double t_even = -x2 / 2;  // (-1)^n x^{2n}/(2n)!, starts at n = 1
  for (int n = 0; n < 60; ++n) {
    const double si_term = t_odd / (2 * n + 1);
    const double ci_term = t_even / (2 * n + 2);
    si_sum += si_term;
    ci_sum += ci_term;
    abs_sum += std::abs(si_term) + std::abs(ci_term);
    if (std::abs(si_term) < kEps * std::abs(si_sum) * 0.1 &&
        std::abs(ci_term) < kEps * std::abs(ci_sum) * 0.1) {
      break;
    }
    t_odd *= -x2 / ((2.0 * n + 2) * (2.0 * n + 3));
    t_even *= -x2 / ((2.0 * n + 3) * (2.0 * n + 4));
  }
  const double ci = kEulerGamma + std::log(x) + ci_sum;
  const double err =
      4.0 * kEps * (abs_sum + kEulerGamma + std::abs(std::log(x)));
  return {si_sum, ci, err};
}

struct AuxPair {
  double f;
  double g;
  double abs_err;
};

// g + i f = e^{z} E1(z) at z = -ix, by Lentz's method on
//   e^z E1(z) = 1/(z+1- 1/(z+3- 4/(z+5- ...)))
AuxPair continued_fraction(double x) {
  using cd = std::complex<double>;
  const cd z(0.0, -x);
  constexpr double tiny = 1e-300;
  cd b = z + 1.0;
  cd c = 1.0 / tiny;
  cd d = 1.0 / b;
  cd h = d;
  double last_delta = 1.0;
  for (int i = 1; i < 100000; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cd del = c * d;
    h *= del;
    last_delta = std::abs(del - 1.0);
    if (last_delta < kEps) break;
  }
  if (last_delta >= 1e3 * kEps) {
    throw AccuracyError("aux: continued fraction did not converge", h.imag(), last_delta);
  }
  const double err = 8.0 * kEps * std::abs(h) + last_delta * std::abs(h);
  return {h.imag(), h.real(), err};
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be finite and > 0");
  }
}

}  // namespace

Branch branch_for(double x) {
  return x < kSeriesCrossover ? Branch::series : Branch::continued_fraction;
}

SiCi sici(double x) {
  require_positive(x, "sici");
  if (branch_for(x) == Branch::series) {
    const auto s = series(x);
    return {s.si, s.ci, s.abs_err};
  }
  const auto p = continued_fraction(x);
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double ci = p.f * s - p.g * c;
  const double si = kHalfPi - (p.f * c + p.g * s);
  return {si, ci, 2.0 * p.abs_err + kEps};
}

double si(double x) {
  if (x == 0.0) return 0.0;
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("si: argument must be finite and >= 0");
  }
  return sici(x).si;
}

double ci(double x) {
  require_positive(x, "ci");
  return sici(x).ci;
}

AuxFunValue::AuxFunValue(double x, double f, double g, double abs_err_est)
    : x_(x), f_(f), g_(g), abs_err_(abs_err_est) {
  require_positive(x, "AuxFunValue");
  if (abs_err_est < 0.0) throw DomainError("AuxFunValue: negative error estimate");
}

AuxFunValue aux_with_branch(double x, Branch b) {
  require_positive(x, "aux");
  if (b == Branch::continued_fraction) {
    const auto p = continued_fraction(x);
    return AuxFunValue(x, p.f, p.g, p.abs_err);
  }
  const auto s = series(x);
  const double sn = std::sin(x);
  const double cs = std::cos(x);
  const double rest = kHalfPi - s.si;
  const double f = s.ci * sn + rest * cs;
  const double g = -s.ci * cs + rest * sn;
  return AuxFunValue(x, f, g, 2.0 * s.abs_err);
}

AuxFunValue aux(double x) { return aux_with_branch(x, branch_for(x)); }

}  // namespace vacent::specfun
