#include "vacent/oracle.hpp"

#include "vacent/errors.hpp"
#include "vacent/kernel.hpp"
#include "vacent/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace vacent::oracle {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
// Panels are summed directly up to this wavenumber (in units of k0) before
// the accelerated tail takes over.
constexpr double kTailStart = 20.0;

struct Projection {
  double trans;  // n_a.n_b - (n_a.r)(n_b.r)
  double lng;    // (n_a.r)(n_b.r)
};

Projection project(const Vec3& n_a, const Vec3& n_b, const Vec3& r_hat) {
  const double ar = n_a.dot(r_hat);
  const double br = n_b.dot(r_hat);
  return {n_a.dot(n_b) - ar * br, ar * br};
}

void require_x(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": x must be finite and > 0");
  }
}

// Abel-sense int_0^inf weight(k) * [trans a_T(k x) + lng a_L(k x)] dk.
template <class W>
QuadratureReport radial_mode_integral(double x, Projection p, W weight, Resolution res) {
  if (p.trans == 0.0 && p.lng == 0.0) return {0.0, 0.0, 0, false};
  const auto integrand = [&](double k) {
    const double q = k * x;
    return weight(k) * (p.trans * kernel::angular_trans(q) + p.lng * kernel::angular_long(q));
  };
  const int refine = res == Resolution::fine ? 2 : 1;
  const double h = kPi / x;

  // First half period: log-spaced panels resolve the k ~ 1 structure.
  QuadratureReport out;
  double head = 0.0;
  double mass = 0.0;  // sum of |panel|, sets the rounding floor
  const int log_panels = 40 * refine;
  double left = 0.0;
  for (int i = 0; i <= log_panels; ++i) {
    const double right = h * std::pow(10.0, -6.0 * (1.0 - static_cast<double>(i) / log_panels));
    const double panel = quad::gauss_panel(integrand, left, right);
    head += panel;
    mass += std::abs(panel);
    left = right;
  }
  out.intervals_used += log_panels + 1;

  const int first_tail = std::max(1, static_cast<int>(std::ceil(kTailStart / h)));
  double body = 0.0;
  for (int n = 1; n < first_tail; ++n) {
    const double a = n * h;
    for (int s = 0; s < refine; ++s) {
      const double w = h / refine;
      const double panel = quad::gauss_panel(integrand, a + s * w, a + (s + 1) * w);
      body += panel;
      mass += std::abs(panel);
    }
  }
  out.intervals_used += (first_tail - 1) * refine;

  const int terms = res == Resolution::fine ? 96 : 64;
  const auto tail = quad::oscillatory_tail(integrand, first_tail * h, h, terms);
  out.intervals_used += tail.intervals;
  out.value = head + body + tail.value;
  out.abs_err_est = tail.abs_err + 1024.0 * std::numeric_limits<double>::epsilon() *
                                        (mass + std::abs(tail.value));
  out.accelerated = true;
  return out;
}

// Taylor coefficients c_0..c_{n-1} of phi about z0 from the trapezoid rule on
// a circle of radius r (exponentially convergent for analytic phi).
std::vector<cd> taylor_coefficients(const std::function<cd(cd)>& phi, double z0, double r, int n) {
  constexpr int kNodes = 64;
  std::array<cd, kNodes> samples{};
  for (int m = 0; m < kNodes; ++m) {
    samples[m] = phi(z0 + std::polar(r, 2.0 * kPi * m / kNodes));
  }
  std::vector<cd> c(n);
  for (int j = 0; j < n; ++j) {
    cd acc = 0.0;
    for (int m = 0; m < kNodes; ++m) acc += samples[m] * std::polar(1.0, -2.0 * kPi * j * m / kNodes);
    c[j] = acc / static_cast<double>(kNodes) / std::pow(r, j);
  }
  return c;
}

struct WindowedValue {
  cd value;
  double abs_err;
  int intervals;
  double magnitude;  // sum of |pieces|
};

WindowedValue pole_integral_once(const PoleIntegrand& in, const std::vector<cd>& c, double pole,
                                 double delta) {
  const auto integrand = [&](double k) { return in.phi(cd(k, 0.0)) / std::pow(cd(k - pole, 0.0), in.order); };

  // Inside the window: integrate the Taylor series term by term.
  cd window = 0.0;
  for (int j = 0; j < static_cast<int>(c.size()); ++j) {
    const int power = j - in.order;  // t^power
    if (power == -2) {
      window += -2.0 * c[j] / delta;
    } else if (power == -1) {
      // odd: principal value vanishes
    } else if (power % 2 == 0) {
      window += c[j] * (2.0 * std::pow(delta, power + 1) / (power + 1));
    }
  }

  WindowedValue out{window, 0.0, 0, std::abs(window)};
  constexpr double rel = 1e-13;
  if (pole - delta > in.lower) {
    const auto l = quad::adaptive(integrand, in.lower, pole - delta, 0.0, rel);
    out.value += l.value;
    out.magnitude += std::abs(l.value);
    out.abs_err += l.abs_err;
    out.intervals += l.intervals;
  }
  if (in.oscillation_half_period <= 0.0) {
    const auto r = quad::adaptive(integrand, pole + delta, in.upper, 0.0, rel);
    out.value += r.value;
    out.magnitude += std::abs(r.value);
    out.abs_err += r.abs_err;
    out.intervals += r.intervals;
    return out;
  }
  const double h = in.oscillation_half_period;
  const double tail_start = std::max(pole + delta + 1.0, kTailStart);
  const auto mid = quad::adaptive(integrand, pole + delta, tail_start, 0.0, rel);
  const auto tail = quad::oscillatory_tail(integrand, tail_start, h, 64);
  out.value += mid.value + tail.value;
  out.magnitude += std::abs(mid.value) + std::abs(tail.value);
  out.abs_err += mid.abs_err + tail.abs_err;
  out.intervals += mid.intervals + tail.intervals;
  return out;
}

}  // namespace

QuadratureReport modesum_first_order(double x, const Vec3& n_a, const Vec3& n_b,
                                     const Vec3& r_hat, Resolution res) {
  require_x(x, "modesum_first_order");
  auto r = radial_mode_integral(
      x, project(n_a, n_b, r_hat), [](double k) { return k * k * k / (1.0 + k); }, res);
  r.value *= -1.0 / kPi;
  r.abs_err_est /= kPi;
  return r;
}

QuadratureReport modesum_second_order(double x, const Vec3& n_a, const Vec3& n_b,
                                      const Vec3& r_hat, Resolution res) {
  require_x(x, "modesum_second_order");
  auto r = radial_mode_integral(
      x, project(n_a, n_b, r_hat),
      [](double k) { return k * k * k / ((1.0 + k) * (1.0 + k)); }, res);
  r.value /= kPi;
  r.abs_err_est /= kPi;
  return r;
}

QuadratureReport local_population(double cutoff) {
  if (!(cutoff > 1.0) || !std::isfinite(cutoff)) {
    throw DomainError("local_population: cutoff must be finite and > 1");
  }
  const auto integrand = [](double k) { return k * k * k / ((1.0 + k) * (1.0 + k)); };
  const auto e = quad::adaptive(integrand, 0.0, cutoff, 0.0, 1e-14);
  const double pref = 2.0 / (3.0 * kPi);
  return {pref * e.value, pref * e.abs_err, e.intervals, false};
}

QuadratureReport aux_integral_rep(double x, AuxKind which) {
  if (!std::isfinite(x) || x < 0.0 || (which == AuxKind::g && x == 0.0)) {
    throw DomainError("aux_integral_rep: argument out of domain");
  }
  // t = tan(theta) maps [0, inf) onto [0, pi/2); dt/(1+t^2) = dtheta.
  const auto integrand = [x, which](double theta) {
    if (theta >= kPi / 2) return 0.0;
    const double t = std::tan(theta);
    const double decay = std::exp(-x * t);
    return which == AuxKind::f ? decay : t * decay;
  };
  const auto e = quad::adaptive(integrand, 0.0, kPi / 2, 1e-15, 1e-14);
  return {e.value, e.abs_err, e.intervals, false};
}

PoleQuadrature principal_value_quadrature(const PoleIntegrand& integrand, double pole,
                                          double half_width, double tolerance) {
  if (integrand.order != 1 && integrand.order != 2) {
    throw DomainError("principal_value_quadrature: pole order must be 1 or 2");
  }
  if (!(half_width > 0.0) || pole - half_width <= integrand.lower ||
      (integrand.oscillation_half_period <= 0.0 && pole + half_width >= integrand.upper)) {
    throw DomainError("principal_value_quadrature: window must lie inside the interval");
  }
  const double r = std::min(integrand.taylor_radius, 0.5 * (pole - integrand.lower));
  const auto c = taylor_coefficients(integrand.phi, pole, r, 10);

  const auto wide = pole_integral_once(integrand, c, pole, half_width);
  const auto narrow = pole_integral_once(integrand, c, pole, 0.5 * half_width);
  const double spread = std::abs(wide.value - narrow.value);
  const double scale = std::max(std::abs(narrow.value), 1e-300);
  const double rounding = 64.0 * std::numeric_limits<double>::epsilon() *
                          std::max(wide.magnitude, narrow.magnitude);
  if (spread > tolerance * scale + wide.abs_err + narrow.abs_err + rounding) {
    throw AccuracyError("principal_value_quadrature: window dependence beyond tolerance",
                        narrow.value.real(), spread);
  }
  PoleQuadrature out;
  out.principal.value = narrow.value;
  out.principal.abs_err_est = spread + narrow.abs_err + rounding;
  out.principal.intervals_used = wide.intervals + narrow.intervals;
  out.principal.accelerated = integrand.oscillation_half_period > 0.0;
  // Residue of phi/(z-p)^order is the Taylor coefficient c_{order-1}.
  out.residue = c[integrand.order - 1];
  return out;
}

QuadratureReport wcp_real_axis(double x, const Vec3& n_a, const Vec3& n_b, const Vec3& r_hat,
                               double half_width) {
  require_x(x, "wcp_real_axis");
  const auto p = project(n_a, n_b, r_hat);
  const double x6 = std::pow(x, 6);
  // k^3 G_ab(k x) = e^{iq} P_ab(q) / x^3, P_T = q^2 + iq - 1, P_L = 2 - 2iq.
  PoleIntegrand in;
  in.phi = [p, x, x6](cd z) {
    const cd q = z * x;
    const cd i(0.0, 1.0);
    const cd poly = p.trans * (q * q + i * q - 1.0) + p.lng * (2.0 - 2.0 * i * q);
    const cd amp = std::exp(i * q) * poly;
    return amp * amp / (x6 * (1.0 + z) * (1.0 + z));
  };
  in.order = 2;
  in.lower = 0.0;
  in.upper = std::numeric_limits<double>::infinity();
  in.oscillation_half_period = kPi / (2.0 * x);
  // Keep |e^{2iqz}| on the Taylor circle within a modest range.
  in.taylor_radius = std::min(0.4, 1.0 / x);

  const auto pq = principal_value_quadrature(in, 1.0, half_width, 1e-8);
  QuadratureReport out = pq.principal;
  out.value = pq.principal.value.imag() - kPi * pq.residue.real();
  return out;
}

QuadratureReport field_correlator(double r, const Vec3& n_a, const Vec3& n_b, const Vec3& r_hat) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("field_correlator: r must be > 0");
  auto q = radial_mode_integral(
      1.0, project(n_a, n_b, r_hat), [](double k) { return k * k * k; }, Resolution::standard);
  const auto& au = atomic_units();
  const double pref = au.hbar * au.c / (kPi * std::pow(r, 4));
  q.value *= pref;
  q.abs_err_est *= pref;
  return q;
}

}  // namespace vacent::oracle
