#include "vacent/casimir.hpp"

#include "vacent/errors.hpp"
#include "vacent/oracle.hpp"
#include "vacent/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace vacent::casimir {

namespace {

constexpr double kPi = std::numbers::pi;

void check_frequency(const PairConfiguration&, const TwoLevelAtom& a, const TwoLevelAtom& b) {
  if (std::abs(a.omega0() - b.omega0()) > 1e-9 * std::max(a.omega0(), b.omega0())) {
    throw FrequencyMismatchError("wcp: atoms must share one transition frequency");
  }
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::rotated_contour: return "rotated_contour";
    case Method::principal_value_oracle: return "principal_value_oracle";
    case Method::near_closed_form: return "near_closed_form";
  }
  return "unknown";
}

ContourIntegral wcp_contour_integral(const PairConfiguration& cfg, const WcpOptions& opts) {
  const double x = cfg.x();
  const double ar = cfg.n_a().dot(cfg.r_hat());
  const double br = cfg.n_b().dot(cfg.r_hat());
  const double a_coef = cfg.n_a().dot(cfg.n_b()) - ar * br;
  const double b_coef = ar * br;

  // Squared orientation factor of the imaginary-axis propagator; scaled so
  // the x^{-6} prefactor stays outside the integral.
  const auto shape = [&](double y) {
    const double t = 1.0 + y + y * y;
    const double l = -2.0 * (1.0 + y);
    if (opts.isotropic) return (2.0 * t * t + l * l) / 9.0;
    const double q = a_coef * t + b_coef * l;
    return q * q;
  };
  const auto integrand = [&](double nu) {
    const double s = 1.0 + nu * nu;
    return std::exp(-2.0 * nu * x) * shape(nu * x) / (s * s);
  };

  // e^{-2 nu x} < e^{-80} beyond nu = 40/x.
  const double end = 40.0 / x;
  quad::Estimate<double> total;
  const double split = std::min(1.0, end);
  const auto head = quad::adaptive(integrand, 0.0, split, 0.0, 1e-13);
  total.value += head.value;
  total.abs_err += head.abs_err;
  if (end > split) {
    const auto rest = quad::adaptive(integrand, split, end, 0.0, 1e-13);
    total.value += rest.value;
    total.abs_err += rest.abs_err;
  }
  const double x6 = std::pow(x, 6);
  return {total.value / x6, (total.abs_err + 1e-15 * std::abs(total.value)) / x6};
}

PotentialResult wcp_reduced(const PairConfiguration& cfg, const WcpOptions& opts) {
  const auto j = wcp_contour_integral(cfg, opts);
  const double pref = -2.0 / kPi * cfg.mu() * cfg.mu();
  return {cfg.x(), pref * j.value, Method::rotated_contour, std::abs(pref) * j.abs_err};
}

PotentialResult wcp(const PairConfiguration& cfg, const TwoLevelAtom& atom_a,
                    const TwoLevelAtom& atom_b, const WcpOptions& opts) {
  check_frequency(cfg, atom_a, atom_b);
  const auto red = wcp_reduced(cfg, opts);
  const double e0 = atomic_units().hbar * atom_a.omega0();
  return {cfg.x() / atom_a.k0(), e0 * red.energy, red.method, e0 * red.abs_err_est};
}

PotentialResult wcp_principal_value_reduced(const PairConfiguration& cfg) {
  const auto j = oracle::wcp_real_axis(cfg.x(), cfg.n_a(), cfg.n_b(), cfg.r_hat());
  const double pref = -2.0 / kPi * cfg.mu() * cfg.mu();
  return {cfg.x(), pref * j.real(), Method::principal_value_oracle, std::abs(pref) * j.abs_err_est};
}

PotentialResult vdw_near_reduced(const PairConfiguration& cfg) {
  const double kappa = cfg.n_a().dot(cfg.n_b()) -
                       3.0 * cfg.n_a().dot(cfg.r_hat()) * cfg.n_b().dot(cfg.r_hat());
  const double x = cfg.x();
  const double energy = -cfg.mu() * cfg.mu() * kappa * kappa / (2.0 * std::pow(x, 6));
  return {x, energy, Method::near_closed_form, 0.0};
}

PotentialResult vdw_near(const PairConfiguration& cfg, const TwoLevelAtom& atom_a,
                         const TwoLevelAtom& atom_b) {
  check_frequency(cfg, atom_a, atom_b);
  const auto red = vdw_near_reduced(cfg);
  const double e0 = atomic_units().hbar * atom_a.omega0();
  return {cfg.x() / atom_a.k0(), e0 * red.energy, red.method, 0.0};
}

PowerLawFit fit_powerlaw(const std::vector<std::pair<double, double>>& curve, double r_lo,
                         double r_hi) {
  if (!(r_lo < r_hi)) throw DomainError("fit_powerlaw: empty window");
  std::vector<std::pair<double, double>> pts;
  int sign = 0;
  for (const auto& [r, v] : curve) {
    if (r < r_lo || r > r_hi) continue;
    if (!(r > 0.0) || v == 0.0 || !std::isfinite(v)) {
      throw DomainError("fit_powerlaw: radii must be positive and values nonzero");
    }
    const int s = v > 0.0 ? 1 : -1;
    if (sign != 0 && s != sign) throw DomainError("fit_powerlaw: sign change inside window");
    sign = s;
    pts.emplace_back(std::log(r), std::log(std::abs(v)));
  }
  const int n = static_cast<int>(pts.size());
  if (n < 5) throw DomainError("fit_powerlaw: need at least 5 points in the window");
  double mx = 0.0, my = 0.0;
  for (const auto& [lx, ly] : pts) {
    mx += lx;
    my += ly;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [lx, ly] : pts) {
    sxx += (lx - mx) * (lx - mx);
    sxy += (lx - mx) * (ly - my);
  }
  const double slope = sxy / sxx;
  const double icept = my - slope * mx;
  double ssr = 0.0;
  for (const auto& [lx, ly] : pts) {
    const double res = ly - (icept + slope * lx);
    ssr += res * res;
  }
  const double se = std::sqrt(ssr / (n - 2) / sxx);
  return {slope, se, n};
}

}  // namespace vacent::casimir
