#include "vacent/kernel.hpp"

#include "vacent/errors.hpp"
#include "vacent/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace vacent::kernel {

namespace {

constexpr double kUnitTol = 1e-12;
// Above this x the transverse numerator is summed from its asymptotic
// expansion; the direct form x - x^2 f + ... cancels like x^2/4.
constexpr double kTransAsymptoticFrom = 40.0;

void require_x(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": x must be finite and > 0");
  }
}

void require_unit(const Vec3& v, const char* what) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > kUnitTol) {
    throw DomainError(std::string(what) + ": orientation must be a unit vector");
  }
}

// x^3 tau_trans = sum_m (-1)^m [(2m+2)! + (2m+1)! + (2m)!] / x^{2m+1},
// optimally truncated.
double trans_numerator_asymptotic(double x) {
  const double inv_x2 = 1.0 / (x * x);
  double fact = 1.0;  // (2m)!
  double power = 1.0 / x;
  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int m = 0; m < 200; ++m) {
    const double f0 = fact;
    const double f1 = fact * (2 * m + 1);
    const double f2 = f1 * (2 * m + 2);
    const double term = (f0 + f1 + f2) * power;
    if (term > prev) break;
    sum += (m % 2 == 0 ? term : -term);
    if (term < 1e-17 * std::abs(sum)) break;
    prev = term;
    fact = f2;
    power *= inv_x2;
  }
  return sum;
}

}  // namespace

DipoleTensor::DipoleTensor(double x, double trans, double longitudinal, const Vec3& r_hat)
    : x_(x), trans_(trans), long_(longitudinal), r_hat_(r_hat) {
  require_x(x, "DipoleTensor");
  require_unit(r_hat, "DipoleTensor");
  const Mat3 rr = r_hat * r_hat.transpose();
  components_ = trans * (Mat3::Identity() - rr) + longitudinal * rr;
}

double tau_trans(double x) {
  require_x(x, "tau_trans");
  if (x >= kTransAsymptoticFrom) {
    return trans_numerator_asymptotic(x) / (x * x * x);
  }
  const auto a = specfun::aux(x);
  return (x - x * x * a.f() + a.f() + x * a.g()) / (x * x * x);
}

double tau_long(double x) {
  require_x(x, "tau_long");
  const auto a = specfun::aux(x);
  return -2.0 * (a.f() + x * a.g()) / (x * x * x);
}

DipoleTensor dipole_tensor(double x, const Vec3& r_hat) {
  return DipoleTensor(x, tau_trans(x), tau_long(x), r_hat);
}

double contract(const DipoleTensor& tensor, const Vec3& n_a, const Vec3& n_b) {
  require_unit(n_a, "contract");
  require_unit(n_b, "contract");
  return n_a.dot(tensor.components() * n_b);
}

Mat3 dipole_potential_tensor(double k, const Vec3& r_vec) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("dipole_potential: k must be > 0");
  const double r = r_vec.norm();
  if (!(r > 0.0) || !r_vec.allFinite()) {
    throw DomainError("dipole_potential: separation must be nonzero");
  }
  const Vec3 rh = r_vec / r;
  const Mat3 rr = rh * rh.transpose();
  const Mat3 id = Mat3::Identity();
  const double q = k * r;
  const double s = std::sin(q);
  const double c = std::cos(q);
  const double k3 = k * k * k;
  return k3 * ((id - rr) * (c / q) - (id - 3.0 * rr) * (s / (q * q) + c / (q * q * q)));
}

double dipole_potential(double k, const Vec3& r_vec, int l, int m) {
  if (l < 0 || l > 2 || m < 0 || m > 2) throw DomainError("dipole_potential: index out of range");
  return dipole_potential_tensor(k, r_vec)(l, m);
}

double polarizability(double k, const TwoLevelAtom& atom) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("polarizability: k must be >= 0");
  const auto& au = atomic_units();
  const double w0 = atom.omega0();
  const double wk = au.c * k;
  const double d2 = atom.dipole().squaredNorm();
  const double denom = w0 * w0 - wk * wk;
  if (std::abs(denom) <= 1e-14 * w0 * w0) {
    throw PoleError("polarizability: resonant wavenumber (use a pole-aware path)");
  }
  return 2.0 * w0 * d2 / (3.0 * au.hbar * denom);
}

double polarizability_imaginary(double u, const TwoLevelAtom& atom) {
  if (!std::isfinite(u)) throw DomainError("polarizability_imaginary: u must be finite");
  const auto& au = atomic_units();
  const double w0 = atom.omega0();
  const double wu = au.c * u;
  return 2.0 * w0 * atom.dipole().squaredNorm() / (3.0 * au.hbar * (w0 * w0 + wu * wu));
}

std::pair<Vec3, Vec3> polarization_basis(const Vec3& k_vec) {
  const double kn = k_vec.norm();
  if (!(kn > 0.0)) throw DomainError("polarization_basis: zero wavevector");
  const Vec3 kh = k_vec / kn;
  const Vec3 trial = std::abs(kh.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = (trial - trial.dot(kh) * kh).normalized();
  const Vec3 e2 = kh.cross(e1);
  return {e1, e2};
}

CMat3 vacuum_mode_correlator(const Vec3& k_vec, int j, const Vec3& r_a, const Vec3& r_b,
                             double volume) {
  if (j != 0 && j != 1) throw DomainError("vacuum_mode_correlator: polarization index must be 0 or 1");
  if (!(volume > 0.0)) throw DomainError("vacuum_mode_correlator: volume must be > 0");
  const auto [e1, e2] = polarization_basis(k_vec);
  const Vec3& e = (j == 0) ? e1 : e2;
  const auto& au = atomic_units();
  const double pref = 2.0 * std::numbers::pi * au.hbar * au.c / volume * k_vec.norm();
  const std::complex<double> phase = std::polar(1.0, k_vec.dot(r_a - r_b));
  // entry (m, l) = e_m e_l
  return (pref * phase) * (e * e.transpose()).cast<std::complex<double>>();
}

double angular_trans(double q) {
  const double aq = std::abs(q);
  if (aq < 1.0) {
    // sum (-1)^n q^{2n} (2n+2)^2 / (2n+3)!
    const double q2 = q * q;
    double inv_fact = 1.0 / 6.0;  // 1/(2n+3)!
    double pw = 1.0;
    double sum = 0.0;
    for (int n = 0; n < 20; ++n) {
      const double t = pw * (2.0 * n + 2) * (2.0 * n + 2) * inv_fact;
      sum += (n % 2 == 0) ? t : -t;
      pw *= q2;
      inv_fact /= (2.0 * n + 4) * (2.0 * n + 5);
    }
    return sum;
  }
  const double s = std::sin(q);
  const double c = std::cos(q);
  return s / q + c / (q * q) - s / (q * q * q);
}

double angular_long(double q) {
  const double aq = std::abs(q);
  if (aq < 1.0) {
    // sum (-1)^m 4 (m+1) q^{2m} / (2m+3)!
    const double q2 = q * q;
    double inv_fact = 1.0 / 6.0;
    double pw = 1.0;
    double sum = 0.0;
    for (int m = 0; m < 20; ++m) {
      const double t = 4.0 * (m + 1) * pw * inv_fact;
      sum += (m % 2 == 0) ? t : -t;
      pw *= q2;
      inv_fact /= (2.0 * m + 4) * (2.0 * m + 5);
    }
    return sum;
  }
  const double s = std::sin(q);
  const double c = std::cos(q);
  return 2.0 * (s / (q * q * q) - c / (q * q));
}

Mat3 angle_integrated_correlator(double k, const Vec3& r_vec) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("angle_integrated_correlator: k must be >= 0");
  constexpr double four_pi = 4.0 * std::numbers::pi;
  const double r = r_vec.norm();
  if (r == 0.0) return (four_pi * 2.0 / 3.0) * Mat3::Identity();
  const Vec3 rh = r_vec / r;
  const Mat3 rr = rh * rh.transpose();
  const double q = k * r;
  return four_pi * (angular_trans(q) * (Mat3::Identity() - rr) + angular_long(q) * rr);
}

}  // namespace vacent::kernel
