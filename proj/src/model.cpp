#include "vacent/model.hpp"

#include "vacent/errors.hpp"
#include "vacent/kernel.hpp"
#include "vacent/specfun.hpp"

#include <cmath>
#include <numbers>

namespace vacent {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kFrequencyTol = 1e-9;

void require_unit(const Vec3& v, const char* name) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > kUnitTol) {
    throw DomainError(std::string("PairConfiguration: ") + name + " must be a unit vector");
  }
}

Vec3 unit_or_throw(const Vec3& v, const char* name) {
  const double n = v.norm();
  if (!v.allFinite() || !(n > 0.0)) {
    throw DomainError(std::string(name) + ": direction vector must be nonzero and finite");
  }
  return v / n;
}

}  // namespace

const PhysicalConstants& atomic_units() {
  static const PhysicalConstants au{
      .hbar = 1.0,
      .c = 137.035999084,
      .elementary_charge = 1.0,
      .fine_structure = 1.0 / 137.035999084,
      .bohr_radius = 1.0,
  };
  return au;
}

TwoLevelAtom::TwoLevelAtom(double omega0, const Vec3& dipole)
    : omega0_(omega0), dipole_(dipole) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw DomainError("TwoLevelAtom: omega0 must be finite and > 0");
  }
  if (!dipole.allFinite()) throw DomainError("TwoLevelAtom: dipole must be finite");
}

double TwoLevelAtom::k0() const { return omega0_ / atomic_units().c; }

PairConfiguration::PairConfiguration(double x, const Vec3& n_a, const Vec3& n_b,
                                     const Vec3& r_hat, double mu)
    : x_(x), n_a_(n_a), n_b_(n_b), r_hat_(r_hat), mu_(mu) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("PairConfiguration: x must be finite and > 0");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("PairConfiguration: mu must be finite and >= 0");
  require_unit(n_a, "n_a");
  require_unit(n_b, "n_b");
  require_unit(r_hat, "r_hat");
}

PairConfiguration PairConfiguration::normalized(double x, const Vec3& d_a, const Vec3& d_b,
                                                const Vec3& r_dir, double mu) {
  return PairConfiguration(x, unit_or_throw(d_a, "n_a"), unit_or_throw(d_b, "n_b"),
                           unit_or_throw(r_dir, "r_hat"), mu);
}

PairConfiguration PairConfiguration::with_x(double x) const {
  return PairConfiguration(x, n_a_, n_b_, r_hat_, mu_);
}

PairConfiguration PairConfiguration::with_mu(double mu) const {
  return PairConfiguration(x_, n_a_, n_b_, r_hat_, mu);
}

PairConfiguration reduce(const TwoLevelAtom& atom_a, const TwoLevelAtom& atom_b,
                         const Vec3& separation) {
  const double wa = atom_a.omega0();
  const double wb = atom_b.omega0();
  if (std::abs(wa - wb) > kFrequencyTol * std::max(wa, wb)) {
    throw FrequencyMismatchError("reduce: atoms must share one transition frequency");
  }
  const double r = separation.norm();
  if (!separation.allFinite() || !(r > 0.0)) throw DomainError("reduce: separation must be nonzero");

  const auto& au = atomic_units();
  const double k0 = atom_a.k0();
  const double da = atom_a.dipole().norm();
  const double db = atom_b.dipole().norm();
  const double mu = da * db * k0 * k0 * k0 / (au.hbar * wa);
  // A vanishing dipole has no orientation; any unit vector gives mu = 0 anyway.
  const Vec3 n_a = da > 0.0 ? Vec3(atom_a.dipole() / da) : Vec3(Vec3::UnitX());
  const Vec3 n_b = db > 0.0 ? Vec3(atom_b.dipole() / db) : Vec3(Vec3::UnitX());
  return PairConfiguration(k0 * r, n_a, n_b, separation / r, mu);
}

double concurrence_dimensional(const TwoLevelAtom& atom_a, const TwoLevelAtom& atom_b,
                               const Vec3& separation) {
  const double wa = atom_a.omega0();
  if (std::abs(wa - atom_b.omega0()) > kFrequencyTol * std::max(wa, atom_b.omega0())) {
    throw FrequencyMismatchError("concurrence_dimensional: frequency mismatch");
  }
  const double r = separation.norm();
  if (!(r > 0.0)) throw DomainError("concurrence_dimensional: zero separation");
  const auto& au = atomic_units();
  const double k0 = atom_a.k0();
  const auto a = specfun::aux(k0 * r);
  // D_mn f(k0 R) = (1/R)[(d - RR) d^2/dR^2 + (d - 3RR)(1/R^2 - (1/R) d/dR)] f(k0 R)
  const double d2 = k0 * k0 * a.f_double_prime();
  const double d1 = k0 * a.f_prime();
  const Vec3 rh = separation / r;
  const Eigen::Matrix3d rr = rh * rh.transpose();
  const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
  const Eigen::Matrix3d dop =
      ((id - rr) * d2 + (id - 3.0 * rr) * (a.f() / (r * r) - d1 / r)) / r;
  const double sum = atom_a.dipole().dot(dop * atom_b.dipole());
  return 2.0 / (std::numbers::pi * au.hbar * wa) * std::abs(sum);
}

std::string_view to_string(Validity v) {
  switch (v) {
    case Validity::ok: return "OK";
    case Validity::warn: return "WARN";
    case Validity::invalid: return "INVALID";
  }
  return "INVALID";
}

ValidityReport perturbative_validity(const PairConfiguration& cfg) {
  const auto tensor = kernel::dipole_tensor(cfg.x(), cfg.r_hat());
  const double t = kernel::contract(tensor, cfg.n_a(), cfg.n_b());
  const double margin = 2.0 * cfg.mu() / std::numbers::pi * std::abs(t);
  Validity flag = Validity::ok;
  if (margin > 1.0) {
    flag = Validity::invalid;
  } else if (margin > 0.1) {
    flag = Validity::warn;
  }
  return {flag, margin};
}

double HydrogenPreset::dipole_moment() {
  // <1s| z |2p0> = 2^7 sqrt(2) / 3^5 a0
  return 128.0 * std::numbers::sqrt2 / 243.0;
}

TwoLevelAtom HydrogenPreset::atom(const Vec3& orientation) {
  return TwoLevelAtom(omega0, dipole_moment() * unit_or_throw(orientation, "HydrogenPreset"));
}

}  // namespace vacent
