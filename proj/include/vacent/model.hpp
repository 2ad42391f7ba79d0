#pragma once

// Physical constants, atom/geometry records and the reduction of a dimensional
// two-atom setup to the dimensionless variables used everywhere else.
//
// Unit system: Hartree atomic units with Gaussian electromagnetism,
// hbar = e = m_e = 1, c = 1/alpha, lengths in Bohr radii.

#include <Eigen/Core>

#include <string_view>

namespace vacent {

using Vec3 = Eigen::Vector3d;

struct PhysicalConstants {
  double hbar;
  double c;
  double elementary_charge;
  double fine_structure;
  double bohr_radius;
};

/// CODATA 2018 values expressed in atomic units.
const PhysicalConstants& atomic_units();

/// Bohr radius in metres (for --units si).
inline constexpr double kBohrRadiusMetres = 5.29177210903e-11;

class TwoLevelAtom {
 public:
  /// omega0 in Hartree/hbar, dipole in e*a0. Throws DomainError unless
  /// omega0 > 0 and all entries are finite.
  TwoLevelAtom(double omega0, const Vec3& dipole);

  double omega0() const { return omega0_; }
  const Vec3& dipole() const { return dipole_; }
  double k0() const;

 private:
  double omega0_;
  Vec3 dipole_;
};

/// Reduced description of the pair: x = k0 R, unit dipole orientations,
/// separation direction and mu = |d_A||d_B| k0^3 / (hbar omega0).
class PairConfiguration {
 public:
  /// Orientation vectors must be unit length within 1e-12; x > 0, mu >= 0.
  PairConfiguration(double x, const Vec3& n_a, const Vec3& n_b, const Vec3& r_hat,
                    double mu);

  /// Convenience constructor that normalizes the three direction vectors
  /// (zero vectors are rejected).
  static PairConfiguration normalized(double x, const Vec3& d_a, const Vec3& d_b,
                                      const Vec3& r_dir, double mu);

  double x() const { return x_; }
  const Vec3& n_a() const { return n_a_; }
  const Vec3& n_b() const { return n_b_; }
  const Vec3& r_hat() const { return r_hat_; }
  double mu() const { return mu_; }

  PairConfiguration with_x(double x) const;
  PairConfiguration with_mu(double mu) const;

 private:
  double x_;
  Vec3 n_a_;
  Vec3 n_b_;
  Vec3 r_hat_;
  double mu_;
};

/// Exact nondimensionalization. separation = R_A - R_B in Bohr radii.
PairConfiguration reduce(const TwoLevelAtom& atom_a, const TwoLevelAtom& atom_b,
                         const Vec3& separation);

/// Dimensional concurrence path (no reduction), used to check `reduce`.
double concurrence_dimensional(const TwoLevelAtom& atom_a, const TwoLevelAtom& atom_b,
                               const Vec3& separation);

enum class Validity { ok, warn, invalid };

std::string_view to_string(Validity v);

struct ValidityReport {
  Validity flag;
  double margin;
};

/// margin = predicted concurrence (full formula); OK <= 0.1 < WARN <= 1 < INVALID.
ValidityReport perturbative_validity(const PairConfiguration& cfg);

/// Hydrogen 1s-2p(m=0) pair: omega0 = 3/8 Hartree (Lyman alpha),
/// |d| = 2^7 sqrt(2) / 3^5 e a0.
struct HydrogenPreset {
  static constexpr double omega0 = 0.375;
  static double dipole_moment();
  static TwoLevelAtom atom(const Vec3& orientation);
};

}  // namespace vacent
