#pragma once

// Casimir-Polder interaction energy of the atom pair, its London (van der
// Waals) near-zone limit and power-law fitting of distance curves.

#include "vacent/model.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace vacent::casimir {

enum class Method { rotated_contour, principal_value_oracle, near_closed_form };

std::string_view to_string(Method m);

struct PotentialResult {
  double r;        ///< separation: Bohr radii, or 1/k0 units for reduced results
  double energy;   ///< Hartree, or units of hbar omega0 for reduced results
  Method method;
  double abs_err_est;
};

struct WcpOptions {
  /// Use the isotropic (orientation averaged) polarizability alpha(k) with its
  /// 1/3 factor instead of the fixed-orientation dipole tensors.
  bool isotropic = false;
};

/// Reduced energy integral
///   J(x) = x^{-6} int_0^inf dnu e^{-2 nu x} q_ab(nu x)^2 / (1 + nu^2)^2,
///   q_ab(y) = A (1 + y + y^2) - 2 B (1 + y),
/// A = n_a.n_b - (n_a.r)(n_b.r), B = (n_a.r)(n_b.r); W = -(2/pi) hbar omega0 mu^2 J.
struct ContourIntegral {
  double value;
  double abs_err;
};
ContourIntegral wcp_contour_integral(const PairConfiguration& cfg, const WcpOptions& opts = {});

/// W_CP in units of hbar omega0 (r reported as x).
PotentialResult wcp_reduced(const PairConfiguration& cfg, const WcpOptions& opts = {});

/// Dimensional W_CP in Hartree; the atoms supply omega0 (and must match cfg's
/// frequency convention), r in Bohr radii.
PotentialResult wcp(const PairConfiguration& cfg, const TwoLevelAtom& atom_a,
                    const TwoLevelAtom& atom_b, const WcpOptions& opts = {});

/// Real-axis evaluation through the polarizability pole (oracle cross path),
/// reduced units.
PotentialResult wcp_principal_value_reduced(const PairConfiguration& cfg);

/// London limit W = -|<ee|V_dd|gg>|^2 / (2 hbar omega0)
///               = -(d_A d_B kappa)^2 / (2 hbar omega0 R^6),
/// kappa = n_a.n_b - 3 (n_a.r)(n_b.r). Reduced: -mu^2 kappa^2 / (2 x^6).
PotentialResult vdw_near_reduced(const PairConfiguration& cfg);
PotentialResult vdw_near(const PairConfiguration& cfg, const TwoLevelAtom& atom_a,
                         const TwoLevelAtom& atom_b);

struct PowerLawFit {
  double slope;
  double stderr_slope;
  int points;
};

/// Least-squares slope of log|value| against log r for points with r in
/// [r_lo, r_hi]. Needs >= 5 points, all nonzero with one sign.
PowerLawFit fit_powerlaw(const std::vector<std::pair<double, double>>& curve, double r_lo,
                         double r_hi);

}  // namespace vacent::casimir
