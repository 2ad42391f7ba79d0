#pragma once

// Brute-force validators. Each routine evaluates a defining integral directly
// (oscillatory mode sums, integral representations, real-axis pole
// integrals) so the closed forms elsewhere can be checked against something
// that does not share their algebra. Slow by design.

#include "vacent/model.hpp"

#include <complex>
#include <functional>

namespace vacent::oracle {

struct QuadratureReport {
  std::complex<double> value;
  double abs_err_est = 0.0;
  int intervals_used = 0;
  bool accelerated = false;

  double real() const { return value.real(); }
};

/// Resolution knob: `standard`, or `fine` with doubled panel resolution and
/// a longer accelerated tail (used to audit the error estimates).
enum class Resolution { standard, fine };

/// Reduced first-order mode sum
///   -(1/pi) int_0^inf dk k^3/(1+k) Im G_ab(k x),
/// Im G_ab the polarization-summed, angle-integrated correlator contracted
/// with n_a, n_b. Equals T(x)/pi; c_ee = -mu * value.
QuadratureReport modesum_first_order(double x, const Vec3& n_a, const Vec3& n_b,
                                     const Vec3& r_hat,
                                     Resolution res = Resolution::standard);

/// Cross-coherence kernel (1/pi) int_0^inf dk k^3/(1+k)^2 Im G_ab(k x);
/// sum_kj c_eg,kj c*_ge,kj = mu * value.
QuadratureReport modesum_second_order(double x, const Vec3& n_a, const Vec3& n_b,
                                      const Vec3& r_hat,
                                      Resolution res = Resolution::standard);

/// Cutoff-regularized one-photon population per unit mu_i:
///   (2 / (3 pi)) int_0^cutoff dk k^3/(1+k)^2.
QuadratureReport local_population(double cutoff);

enum class AuxKind { f, g };

/// f = int_0^inf e^{-xt}/(1+t^2) dt (x >= 0), g = int_0^inf t e^{-xt}/(1+t^2) dt (x > 0).
QuadratureReport aux_integral_rep(double x, AuxKind which);

/// Integrand phi(z) / (z - pole)^order with phi analytic near the pole
/// (evaluated at complex points for the local Taylor expansion).
struct PoleIntegrand {
  std::function<std::complex<double>(std::complex<double>)> phi;
  int order = 1;  ///< 1 (Cauchy principal value) or 2 (Hadamard finite part)
  double lower = 0.0;
  double upper = 0.0;  ///< may be +infinity when oscillation_half_period > 0
  /// Half period of the tail oscillation; 0 for a finite upper limit.
  double oscillation_half_period = 0.0;
  /// Radius of the circle used for the Taylor coefficients of phi.
  double taylor_radius = 0.25;
};

struct PoleQuadrature {
  QuadratureReport principal;  ///< PV / finite part over [lower, upper]
  std::complex<double> residue;  ///< residue of the integrand at the pole
};

/// Symmetric-window principal value: ordinary quadrature outside
/// [pole - half_width, pole + half_width], local Taylor series of phi inside.
/// The result is recomputed with half the window; disagreement beyond
/// `tolerance` (relative) raises AccuracyError.
PoleQuadrature principal_value_quadrature(const PoleIntegrand& integrand, double pole,
                                          double half_width, double tolerance = 1e-7);

/// Reduced Casimir-Polder integral on the real wavenumber axis,
///   J = Im[ FP int_0^inf dk k^6 G_ab(kx)^2 / (1-k^2)^2 ] - pi Re Res_{k=1},
/// i.e. the finite part with the causal (pole below the path) prescription.
/// Equals the imaginary-axis integral used by casimir::wcp.
QuadratureReport wcp_real_axis(double x, const Vec3& n_a, const Vec3& n_b, const Vec3& r_hat,
                               double half_width = 5e-3);

/// Equal-time vacuum correlator <E_m(R_A) E_n(R_B)> (atomic units) from the
/// Abel-summed mode integral (hbar c / pi) int dk k^3 [angular kernel](kR).
QuadratureReport field_correlator(double r, const Vec3& n_a, const Vec3& n_b, const Vec3& r_hat);

}  // namespace vacent::oracle
