#pragma once

// Entanglement induced between the two atoms: the dressed-state amplitude
// c_ee, concurrence C = 2|c_ee| (full, near-zone, far-zone), Wootters
// concurrence and entanglement of formation for general two-qubit states,
// the spin-correlator form of the concurrence, the C1/C2 decomposition and
// the effective pure-state density matrix.

#include "vacent/model.hpp"
#include "vacent/small_eigen.hpp"

#include <Eigen/Core>

namespace vacent {

/// Two-qubit density matrix in the basis (ee, eg, ge, gg); atom A is the
/// first tensor factor and |e> carries S_z = +1/2.
class TwoQubitState {
 public:
  /// Throws DomainError unless Hermitian (1e-12), unit trace (1e-12) and
  /// positive semidefinite (eigenvalues >= -1e-10).
  explicit TwoQubitState(const CMat4& matrix);

  const CMat4& matrix() const { return matrix_; }

  /// Largest modulus outside the main and anti-diagonal.
  double off_x_mass() const;

 private:
  CMat4 matrix_;
};

/// g_ij = <S_i^A S_j^B>, m_z = <S_z^A + S_z^B>/2, delta_s_z = <S_z^A - S_z^B>.
struct SpinCorrelators {
  Eigen::Matrix3cd g;
  double m_z = 0.0;
  double delta_s_z = 0.0;
};

SpinCorrelators spin_correlators(const TwoQubitState& state);

enum class Regime { full, near, far };

struct ConcurrenceResult {
  double value;  ///< raw clamped to [0, 1]
  double raw;
  Regime regime;
  Validity validity;
};

/// c_ee = -(mu/pi) T(x), T = n_a . tau(x) . n_b. Sign preserved.
double amplitude_c_ee(const PairConfiguration& cfg);

/// raw = 2 |c_ee| = (2 mu / pi) |T(x)|.
ConcurrenceResult concurrence_full(const PairConfiguration& cfg);

/// raw = mu |n_a.n_b - 3 (n_a.r)(n_b.r)| / x^3.
ConcurrenceResult concurrence_near(const PairConfiguration& cfg);

/// raw = (8 mu / pi) |n_a.n_b - 2 (n_a.r)(n_b.r)| / x^4.
ConcurrenceResult concurrence_far(const PairConfiguration& cfg);

enum class WoottersPath { automatic, eigenvalues, x_state };

/// C = max(0, a1 - a2 - a3 - a4) from the square roots of the eigenvalues of
/// rho (sy x sy) rho* (sy x sy). `automatic` takes the closed X-state form
/// when the off-X mass is below 1e-12. The eigenvalue path finds the roots of
/// the characteristic polynomial; when two roots lie within 1e-3 of the
/// spectral radius it re-solves the Hermitian similar matrix
/// sqrt(rho) rho_tilde sqrt(rho) instead.
double wootters_concurrence(const TwoQubitState& state,
                            WoottersPath path = WoottersPath::automatic);

/// Closed form for X-states: 2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)).
double x_state_concurrence(const TwoQubitState& state);

/// E_F = h((1 + sqrt(1 - c^2)) / 2) with h the binary entropy in bits.
double entanglement_of_formation(double c);

/// C = 2 max(0, C1, C2) from spin correlators of an X-state.
double palma_concurrence(const SpinCorrelators& corr);

enum class LocalTerms {
  regularized,  ///< keep the cutoff-regularized one-photon populations
  dropped,      ///< renormalized: separation-independent sums removed
};

struct C1C2 {
  double c1;
  double c2;
  double c_ee;
  double cross_coherence;   ///< X = sum c_eg,kj c*_ge,kj
  double local_population;  ///< sqrt(L_A L_B)
};

/// C1 = |c_ee| - sqrt(L_A L_B), C2 = |X| - sqrt(P_ee P_gg), with
/// P_ee = c_ee^2 + L_A L_B + X^2 and P_gg = 1 at this order. L_A, L_B are
/// regularized with wavenumber cutoff cutoff * k0 (cutoff > 1). X comes from
/// the second-order mode-sum quadrature.
C1C2 c1_c2_from_amplitudes(const PairConfiguration& cfg, double cutoff,
                           LocalTerms local = LocalTerms::regularized);

/// Pure state (|gg> + c_ee |ee>) / sqrt(1 + c_ee^2). Throws DomainError for an
/// INVALID configuration.
TwoQubitState effective_density_matrix(const PairConfiguration& cfg);

}  // namespace vacent
