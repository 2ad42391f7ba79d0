#include "vacent/entanglement.hpp"

#include "vacent/errors.hpp"
#include "vacent/kernel.hpp"
#include "vacent/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vacent {

namespace {

using cd = std::complex<double>;

constexpr double kXStateTol = 1e-12;

// sigma_y (x) sigma_y in the (ee, eg, ge, gg) basis.
CMat4 sigma_yy() {
  CMat4 m = CMat4::Zero();
  m(0, 3) = -1.0;
  m(3, 0) = -1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  return m;
}

// Single-qubit spin matrices in the (e, g) basis, S = sigma / 2.
std::array<Eigen::Matrix2cd, 3> spin_matrices() {
  Eigen::Matrix2cd sx, sy, sz;
  sx << 0.0, 0.5, 0.5, 0.0;
  sy << 0.0, cd(0.0, -0.5), cd(0.0, 0.5), 0.0;
  sz << 0.5, 0.0, 0.0, -0.5;
  return {sx, sy, sz};
}

CMat4 kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  CMat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

double geometric_near(const PairConfiguration& cfg) {
  return cfg.n_a().dot(cfg.n_b()) - 3.0 * cfg.n_a().dot(cfg.r_hat()) * cfg.n_b().dot(cfg.r_hat());
}

double geometric_far(const PairConfiguration& cfg) {
  return cfg.n_a().dot(cfg.n_b()) - 2.0 * cfg.n_a().dot(cfg.r_hat()) * cfg.n_b().dot(cfg.r_hat());
}

ConcurrenceResult make_result(double raw, Regime regime, const PairConfiguration& cfg) {
  const auto validity = perturbative_validity(cfg).flag;
  return {std::clamp(raw, 0.0, 1.0), raw, regime, validity};
}

// Polynomial roots in an m-fold cluster carry errors of order eps^(1/m).
bool clustered(const std::array<cd, 4>& ev) {
  double scale = 0.0;
  for (const auto& v : ev) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return true;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(ev[i] - ev[j]) < 1e-3 * scale) return true;
  return false;
}

// Eigenvalues of sqrt(rho) rho_tilde sqrt(rho), which is Hermitian and
// similar to rho rho_tilde.
std::array<double, 4> hermitian_product_eigenvalues(const CMat4& rho, const CMat4& rho_tilde) {
  Eigen::SelfAdjointEigenSolver<CMat4> es(rho);
  const Eigen::Vector4d root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const CMat4 s = es.eigenvectors() * root.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
  CMat4 h = s * rho_tilde * s;
  h = 0.5 * (h + h.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMat4> hs(h, Eigen::EigenvaluesOnly);
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = hs.eigenvalues()(i);
  return out;
}

double checked_sqrt(double v, const char* what) {
  if (v < -1e-12) throw DomainError(std::string(what) + ": negative radicand");
  return std::sqrt(std::max(0.0, v));
}

}  // namespace

TwoQubitState::TwoQubitState(const CMat4& matrix) : matrix_(matrix) {
  if (!matrix.allFinite()) throw DomainError("TwoQubitState: non-finite entries");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("TwoQubitState: matrix is not Hermitian");
  }
  if (std::abs(matrix.trace() - cd(1.0)) > 1e-12) {
    throw DomainError("TwoQubitState: trace must be 1");
  }
  Eigen::SelfAdjointEigenSolver<CMat4> es(matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw DomainError("TwoQubitState: matrix is not positive semidefinite");
  }
}

double TwoQubitState::off_x_mass() const {
  double mass = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3) mass = std::max(mass, std::abs(matrix_(i, j)));
  return mass;
}

SpinCorrelators spin_correlators(const TwoQubitState& state) {
  const auto s = spin_matrices();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const CMat4& rho = state.matrix();
  SpinCorrelators out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.g(i, j) = (rho * kron(s[i], s[j])).trace();
  const double sz_a = (rho * kron(s[2], id)).trace().real();
  const double sz_b = (rho * kron(id, s[2])).trace().real();
  out.m_z = 0.5 * (sz_a + sz_b);
  out.delta_s_z = sz_a - sz_b;
  return out;
}

double amplitude_c_ee(const PairConfiguration& cfg) {
  const auto tensor = kernel::dipole_tensor(cfg.x(), cfg.r_hat());
  return -(cfg.mu() / std::numbers::pi) * kernel::contract(tensor, cfg.n_a(), cfg.n_b());
}

ConcurrenceResult concurrence_full(const PairConfiguration& cfg) {
  return make_result(2.0 * std::abs(amplitude_c_ee(cfg)), Regime::full, cfg);
}

ConcurrenceResult concurrence_near(const PairConfiguration& cfg) {
  const double x = cfg.x();
  return make_result(cfg.mu() * std::abs(geometric_near(cfg)) / (x * x * x), Regime::near, cfg);
}

ConcurrenceResult concurrence_far(const PairConfiguration& cfg) {
  const double x2 = cfg.x() * cfg.x();
  return make_result(8.0 * cfg.mu() / std::numbers::pi * std::abs(geometric_far(cfg)) / (x2 * x2),
                     Regime::far, cfg);
}

double x_state_concurrence(const TwoQubitState& state) {
  const CMat4& r = state.matrix();
  const double p11 = std::max(0.0, r(0, 0).real());
  const double p22 = std::max(0.0, r(1, 1).real());
  const double p33 = std::max(0.0, r(2, 2).real());
  const double p44 = std::max(0.0, r(3, 3).real());
  const double c1 = std::abs(r(0, 3)) - std::sqrt(p22 * p33);
  const double c2 = std::abs(r(1, 2)) - std::sqrt(p11 * p44);
  return 2.0 * std::max({0.0, c1, c2});
}

double wootters_concurrence(const TwoQubitState& state, WoottersPath path) {
  if (path == WoottersPath::x_state ||
      (path == WoottersPath::automatic && state.off_x_mass() < kXStateTol)) {
    return x_state_concurrence(state);
  }
  const CMat4& rho = state.matrix();
  const CMat4 yy = sigma_yy();
  const CMat4 rho_tilde = yy * rho.conjugate() * yy;
  const auto roots = eigenvalues4(rho * rho_tilde);
  std::array<double, 4> lambda{};
  if (clustered(roots)) {
    lambda = hermitian_product_eigenvalues(rho, rho_tilde);
  } else {
    for (int i = 0; i < 4; ++i) lambda[i] = roots[i].real();
  }
  std::array<double, 4> alpha{};
  for (int i = 0; i < 4; ++i) alpha[i] = std::sqrt(std::max(0.0, lambda[i]));
  std::sort(alpha.begin(), alpha.end(), std::greater<>());
  return std::max(0.0, alpha[0] - alpha[1] - alpha[2] - alpha[3]);
}

double entanglement_of_formation(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw DomainError("entanglement_of_formation: c must lie in [0, 1]");
  const double root = std::sqrt((1.0 - c) * (1.0 + c));
  const double p = 0.5 * (1.0 + root);
  const double q = 0.5 * c * c / (1.0 + root);  // 1 - p without cancellation
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (q > 0.0) h -= q * std::log2(q);
  return h;
}

double palma_concurrence(const SpinCorrelators& corr) {
  const auto& g = corr.g;
  const double gxx = g(0, 0).real();
  const double gyy = g(1, 1).real();
  const double gzz = g(2, 2).real();
  const double gxy = g(0, 1).real();
  const double gyx = g(1, 0).real();
  // The population term needs the half difference <S_z^A - S_z^B>/2.
  const double half_delta = 0.5 * corr.delta_s_z;
  const double c1 = std::hypot(gxx - gyy, gxy + gyx) -
                    checked_sqrt((0.25 - gzz) * (0.25 - gzz) - half_delta * half_delta,
                                 "palma_concurrence");
  const double c2 = std::hypot(gxx + gyy, gxy - gyx) -
                    checked_sqrt((0.25 + gzz) * (0.25 + gzz) - corr.m_z * corr.m_z,
                                 "palma_concurrence");
  return 2.0 * std::max({0.0, c1, c2});
}

C1C2 c1_c2_from_amplitudes(const PairConfiguration& cfg, double cutoff, LocalTerms local) {
  if (!(cutoff > 1.0) || !std::isfinite(cutoff)) {
    throw DomainError("c1_c2_from_amplitudes: cutoff must be finite and > 1");
  }
  const double c_ee = amplitude_c_ee(cfg);
  const double mu = cfg.mu();
  const double x_cross =
      mu * oracle::modesum_second_order(cfg.x(), cfg.n_a(), cfg.n_b(), cfg.r_hat()).real();
  // sqrt(L_A L_B) = mu * (per-unit population) since mu_A mu_B = mu^2.
  const double local_pop =
      local == LocalTerms::dropped ? 0.0 : mu * oracle::local_population(cutoff).real();
  const double p_ee = c_ee * c_ee + local_pop * local_pop + x_cross * x_cross;
  const double p_gg = 1.0;
  C1C2 out;
  out.c_ee = c_ee;
  out.cross_coherence = x_cross;
  out.local_population = local_pop;
  out.c1 = std::abs(c_ee) - local_pop;
  out.c2 = std::abs(x_cross) - std::sqrt(p_ee * p_gg);
  return out;
}

TwoQubitState effective_density_matrix(const PairConfiguration& cfg) {
  if (perturbative_validity(cfg).flag == Validity::invalid) {
    throw DomainError("effective_density_matrix: perturbative expansion invalid for this configuration");
  }
  const double c = amplitude_c_ee(cfg);
  const double norm = 1.0 / std::sqrt(1.0 + c * c);
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(0) = c * norm;  // ee
  psi(3) = norm;      // gg
  CMat4 rho = psi * psi.adjoint();
  // Symmetrize the trace exactly to one.
  rho /= rho.trace().real();
  return TwoQubitState(rho);
}

}  // namespace vacent
