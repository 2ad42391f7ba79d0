#pragma once

// Dipole-coupling tensor machinery: the operator D_mn applied to the
// auxiliary function f(k0 R), the oscillating-dipole potential V_lm(k, R),
// the vacuum field-mode correlator and the two-level polarizability.

#include "vacent/model.hpp"

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <complex>

namespace vacent::kernel {

using Mat3 = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;

/// tau_mn(x) with D_mn f(k0 R) = k0^3 tau_mn(x).
///
/// In the frame where r_hat = z the tensor is diag(trans, trans, long) with
///   trans(x) = (x - x^2 f + f + x g) / x^3
///   long(x)  = -2 (f + x g) / x^3
/// obtained from f' = -g, f'' = 1/x - f. `components` is that diagonal tensor
/// rotated to the lab frame, tau = trans (1 - r r^T) + long r r^T.
class DipoleTensor {
 public:
  DipoleTensor(double x, double trans, double longitudinal, const Vec3& r_hat);

  double x() const { return x_; }
  double trans() const { return trans_; }
  double longitudinal() const { return long_; }
  const Vec3& r_hat() const { return r_hat_; }
  const Mat3& components() const { return components_; }

 private:
  double x_;
  double trans_;
  double long_;
  Vec3 r_hat_;
  Mat3 components_;
};

DipoleTensor dipole_tensor(double x, const Vec3& r_hat = Vec3::UnitZ());

/// Transverse and longitudinal scalars only.
double tau_trans(double x);
double tau_long(double x);

/// T(x) = n_a . tau . n_b. Throws DomainError for non-unit vectors.
double contract(const DipoleTensor& tensor, const Vec3& n_a, const Vec3& n_b);

/// V_lm(k, R) = k^3 [ (d_lm - R_l R_m) cos(kR)/(kR)
///                   - (d_lm - 3 R_l R_m)(sin(kR)/(kR)^2 + cos(kR)/(kR)^3) ]
double dipole_potential(double k, const Vec3& r_vec, int l, int m);
Mat3 dipole_potential_tensor(double k, const Vec3& r_vec);

/// alpha(k) = 2 omega0 d^2 / (3 hbar (omega0^2 - omega_k^2)), omega_k = c k.
/// Throws PoleError at resonance (relative distance below 1e-14).
double polarizability(double k, const TwoLevelAtom& atom);

/// Same expression at imaginary wavenumber k = i u; pole free.
double polarizability_imaginary(double u, const TwoLevelAtom& atom);

/// Orthonormal linear polarizations e_{k,1}, e_{k,2} perpendicular to k.
std::pair<Vec3, Vec3> polarization_basis(const Vec3& k_vec);

/// <0| E_kj(R_B)_m E_kj(R_A)_l |0> = (2 pi hbar c / V) (e_kj)_m (e_kj)_l k e^{i k.R},
/// R = r_a - r_b, for polarization j in {0, 1} and quantization volume V.
CMat3 vacuum_mode_correlator(const Vec3& k_vec, int j, const Vec3& r_a, const Vec3& r_b,
                             double volume = 1.0);

/// Polarization-summed solid-angle integral
///   int dOmega_k sum_j (e_kj)_m (e_kj)_l e^{i k.R}
///     = 4 pi [ (1 - R R^T) a_T(q) + R R^T a_L(q) ],   q = k |R|
/// with a_T = sin q/q + cos q/q^2 - sin q/q^3 and a_L = 2 (sin q/q^3 - cos q/q^2).
/// At R = 0 this is (8 pi / 3) * identity.
Mat3 angle_integrated_correlator(double k, const Vec3& r_vec);

/// a_T(q) and a_L(q), with small-q series.
double angular_trans(double q);
double angular_long(double q);

}  // namespace vacent::kernel
