#pragma once

#include <Eigen/Core>

#include <array>
#include <complex>

namespace vacent {

using CMat4 = Eigen::Matrix4cd;

/// Coefficients c0..c3 of det(lambda I - M) = lambda^4 + c3 lambda^3 + ... + c0,
/// by the Faddeev-LeVerrier recursion in extended precision.
std::array<std::complex<long double>, 4> characteristic_polynomial(const CMat4& m);

/// Eigenvalues of a general complex 4x4 matrix as roots of its characteristic
/// polynomial (Aberth-Ehrlich iteration followed by Newton polishing).
std::array<std::complex<double>, 4> eigenvalues4(const CMat4& m);

}  // namespace vacent
