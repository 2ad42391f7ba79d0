#pragma once

// Sine and cosine integrals and the auxiliary functions
//   f(x) = Ci(x) sin x + (pi/2 - Si(x)) cos x  = int_0^inf e^{-xt}/(1+t^2) dt
//   g(x) = -Ci(x) cos x + (pi/2 - Si(x)) sin x = int_0^inf t e^{-xt}/(1+t^2) dt
//
// Power series below kSeriesCrossover, continued fraction for E1(-ix) above.

namespace vacent::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kSeriesCrossover = 4.0;

/// Si(x) for finite x >= 0.
double si(double x);

/// Ci(x) for finite x > 0.
double ci(double x);

struct SiCi {
  double si;
  double ci;
  double abs_err;
};

SiCi sici(double x);

/// f, g and their derivatives at one point. The derivative fields are filled
/// from f' = -g and f'' = 1/x - f, so the identities hold exactly as stored.
class AuxFunValue {
 public:
  AuxFunValue(double x, double f, double g, double abs_err_est);

  double x() const { return x_; }
  double f() const { return f_; }
  double g() const { return g_; }
  double f_prime() const { return -g_; }
  double f_double_prime() const { return 1.0 / x_ - f_; }
  double g_prime() const { return f_ - 1.0 / x_; }
  double abs_err_est() const { return abs_err_; }

 private:
  double x_;
  double f_;
  double g_;
  double abs_err_;
};

AuxFunValue aux(double x);

/// Which branch `aux` and `sici` use at x (exposed so the seam can be tested).
enum class Branch { series, continued_fraction };
Branch branch_for(double x);

/// Force a particular branch; only for seam testing.
AuxFunValue aux_with_branch(double x, Branch b);

}  // namespace vacent::specfun
