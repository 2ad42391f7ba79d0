#include <doctest.h>

#include "vacent/errors.hpp"
#include "vacent/oracle.hpp"
#include "vacent/specfun.hpp"

#include <cmath>
#include <numbers>

using namespace vacent;
using specfun::aux;

namespace {

constexpr double kPi = std::numbers::pi;

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("si and ci against high-precision reference values") {
  // 30-digit reference evaluations.
  CHECK(specfun::si(0.0) == 0.0);
  CHECK(rel_close(specfun::si(kPi), 1.851937051982466, 1e-12));
  CHECK(rel_close(specfun::si(4.0), 1.758203138949053, 1e-12));
  CHECK(rel_close(specfun::si(1e4), 1.5708915453859619, 1e-12));
  CHECK(rel_close(specfun::ci(1.0), 0.3374039229009681, 1e-12));
  CHECK(rel_close(specfun::ci(4.0), -0.14098169788693041, 1e-12));
  CHECK(rel_close(specfun::ci(100.0), -0.005148825142610492, 1e-12));
  CHECK(rel_close(specfun::ci(1e-8), -17.843465079050833, 1e-12));
}

TEST_CASE("si and ci limits") {
  CHECK(std::abs(specfun::si(1e4) - kPi / 2) < 1e-4);
  CHECK(std::abs(specfun::ci(1e-8) - std::log(1e-8) - specfun::kEulerGamma) < 1e-8);
  CHECK(rel_close(specfun::ci(100.0), std::sin(100.0) / 100.0, 1e-1));
  const double x = 100.0;
  // Next asymptotic term: Ci ~ sin x / x - cos x / x^2.
  CHECK(rel_close(specfun::ci(x), std::sin(x) / x - std::cos(x) / (x * x), 1e-3));
}

TEST_CASE("si and ci reject bad arguments") {
  CHECK_THROWS_AS(specfun::si(-1.0), DomainError);
  CHECK_THROWS_AS(specfun::si(INFINITY), DomainError);
  CHECK_THROWS_AS(specfun::si(NAN), DomainError);
  CHECK_THROWS_AS(specfun::ci(0.0), DomainError);
  CHECK_THROWS_AS(specfun::ci(-2.0), DomainError);
  CHECK_THROWS_AS(aux(0.0), DomainError);
  CHECK_THROWS_AS(aux(-1.0), DomainError);
}

TEST_CASE("aux f and g against reference values") {
  struct Ref {
    double x, f, g;
  };
  const Ref refs[] = {
      {0.01, 1.5204392192982373, 4.043385827376735},
      {0.1, 1.2910047283091012, 1.866076408909089},
      {1.0, 0.6214496242358134, 0.343377961556427},
      {4.0, 0.22919256802452698, 0.04967815559365675},
      {10.0, 0.09819103501017017, 0.009488539016354807},
      {50.0, 0.019984075898337290, 3.990475545378196e-4},
      {1000.0, 9.99998000024e-4, 9.99994000119995e-7},
  };
  for (const auto& r : refs) {
    CAPTURE(r.x);
    const auto v = aux(r.x);
    CHECK(rel_close(v.f(), r.f, 1e-12));
    CHECK(rel_close(v.g(), r.g, 1e-12));
    CHECK(v.abs_err_est() >= 0.0);
    CHECK(v.abs_err_est() < 1e-12);
  }
}

TEST_CASE("aux stored derivative identities are exact") {
  for (double x : {0.3, 2.0, 7.5}) {
    const auto v = aux(x);
    CHECK(v.f_prime() == -v.g());
    CHECK(v.f_double_prime() == 1.0 / x - v.f());
    CHECK(v.g_prime() == v.f() - 1.0 / x);
  }
}

TEST_CASE("aux derivative identities by central differences") {
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
    CAPTURE(x);
    const double h = 1e-5 * x;
    const auto v = aux(x);
    const double fd_f = (aux(x + h).f() - aux(x - h).f()) / (2 * h);
    const double fd_g = (aux(x + h).g() - aux(x - h).g()) / (2 * h);
    CHECK(std::abs(fd_f + v.g()) <= std::max(1e-8, 1e-6 * std::abs(v.g())));
    CHECK(std::abs(fd_g - (v.f() - 1.0 / x)) <= std::max(1e-8, 1e-6 * std::abs(v.f() - 1.0 / x)));
  }
}

TEST_CASE("aux matches integral representations on [1e-2, 1e2]") {
  for (int i = 0; i <= 40; ++i) {
    const double x = std::pow(10.0, -2.0 + 4.0 * i / 40.0);
    CAPTURE(x);
    const auto v = aux(x);
    CHECK(std::abs(v.f() - oracle::aux_integral_rep(x, oracle::AuxKind::f).real()) <= 1e-10);
    CHECK(std::abs(v.g() - oracle::aux_integral_rep(x, oracle::AuxKind::g).real()) <= 1e-10);
  }
}

TEST_CASE("aux limits and positivity") {
  CHECK(std::abs(aux(1e-10).f() - kPi / 2) < 1e-8);
  const auto v50 = aux(50.0);
  CHECK(rel_close(v50.f(), 1.0 / 50.0, 0.05));
  CHECK(rel_close(v50.g(), 1.0 / 2500.0, 0.10));
  double prev = kPi / 2;
  for (int i = 0; i <= 200; ++i) {
    const double x = std::pow(10.0, -3.0 + 7.0 * i / 200.0);
    const auto v = aux(x);
    CHECK(v.f() > 0.0);
    CHECK(v.f() < kPi / 2);
    CHECK(v.g() > 0.0);
    CHECK(v.f() < prev);
    prev = v.f();
  }
}

TEST_CASE("trigonometric reconstruction of Si and Ci") {
  for (double x : {0.2, 1.0, 3.9, 4.1, 12.0, 300.0}) {
    CAPTURE(x);
    const auto v = aux(x);
    const double s = std::sin(x);
    const double c = std::cos(x);
    CHECK(std::abs(specfun::ci(x) - (v.f() * s - v.g() * c)) <= 1e-12);
    CHECK(std::abs(kPi / 2 - specfun::si(x) - (v.f() * c + v.g() * s)) <= 1e-12);
  }
}

TEST_CASE("series and continued-fraction branches agree at the seam") {
  CHECK(specfun::branch_for(3.999) == specfun::Branch::series);
  CHECK(specfun::branch_for(4.0) == specfun::Branch::continued_fraction);
  for (double x : {3.5, 4.0, 4.5}) {
    CAPTURE(x);
    const auto s = specfun::aux_with_branch(x, specfun::Branch::series);
    const auto cf = specfun::aux_with_branch(x, specfun::Branch::continued_fraction);
    CHECK(std::abs(s.f() - cf.f()) <= 1e-12);
    CHECK(std::abs(s.g() - cf.g()) <= 1e-12);
  }
  const auto below = specfun::sici(std::nextafter(4.0, 0.0));
  const auto above = specfun::sici(4.0);
  CHECK(std::abs(below.si - above.si) <= 1e-12);
  CHECK(std::abs(below.ci - above.ci) <= 1e-12);
}
