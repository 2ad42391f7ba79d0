#include <doctest.h>

#include "vacent/entanglement.hpp"
#include "vacent/errors.hpp"
#include "vacent/model.hpp"

#include <cmath>
#include <random>

using namespace vacent;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("atomic-unit constants are consistent") {
  const auto& au = atomic_units();
  CHECK(au.hbar > 0.0);
  CHECK(au.c > 0.0);
  CHECK(au.elementary_charge > 0.0);
  CHECK(au.fine_structure > 0.0);
  CHECK(au.bohr_radius > 0.0);
  CHECK(rel_close(au.fine_structure,
                  au.elementary_charge * au.elementary_charge / (au.hbar * au.c), 1e-15));
  CHECK(rel_close(1.0 / au.fine_structure, 137.035999084, 1e-12));
}

TEST_CASE("hydrogen preset reduction") {
  // 1s-2p(m=0) radial-angular integral: 2^7 sqrt(2) / 3^5.
  CHECK(rel_close(HydrogenPreset::dipole_moment(), 128.0 * std::sqrt(2.0) / 243.0, 1e-15));
  CHECK(rel_close(HydrogenPreset::dipole_moment(), 0.7449355390278031, 1e-15));
  const auto a = HydrogenPreset::atom(Vec3::UnitX());
  const auto b = HydrogenPreset::atom(Vec3::UnitX());
  CHECK(rel_close(a.k0(), 0.375 / 137.035999084, 1e-14));
  const auto cfg = reduce(a, b, Vec3(0.0, 0.0, 10.0));
  CHECK(rel_close(cfg.x(), 0.0273650721348, 1e-11));
  CHECK(cfg.r_hat() == Vec3::UnitZ());
  CHECK(cfg.n_a() == Vec3::UnitX());
  CHECK(cfg.n_b() == Vec3::UnitX());
  const double d = HydrogenPreset::dipole_moment();
  CHECK(rel_close(cfg.mu(), d * d * std::pow(a.k0(), 3) / 0.375, 1e-14));
}

TEST_CASE("reduce edge cases") {
  const TwoLevelAtom zero_a(0.5, Vec3::Zero());
  const TwoLevelAtom zero_b(0.5, Vec3::Zero());
  CHECK(reduce(zero_a, zero_b, Vec3(1.0, 2.0, 3.0)).mu() == 0.0);

  const TwoLevelAtom a(0.5, Vec3(1.0, 0.0, 0.0));
  const TwoLevelAtom b(0.5 * (1.0 + 1e-7), Vec3(1.0, 0.0, 0.0));
  CHECK_THROWS_AS(reduce(a, b, Vec3::UnitZ()), FrequencyMismatchError);
  const TwoLevelAtom b_close(0.5 * (1.0 + 1e-11), Vec3(1.0, 0.0, 0.0));
  CHECK_NOTHROW(reduce(a, b_close, Vec3::UnitZ()));
  CHECK_THROWS_AS(reduce(a, a, Vec3::Zero()), DomainError);
  CHECK_THROWS_AS(TwoLevelAtom(0.0, Vec3::UnitX()), DomainError);
  CHECK_THROWS_AS(TwoLevelAtom(-1.0, Vec3::UnitX()), DomainError);
  CHECK_THROWS_AS(TwoLevelAtom(1.0, Vec3(NAN, 0.0, 0.0)), DomainError);
}

TEST_CASE("pair configuration invariants") {
  CHECK_THROWS_AS(PairConfiguration(0.0, Vec3::UnitX(), Vec3::UnitX(), Vec3::UnitZ(), 0.1),
                  DomainError);
  CHECK_THROWS_AS(PairConfiguration(1.0, Vec3::UnitX(), Vec3::UnitX(), Vec3::UnitZ(), -0.1),
                  DomainError);
  CHECK_THROWS_AS(PairConfiguration(1.0, Vec3(1.0, 1e-5, 0.0), Vec3::UnitX(), Vec3::UnitZ(), 0.1),
                  DomainError);
  CHECK_THROWS_AS(PairConfiguration::normalized(1.0, Vec3::Zero(), Vec3::UnitX(), Vec3::UnitZ(), 0.1),
                  DomainError);
  const auto cfg = PairConfiguration::normalized(2.0, Vec3(3, 0, 0), Vec3(0, 2, 0), Vec3(0, 0, 5), 0.1);
  CHECK(cfg.n_a() == Vec3::UnitX());
  CHECK(cfg.with_x(3.0).x() == 3.0);
  CHECK(cfg.with_mu(0.5).mu() == 0.5);
}

TEST_CASE("reduce is scale consistent") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const Vec3 da(n(rng), n(rng), n(rng));
    const Vec3 db(n(rng), n(rng), n(rng));
    const Vec3 sep(n(rng), n(rng), n(rng));
    const double s = 0.1 + i;
    const auto c1 = reduce(TwoLevelAtom(0.3, da), TwoLevelAtom(0.3, db), sep);
    const auto c2 = reduce(TwoLevelAtom(0.3, s * da), TwoLevelAtom(0.3, s * db), sep);
    CHECK(rel_close(c2.mu(), s * s * c1.mu(), 1e-14));
    CHECK(c2.x() == c1.x());
    CHECK((c2.n_a() - c1.n_a()).norm() < 1e-15);
    CHECK((c2.n_b() - c1.n_b()).norm() < 1e-15);
    CHECK(c2.r_hat() == c1.r_hat());
  }
}

TEST_CASE("reduced and dimensional concurrence agree") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double w = 0.1 + 0.05 * i;
    const TwoLevelAtom a(w, Vec3(n(rng), n(rng), n(rng)));
    const TwoLevelAtom b(w, Vec3(n(rng), n(rng), n(rng)));
    const Vec3 sep = Vec3(n(rng), n(rng), n(rng)) * std::pow(10.0, -1.0 + 0.1 * i) /
                     a.k0();
    const double dim = concurrence_dimensional(a, b, sep);
    const double red = concurrence_full(reduce(a, b, sep)).raw;
    CAPTURE(i);
    CHECK(rel_close(red, dim, 1e-12));
  }
}

TEST_CASE("perturbative validity flags") {
  const auto ok = perturbative_validity(
      PairConfiguration(1.0, Vec3::UnitX(), Vec3::UnitX(), Vec3::UnitZ(), 1e-4));
  CHECK(ok.flag == Validity::ok);
  const auto bad = perturbative_validity(
      PairConfiguration(0.01, Vec3::UnitX(), Vec3::UnitX(), Vec3::UnitZ(), 1.0));
  CHECK(bad.flag == Validity::invalid);
  CHECK(bad.margin > 1e5);
  const auto zero = perturbative_validity(
      PairConfiguration(0.01, Vec3::UnitX(), Vec3::UnitX(), Vec3::UnitZ(), 0.0));
  CHECK(zero.flag == Validity::ok);
  CHECK(zero.margin == 0.0);
  // margin 0.5 -> WARN
  const double mu_warn = 0.5 / concurrence_full(PairConfiguration(1.0, Vec3::UnitX(), Vec3::UnitX(),
                                                                  Vec3::UnitZ(), 1.0)).raw;
  CHECK(perturbative_validity(PairConfiguration(1.0, Vec3::UnitX(), Vec3::UnitX(), Vec3::UnitZ(),
                                                mu_warn))
            .flag == Validity::warn);
  CHECK(to_string(Validity::ok) == "OK");
  CHECK(to_string(Validity::warn) == "WARN");
  CHECK(to_string(Validity::invalid) == "INVALID");
}
