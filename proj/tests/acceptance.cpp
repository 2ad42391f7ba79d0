// Acceptance checks, one line per criterion.
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only (exit 1 on failure)

#include "vacent/casimir.hpp"
#include "vacent/cli.hpp"
#include "vacent/entanglement.hpp"
#include "vacent/kernel.hpp"
#include "vacent/model.hpp"
#include "vacent/oracle.hpp"
#include "vacent/specfun.hpp"
#include "vacent/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace vacent;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return out;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Geometry {
  const char* name;
  Vec3 n_a, n_b, r_hat;
};

std::vector<Geometry> geometries() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{"transverse-parallel", Vec3(1, 0, 0), Vec3(1, 0, 0), Vec3(0, 0, 1)},
          {"longitudinal", Vec3(0, 0, 1), Vec3(0, 0, 1), Vec3(0, 0, 1)},
          {"mixed", Vec3(s, 0, s), Vec3(0, s, s), Vec3(0, 0, 1)},
          {"orthogonal-zero", Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)}};
}

PairConfiguration transverse(double x, double mu) {
  return {x, Vec3::UnitX(), Vec3::UnitX(), Vec3::UnitZ(), mu};
}

Outcome mode_sum_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  const double mu = 1e-6;
  double worst = 0.0, worst_zero = 0.0;
  bool ok = true;
  for (const auto& g : geometries()) {
    for (double x : log_grid(0.01, 100.0, 10)) {
      const PairConfiguration cfg(x, g.n_a, g.n_b, g.r_hat, mu);
      const double closed = concurrence_full(cfg).raw;
      const double brute = 2.0 * mu * std::abs(oracle::modesum_first_order(x, g.n_a, g.n_b, g.r_hat).real());
      if (closed == 0.0) {
        worst_zero = std::max(worst_zero, brute);
        ok = ok && brute <= 1e-12 * mu;
      } else {
        worst = std::max(worst, rel_err(brute, closed));
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && worst <= 1e-6 && secs < 60.0;
  return {ok, fmt("max rel err %.3e (tol 1e-6), orthogonal |C| %.1e, %.2f s (limit 60 s)", worst,
                  worst_zero, secs)};
}

// Shared by the near and far laws.
Outcome zone_law(double lo_match, double hi_match, double fit_lo, double fit_hi, double slope_target,
                 bool near) {
  const double mu = 1e-9;
  double worst = 0.0;
  for (double x : log_grid(lo_match, hi_match, 12)) {
    const auto cfg = transverse(x, mu);
    const double full = concurrence_full(cfg).raw;
    const double law = near ? concurrence_near(cfg).raw : concurrence_far(cfg).raw;
    worst = std::max(worst, rel_err(full, law));
  }
  std::vector<std::pair<double, double>> curve;
  for (double x : log_grid(fit_lo, fit_hi, 15)) curve.emplace_back(x, concurrence_full(transverse(x, mu)).raw);
  const auto fit = casimir::fit_powerlaw(curve, fit_lo, fit_hi);
  const bool ok = worst <= 0.01 && std::abs(fit.slope - slope_target) <= 0.1;
  return {ok, fmt("max rel dev %.3e (tol 1e-2), slope %.4f (target %.1f +- 0.1)", worst, fit.slope,
                  slope_target)};
}

Outcome near_law() { return zone_law(0.001, 0.02, 0.005, 0.02, -3.0, true); }
Outcome far_law() { return zone_law(100.0, 1000.0, 50.0, 200.0, -4.0, false); }

Outcome auxiliary_functions() {
  double worst_rep = 0.0, worst_fd = 0.0;
  for (double x : log_grid(0.01, 100.0, 41)) {
    const auto v = specfun::aux(x);
    worst_rep = std::max(worst_rep, std::abs(v.f() - oracle::aux_integral_rep(x, oracle::AuxKind::f).real()));
    worst_rep = std::max(worst_rep, std::abs(v.g() - oracle::aux_integral_rep(x, oracle::AuxKind::g).real()));
    const double h = 1e-4 * x;
    const auto up = specfun::aux(x + h), dn = specfun::aux(x - h);
    const double df = (up.f() - dn.f()) / (2 * h);
    const double dg = (up.g() - dn.g()) / (2 * h);
    worst_fd = std::max(worst_fd, rel_err(df, -v.g()));
    worst_fd = std::max(worst_fd, rel_err(dg, v.f() - 1.0 / x));
  }
  const bool ok = worst_rep <= 1e-10 && worst_fd <= 1e-6;
  return {ok, fmt("max |aux - integral| %.3e (tol 1e-10), max FD rel err %.3e (tol 1e-6)", worst_rep,
                  worst_fd)};
}

Outcome casimir_scaling() {
  const auto curve = [](double lo, double hi) {
    std::vector<std::pair<double, double>> c;
    for (double x : log_grid(lo, hi, 15)) c.emplace_back(x, casimir::wcp_reduced(transverse(x, 1.0)).energy);
    return casimir::fit_powerlaw(c, lo, hi);
  };
  const auto near = curve(0.005, 0.02);
  const auto far = curve(50.0, 200.0);

  // London form for the hydrogen pair in Hartree.
  const auto a = HydrogenPreset::atom(Vec3::UnitX());
  const auto b = HydrogenPreset::atom(Vec3::UnitX());
  const double d = HydrogenPreset::dipole_moment();
  double worst = 0.0;
  for (double x : {0.005, 0.01, 0.02}) {
    const double r = x / a.k0();
    const PairConfiguration cfg = reduce(a, b, Vec3(0, 0, r));
    const double w = casimir::wcp(cfg, a, b).energy;
    const double kappa = 1.0;  // transverse parallel
    const double london = -std::pow(d * d * kappa, 2) / (2.0 * HydrogenPreset::omega0 * std::pow(r, 6));
    worst = std::max(worst, rel_err(w, london));
  }
  const bool ok = std::abs(near.slope + 6.0) <= 0.1 && std::abs(far.slope + 7.0) <= 0.1 && worst <= 0.01;
  return {ok, fmt("near slope %.4f, far slope %.4f (tol 0.1), London rel dev %.3e (tol 1e-2)", near.slope,
                  far.slope, worst)};
}

Outcome entanglement_algebra() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double p[4];
    double sum = 0.0;
    for (double& v : p) sum += (v = u(rng));
    for (double& v : p) v /= sum;
    CMat4 m = CMat4::Zero();
    for (int k = 0; k < 4; ++k) m(k, k) = p[k];
    const std::complex<double> z14 = std::polar(u(rng) * std::sqrt(p[0] * p[3]), 2 * std::numbers::pi * u(rng));
    const std::complex<double> z23 = std::polar(u(rng) * std::sqrt(p[1] * p[2]), 2 * std::numbers::pi * u(rng));
    m(0, 3) = z14;
    m(3, 0) = std::conj(z14);
    m(1, 2) = z23;
    m(2, 1) = std::conj(z23);
    const TwoQubitState s(m);
    worst = std::max(worst, std::abs(wootters_concurrence(s, WoottersPath::eigenvalues) -
                                     x_state_concurrence(s)));
  }
  const bool ends = entanglement_of_formation(0.0) == 0.0 && entanglement_of_formation(1.0) == 1.0;
  bool monotone = true;
  double prev = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const double e = entanglement_of_formation(i / 999.0);
    monotone = monotone && e >= prev;
    prev = e;
  }
  return {worst <= 1e-10 && ends && monotone,
          fmt("max |eigen - closed| %.3e (tol 1e-10), E_F endpoints %s, monotone %s", worst,
              ends ? "exact" : "WRONG", monotone ? "yes" : "NO")};
}

Outcome consistency_triangle() {
  // The exact gap between wootters and 2|c| is c^2/(1+c^2), so the budget
  // |c|^2 leaves only c^4 headroom; 1e-12 absorbs rounding when c is tiny.
  const auto budget = [](double c) { return c * c + 1e-12; };
  double worst = 0.0;  // in units of the budget
  int count = 0;
  for (const auto& g : geometries()) {
    if (std::string(g.name) == "orthogonal-zero") continue;
    for (double x : {0.2, 0.5, 1.0, 3.0, 10.0}) {
      const PairConfiguration cfg(x, g.n_a, g.n_b, g.r_hat, 1e-3 * std::min(1.0, x * x * x));
      const double c = amplitude_c_ee(cfg);
      const auto rho = effective_density_matrix(cfg);
      const double w = wootters_concurrence(rho);
      const double p = palma_concurrence(spin_correlators(rho));
      const double t = 2.0 * std::abs(c);
      const double dev = std::max({rel_err(w, p), rel_err(w, t), rel_err(p, t)});
      worst = std::max(worst, dev / budget(c));
      ++count;
    }
  }
  // Pad to 20 with a further transverse sweep.
  for (double x : log_grid(0.3, 30.0, 20 - count)) {
    const auto cfg = transverse(x, 1e-3 * std::min(1.0, x * x * x));
    const double c = amplitude_c_ee(cfg);
    const auto rho = effective_density_matrix(cfg);
    const double w = wootters_concurrence(rho);
    const double p = palma_concurrence(spin_correlators(rho));
    const double t = 2.0 * std::abs(c);
    worst = std::max(worst, std::max({rel_err(w, p), rel_err(w, t), rel_err(p, t)}) / budget(c));
    ++count;
  }
  return {worst <= 1.0 && count == 20,
          fmt("max pairwise rel dev / (|c_ee|^2 + 1e-12) = %.3f over %d configurations (limit 1)", worst, count)};
}

Outcome c2_negative() {
  double largest = -1e300;
  for (double x : {0.1, 1.0, 10.0})
    for (double cutoff : {10.0, 100.0, 1000.0})
      for (auto local : {LocalTerms::regularized, LocalTerms::dropped}) {
        const auto r = c1_c2_from_amplitudes(transverse(x, 1e-4), cutoff, local);
        largest = std::max(largest, r.c2);
      }
  return {largest < 0.0, fmt("largest c2 on the grid %.6e (must be < 0)", largest)};
}

Outcome hydrogen_estimates() {
  const auto a = HydrogenPreset::atom(Vec3::UnitX());
  const auto b = HydrogenPreset::atom(Vec3::UnitX());
  const double alpha = atomic_units().fine_structure;
  const double r_near = 10.0;
  const double c_near = concurrence_full(reduce(a, b, Vec3(0, 0, r_near))).raw;
  const double near_ratio = c_near / std::pow(r_near, -3);
  const double r_far = 100.0 / a.k0();
  const double c_far = concurrence_full(reduce(a, b, Vec3(0, 0, r_far))).raw;
  const double far_ratio = c_far / (alpha * std::pow(r_far, -4));
  const bool near_ok = near_ratio >= 0.3 && near_ratio <= 3.0;
  const bool far_ok = far_ratio >= 0.3 && far_ratio <= 3.0;
  return {near_ok && far_ok,
          fmt("near R=%g a0: C/(R)^-3 = %.4g [%s]; far R=%.4g a0: C/(alpha R^-4) = %.4g [%s] (band [0.3, 3])",
              r_near, near_ratio, near_ok ? "ok" : "out", r_far, far_ratio, far_ok ? "ok" : "out")};
}

int run(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run_cli(args, o, e);
  if (out) *out = o.str();
  return code;
}

Outcome cli_contract() {
  ::unsetenv(cli::kConfigEnv);
  const int validate = run({"validate", "--level", "fast"});

  std::string csv_text;
  const int sweep = run({"sweep", "--dipole-a", "1,0,1", "--dipole-b", "0,1,1", "--axis", "0.3,0.4,1.2",
                         "--mu", "3.3e-4", "--xmin", "0.013", "--xmax", "170", "--points", "17"},
                        &csv_text);
  bool exact = sweep == 0;
  std::size_t rows = 0;
  if (exact) {
    std::istringstream in(csv_text);
    const auto csv = parse_csv(in);
    const auto ctx = context_from_metadata(csv.metadata);
    std::ostringstream again;
    std::vector<SweepRow> rebuilt;
    for (std::size_t i = 0; i < csv.rows.size(); ++i) rebuilt.push_back(evaluate_row(ctx, std::stod(csv.cell(i, "x"))));
    write_csv(again, ctx, rebuilt);
    exact = again.str() == csv_text;
    rows = csv.rows.size();
  }

  const int bad_flag = run({"point", "--mu", "1e-3", "--x", "1", "--no-such-flag"});
  const int bad_value = run({"point", "--mu", "1e-3", "--x", "-1"});
  const int bad_units = run({"sweep", "--mu", "1e-3", "--xmin", "1", "--xmax", "2", "--points", "3", "--scale", "cubic"});
  const bool ok = validate == 0 && exact && rows == 17 && bad_flag == 2 && bad_value == 2 && bad_units == 2;
  return {ok, fmt("validate fast exit %d; round trip %s (%zu rows); invalid flag/value/choice exit %d/%d/%d", validate,
                  exact ? "bit-exact" : "MISMATCH", rows, bad_flag, bad_value, bad_units)};
}

const std::vector<std::pair<const char*, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<const char*, std::function<Outcome()>>> all = {
      {"mode-sum identity", mode_sum_identity},
      {"near-zone law", near_law},
      {"far-zone law", far_law},
      {"auxiliary functions", auxiliary_functions},
      {"Casimir-Polder scaling", casimir_scaling},
      {"entanglement algebra", entanglement_algebra},
      {"consistency triangle", consistency_triangle},
      {"C2 negativity", c2_negative},
      {"hydrogen estimates", hydrogen_estimates},
      {"CLI contract", cli_contract},
  };
  return all;
}

bool run_one(int n) {
  const auto& [name, fn] = criteria().at(n - 1);
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& ex) {
    o = {false, std::string("exception: ") + ex.what()};
  }
  std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << n << " (" << name << "): " << o.detail << '\n';
  return o.passed;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() == 2 && args[0] == "--criterion") {
    const int n = std::atoi(args[1].c_str());
    if (n < 1 || n > static_cast<int>(criteria().size())) {
      std::cerr << "criterion must be 1.." << criteria().size() << '\n';
      return 2;
    }
    return run_one(n) ? 0 : 1;
  }
  if (!args.empty()) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 2;
  }
  bool all = true;
  for (int n = 1; n <= static_cast<int>(criteria().size()); ++n) all = run_one(n) && all;
  return all ? 0 : 1;
}
