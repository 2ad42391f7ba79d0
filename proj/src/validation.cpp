#include "vacent/validation.hpp"

#include "vacent/casimir.hpp"
#include "vacent/entanglement.hpp"
#include "vacent/kernel.hpp"
#include "vacent/oracle.hpp"
#include "vacent/specfun.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace vacent::validation {

namespace {

constexpr double kPi = std::numbers::pi;

struct Geometry {
  const char* name;
  Vec3 n_a;
  Vec3 n_b;
};

std::vector<Geometry> geometries() {
  const double s = std::sqrt(0.5);
  return {{"transverse", Vec3::UnitX(), Vec3::UnitX()},
          {"longitudinal", Vec3::UnitZ(), Vec3::UnitZ()},
          {"mixed", Vec3(s, 0.0, s), Vec3(0.0, s, s)},
          {"orthogonal", Vec3::UnitX(), Vec3::UnitY()}};
}

std::string label(const std::string& pair, double x, const char* extra = nullptr) {
  std::ostringstream os;
  os << pair << " x=" << x;
  if (extra) os << " " << extra;
  return os.str();
}

class Suite {
 public:
  void relative(std::string name, double observed, double expected, double tol) {
    const double scale = std::abs(expected);
    const bool ok = std::isfinite(observed) && std::abs(observed - expected) <= tol * scale;
    checks_.push_back({std::move(name), observed, expected, tol, ok});
  }
  void absolute(std::string name, double observed, double expected, double tol) {
    const bool ok = std::isfinite(observed) && std::abs(observed - expected) <= tol;
    checks_.push_back({std::move(name), observed, expected, tol, ok});
  }
  void truth(std::string name, bool ok, double observed = 0.0) {
    checks_.push_back({std::move(name), observed, 0.0, 0.0, ok});
  }
  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      checks_.push_back({name + " [" + e.what() + "]", 0.0, 0.0, 0.0, false});
    }
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

void aux_pairs(Suite& s, const std::vector<double>& grid) {
  for (double x : grid) {
    s.guarded(label("specfun/aux f", x), [&] {
      const auto a = specfun::aux(x);
      s.absolute(label("specfun/aux f", x), a.f(),
                 oracle::aux_integral_rep(x, oracle::AuxKind::f).real(), 1e-10);
      s.absolute(label("specfun/aux g", x), a.g(),
                 oracle::aux_integral_rep(x, oracle::AuxKind::g).real(), 1e-10);
    });
  }
}

void kernel_pairs(Suite& s, const std::vector<double>& grid, const std::vector<Geometry>& geos,
                  double offset) {
  const Vec3 r = Vec3::UnitZ();
  for (const auto& g : geos) {
    for (double x : grid) {
      const auto name = label("kernel/modesum", x, g.name);
      s.guarded(name, [&] {
        const double ar = g.n_a.dot(r) * g.n_b.dot(r);
        const double closed =
            (g.n_a.dot(g.n_b) - ar) * (kernel::tau_trans(x) + offset) + ar * kernel::tau_long(x);
        const double brute = oracle::modesum_first_order(x, g.n_a, g.n_b, r).real();
        if (closed == 0.0 && offset == 0.0) {
          s.absolute(name, brute, 0.0, 1e-9);
        } else {
          s.relative(name, brute, closed / kPi, 1e-6);
        }
      });
    }
  }
}

void asymptote_pairs(Suite& s) {
  const double mu = 1e-6;
  const Vec3 r = Vec3::UnitZ();
  for (double x : {0.005, 0.01}) {
    const PairConfiguration cfg(x, Vec3::UnitX(), Vec3::UnitX(), r, mu);
    s.relative(label("concurrence full/near", x), concurrence_full(cfg).raw,
               concurrence_near(cfg).raw, 1e-2);
  }
  for (double x : {100.0, 200.0}) {
    for (const auto& g : geometries()) {
      if (g.n_a.dot(g.n_b) - 2.0 * g.n_a.dot(r) * g.n_b.dot(r) == 0.0) continue;
      const PairConfiguration cfg(x, g.n_a, g.n_b, r, mu);
      s.relative(label("concurrence full/far", x, g.name), concurrence_full(cfg).raw,
                 concurrence_far(cfg).raw, 1e-2);
    }
  }
}

CMat4 random_x_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 4> p{};
  double sum = 0.0;
  for (auto& v : p) sum += (v = u(rng) + 1e-3);
  for (auto& v : p) v /= sum;
  const double ph1 = 2.0 * kPi * u(rng);
  const double ph2 = 2.0 * kPi * u(rng);
  const std::complex<double> r14 = std::polar(u(rng) * std::sqrt(p[0] * p[3]), ph1);
  const std::complex<double> r23 = std::polar(u(rng) * std::sqrt(p[1] * p[2]), ph2);
  CMat4 m = CMat4::Zero();
  for (int i = 0; i < 4; ++i) m(i, i) = p[i];
  m(0, 3) = r14;
  m(3, 0) = std::conj(r14);
  m(1, 2) = r23;
  m(2, 1) = std::conj(r23);
  return m;
}

void entanglement_pairs(Suite& s, int states) {
  std::mt19937_64 rng(20240611);
  double worst = 0.0;
  for (int i = 0; i < states; ++i) {
    const TwoQubitState st(random_x_state(rng));
    worst = std::max(worst, std::abs(wootters_concurrence(st, WoottersPath::eigenvalues) -
                                     x_state_concurrence(st)));
  }
  s.absolute("wootters eigenvalues/x-state worst of " + std::to_string(states), worst, 0.0, 1e-10);
  s.absolute("eof endpoint c=0", entanglement_of_formation(0.0), 0.0, 0.0);
  s.absolute("eof endpoint c=1", entanglement_of_formation(1.0), 1.0, 0.0);
  bool monotone = true;
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double e = entanglement_of_formation(i / 1000.0);
    monotone = monotone && e > prev;
    prev = e;
  }
  s.truth("eof monotone on 1001 points", monotone);
}

void triangle_pairs(Suite& s, const std::vector<double>& xs) {
  const auto geos = geometries();
  for (double x : xs) {
    for (std::size_t gi = 0; gi < 3; ++gi) {
      const auto& g = geos[gi];
      const double mu = 1e-3 * std::min(1.0, x * x * x);
      const PairConfiguration cfg(x, g.n_a, g.n_b, Vec3::UnitZ(), mu);
      const auto name = label("consistency triangle", x, g.name);
      s.guarded(name, [&] {
        const double c_ee = amplitude_c_ee(cfg);
        const double direct = 2.0 * std::abs(c_ee);
        const auto rho = effective_density_matrix(cfg);
        // Relative c_ee^2 plus a rounding floor for the eigenvalue path.
        const double tol = c_ee * c_ee + 1e-12;
        const double wootters = wootters_concurrence(rho);
        const double palma = palma_concurrence(spin_correlators(rho));
        s.relative(name + " wootters/direct", wootters, direct, tol);
        s.relative(name + " palma/direct", palma, direct, tol);
        s.relative(name + " wootters/palma", wootters, palma, tol);
      });
    }
  }
}

void c2_pairs(Suite& s, const std::vector<double>& xs, const std::vector<double>& cutoffs) {
  for (double x : xs) {
    for (double cutoff : cutoffs) {
      std::ostringstream os;
      os << "c2 negative x=" << x << " cutoff=" << cutoff;
      s.guarded(os.str(), [&] {
        const PairConfiguration cfg(x, Vec3::UnitX(), Vec3::UnitX(), Vec3::UnitZ(), 1e-4);
        const auto res = c1_c2_from_amplitudes(cfg, cutoff);
        s.truth(os.str(), res.c2 < 0.0, res.c2);
      });
    }
  }
}

void second_order_pairs(Suite& s, const std::vector<double>& xs) {
  const Vec3 n = Vec3::UnitX();
  const Vec3 r = Vec3::UnitZ();
  const auto t = [&](double x) { return kernel::contract(kernel::dipole_tensor(x, r), n, n); };
  for (double x : xs) {
    const auto name = label("second-order modesum/derivative", x);
    s.guarded(name, [&] {
      const double h = 1e-4 * x;
      const double dt = (t(x + h) - t(x - h)) / (2.0 * h);
      const double expected = (3.0 * t(x) + x * dt) / kPi;
      s.relative(name, oracle::modesum_second_order(x, n, n, r).real(), expected, 1e-5);
    });
  }
}

void casimir_pairs(Suite& s, const std::vector<double>& pv_grid) {
  const Vec3 r = Vec3::UnitZ();
  for (double x : {0.005, 0.01}) {
    const PairConfiguration cfg(x, Vec3::UnitX(), Vec3::UnitX(), r, 1e-3);
    s.relative(label("casimir contour/london", x), casimir::wcp_reduced(cfg).energy,
               casimir::vdw_near_reduced(cfg).energy, 1e-2);
  }
  const auto geos = geometries();
  for (double x : pv_grid) {
    for (std::size_t gi = 0; gi < 3; ++gi) {
      const auto name = label("casimir contour/principal-value", x, geos[gi].name);
      s.guarded(name, [&] {
        const PairConfiguration cfg(x, geos[gi].n_a, geos[gi].n_b, r, 1e-3);
        s.relative(name, casimir::wcp_principal_value_reduced(cfg).energy,
                   casimir::wcp_reduced(cfg).energy, 1e-6);
      });
    }
  }
}

}  // namespace

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::vector<Check> Report::failures() const {
  std::vector<Check> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c);
  return out;
}

Report run_validation(Level level, const Options& options) {
  Suite s;
  const bool full = level == Level::full;
  const std::vector<double> grid = {0.01, 0.05, 0.1, 0.5, 1, 2, 5, 10, 30, 100};
  const std::vector<double> fast_grid = {0.05, 1, 10};

  aux_pairs(s, full ? grid : std::vector<double>{0.01, 1, 4, 100});
  if (full) {
    kernel_pairs(s, grid, geometries(), options.tau_trans_offset);
  } else {
    auto geos = geometries();
    geos.pop_back();
    kernel_pairs(s, fast_grid, geos, options.tau_trans_offset);
  }
  asymptote_pairs(s);
  entanglement_pairs(s, full ? 1000 : 100);
  triangle_pairs(s, full ? std::vector<double>{0.05, 0.1, 0.5, 1, 5, 10, 50}
                         : std::vector<double>{0.1, 1});
  c2_pairs(s, full ? std::vector<double>{0.1, 1, 10} : std::vector<double>{1},
           full ? std::vector<double>{10, 100, 1000} : std::vector<double>{10});
  second_order_pairs(s, full ? std::vector<double>{0.5, 1, 2, 5} : std::vector<double>{1});
  casimir_pairs(s, full ? std::vector<double>{0.5, 1, 2, 5} : std::vector<double>{1});
  return Report{s.take()};
}

void print_report(std::ostream& os, const Report& report) {
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    passed += c.passed;
    os << (c.passed ? "PASS " : "FAIL ") << c.name << std::setprecision(10)
       << "  observed=" << c.observed << " expected=" << c.expected << " tol=" << c.tolerance
       << "\n";
  }
  os << passed << "/" << report.checks.size() << " checks passed\n";
}

}  // namespace vacent::validation
