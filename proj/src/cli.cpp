#include "vacent/cli.hpp"

#include "vacent/errors.hpp"
#include "vacent/model.hpp"
#include "vacent/sweep.hpp"
#include "vacent/validation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace vacent::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigFlags {
  std::optional<double> x;
  std::optional<double> r;
  std::optional<double> mu;
  std::optional<double> omega0;
  std::string units = "atomic";
  std::string preset;
  std::string dipole_a = "1,0,0";
  std::string dipole_b = "1,0,0";
  std::string axis = "0,0,1";
  bool no_wcp = false;
  std::string columns;
};

struct SweepFlags {
  std::optional<double> xmin, xmax, rmin, rmax;
  int points = 0;
  std::string scale = "log";
  std::string output = "-";
  unsigned threads = 1;
};

Vec3 parse_vec(const std::string& text, const char* flag) {
  std::stringstream ss(text);
  std::string part;
  std::vector<double> v;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": cannot parse '" + text + "' as x,y,z");
    }
  }
  if (v.size() != 3) throw UsageError(std::string(flag) + ": expected three components x,y,z");
  return {v[0], v[1], v[2]};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Flat key=value file; keys are long flag names without the dashes.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

bool has_flag(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

std::optional<std::string> config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a path");
      return args[i + 1];
    }
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  if (const char* env = std::getenv(kConfigEnv); env && *env) return std::string(env);
  return std::nullopt;
}

// Config entries become flags placed right after the subcommand name, unless
// the same flag was given on the command line.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  const auto path = config_path(args);
  if (!path || args.empty()) return args;
  std::vector<std::string> merged = {args.front()};
  for (const auto& [key, value] : read_config(*path)) {
    if (key == "config") continue;
    if (has_flag(args, key)) continue;
    merged.push_back("--" + key + "=" + value);
  }
  merged.insert(merged.end(), args.begin() + 1, args.end());
  return merged;
}

void add_config_flags(CLI::App* app, ConfigFlags& c) {
  app->add_option("--x", c.x, "Reduced separation x = k0 R");
  app->add_option("--r", c.r, "Separation R (needs --preset or --omega0)");
  app->add_option("--units", c.units, "Unit of --r: atomic (Bohr) or si (metres)")
      ->check(CLI::IsMember({"atomic", "si"}));
  app->add_option("--preset", c.preset, "Atom preset")->check(CLI::IsMember({"hydrogen-1s2p"}));
  app->add_option("--omega0", c.omega0, "Transition frequency in Hartree (custom atom)");
  app->add_option("--dipole-a", c.dipole_a,
                  "Dipole of atom A as x,y,z (orientation only in reduced or preset mode)");
  app->add_option("--dipole-b", c.dipole_b, "Dipole of atom B as x,y,z");
  app->add_option("--axis", c.axis, "Direction from B to A as x,y,z");
  app->add_option("--mu", c.mu, "Coupling mu = |d_A||d_B| k0^3 / (hbar omega0) (reduced mode)");
  app->add_flag("--no-wcp", c.no_wcp, "Skip the Casimir-Polder column");
  app->add_option("--columns", c.columns, "Comma-separated subset of output columns");
  app->add_option("--config", "Flat key=value file of defaults (env VACENT_CONFIG)");
}

struct Resolved {
  EvalContext ctx;
  std::optional<double> k0;  // set in dimensional mode
};

Resolved resolve(const ConfigFlags& c) {
  const bool dimensional = !c.preset.empty() || c.omega0.has_value();
  if (!c.preset.empty() && c.omega0) throw UsageError("--preset and --omega0 are exclusive");
  const Vec3 da = parse_vec(c.dipole_a, "--dipole-a");
  const Vec3 db = parse_vec(c.dipole_b, "--dipole-b");
  const Vec3 axis = parse_vec(c.axis, "--axis");
  if (axis.norm() == 0.0) throw UsageError("--axis must be nonzero");
  Resolved out;
  out.ctx.with_wcp = !c.no_wcp;
  if (!dimensional) {
    if (!c.mu) throw UsageError("reduced mode needs --mu (or use --preset / --omega0)");
    if (c.r) throw UsageError("--r needs --preset or --omega0; use --x in reduced mode");
    if (da.norm() == 0.0 || db.norm() == 0.0) {
      throw UsageError("dipole orientations must be nonzero in reduced mode");
    }
    out.ctx.n_a = da.normalized();
    out.ctx.n_b = db.normalized();
    out.ctx.r_hat = axis.normalized();
    out.ctx.mu = *c.mu;
    return out;
  }
  if (c.mu) throw UsageError("--mu is derived from the atoms in dimensional mode");
  std::optional<TwoLevelAtom> a, b;
  if (!c.preset.empty()) {
    if (da.norm() == 0.0 || db.norm() == 0.0) {
      throw UsageError("preset dipole orientations must be nonzero");
    }
    a = HydrogenPreset::atom(da.normalized());
    b = HydrogenPreset::atom(db.normalized());
  } else {
    a.emplace(*c.omega0, da);
    b.emplace(*c.omega0, db);
  }
  const auto cfg = reduce(*a, *b, axis.normalized());
  out.ctx.n_a = cfg.n_a();
  out.ctx.n_b = cfg.n_b();
  out.ctx.r_hat = cfg.r_hat();
  out.ctx.mu = cfg.mu();
  out.ctx.omega0 = a->omega0();
  out.k0 = a->k0();
  return out;
}

double to_x(double r, const ConfigFlags& c, const Resolved& res) {
  const double r_bohr = c.units == "si" ? r / kBohrRadiusMetres : r;
  return *res.k0 * r_bohr;
}

std::vector<std::string> selected_columns(const ConfigFlags& c) {
  if (c.columns.empty()) return csv_columns();
  auto cols = split_list(c.columns);
  for (const auto& col : cols) {
    const auto& all = csv_columns();
    if (std::find(all.begin(), all.end(), col) == all.end()) {
      throw UsageError("--columns: unknown column '" + col + "'");
    }
  }
  return cols;
}

int cmd_point(const ConfigFlags& c, std::ostream& out) {
  const auto res = resolve(c);
  double x = 0.0;
  if (c.x && c.r) throw UsageError("give either --x or --r, not both");
  if (c.x) {
    x = *c.x;
  } else if (c.r) {
    x = to_x(*c.r, c, res);
  } else {
    throw UsageError("point needs --x or --r");
  }
  const auto cols = selected_columns(c);
  const auto row = evaluate_row(res.ctx, x);
  if (row.validity != Validity::ok) {
    out << "# warning=" << to_string(row.validity)
        << " perturbative expansion parameter (predicted concurrence) is "
        << format_number(row.concurrence_full) << "\n";
  }
  write_csv(out, res.ctx, {row}, cols);
  return 0;
}

int cmd_sweep(const ConfigFlags& c, const SweepFlags& s, std::ostream& out) {
  const auto res = resolve(c);
  if (c.x || c.r) throw UsageError("sweep takes a range (--xmin/--xmax or --rmin/--rmax)");
  const bool x_range = s.xmin || s.xmax;
  const bool r_range = s.rmin || s.rmax;
  if (x_range == r_range) throw UsageError("sweep needs exactly one of --xmin/--xmax or --rmin/--rmax");
  double lo = 0.0;
  double hi = 0.0;
  if (x_range) {
    if (!s.xmin || !s.xmax) throw UsageError("sweep needs both --xmin and --xmax");
    lo = *s.xmin;
    hi = *s.xmax;
  } else {
    if (!res.k0) throw UsageError("--rmin/--rmax need --preset or --omega0");
    if (!s.rmin || !s.rmax) throw UsageError("sweep needs both --rmin and --rmax");
    lo = to_x(*s.rmin, c, res);
    hi = to_x(*s.rmax, c, res);
  }
  if (!(lo < hi)) throw UsageError("sweep needs xmin < xmax");
  if (s.points < 2) throw UsageError("sweep needs --points >= 2");
  const auto cols = selected_columns(c);
  const auto grid = make_grid(lo, hi, s.points, s.scale == "log" ? GridScale::log : GridScale::linear);
  const unsigned threads = s.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : s.threads;
  const auto rows = evaluate_sweep(res.ctx, grid, threads);
  if (s.output == "-" || s.output == "stdout") {
    write_csv(out, res.ctx, rows, cols);
  } else {
    std::ofstream file(s.output);
    if (!file) throw UsageError("cannot open output file '" + s.output + "'");
    write_csv(file, res.ctx, rows, cols);
    if (!file) throw std::runtime_error("write to '" + s.output + "' failed");
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vacuum-fluctuation entanglement and Casimir-Polder calculator", "vacent"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  ConfigFlags point_flags;
  auto* point = app.add_subcommand("point", "Evaluate one configuration");
  add_config_flags(point, point_flags);

  ConfigFlags sweep_flags;
  SweepFlags sweep_range;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a distance sweep and emit CSV");
  add_config_flags(sweep, sweep_flags);
  sweep->add_option("--xmin", sweep_range.xmin, "Smallest reduced separation");
  sweep->add_option("--xmax", sweep_range.xmax, "Largest reduced separation");
  sweep->add_option("--rmin", sweep_range.rmin, "Smallest separation (dimensional mode)");
  sweep->add_option("--rmax", sweep_range.rmax, "Largest separation (dimensional mode)");
  sweep->add_option("--points", sweep_range.points, "Number of grid points (>= 2)")->required();
  sweep->add_option("--scale", sweep_range.scale, "Grid spacing")
      ->check(CLI::IsMember({"log", "linear"}));
  sweep->add_option("--output", sweep_range.output, "Output path, '-' for stdout");
  sweep->add_option("--threads", sweep_range.threads, "Worker threads, 0 for all cores");

  std::string level = "fast";
  auto* validate = app.add_subcommand("validate", "Run the closed-form/oracle comparison suite");
  validate->add_option("--level", level, "Suite size")->check(CLI::IsMember({"fast", "full"}));
  validate->add_option("--config", "Flat key=value file of defaults (env VACENT_CONFIG)");

  try {
    auto args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (point->parsed()) return cmd_point(point_flags, out);
    if (sweep->parsed()) return cmd_sweep(sweep_flags, sweep_range, out);
    if (validate->parsed()) {
      const auto report =
          validation::run_validation(level == "full" ? validation::Level::full : validation::Level::fast);
      validation::print_report(out, report);
      if (!report.all_passed()) {
        for (const auto& f : report.failures()) {
          err << "FAILED " << f.name << " observed=" << format_number(f.observed)
              << " expected=" << format_number(f.expected)
              << " tolerance=" << format_number(f.tolerance) << "\n";
        }
        return 1;
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace vacent::cli
