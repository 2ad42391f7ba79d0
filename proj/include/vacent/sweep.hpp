#pragma once

// Row evaluation for single points and distance sweeps, plus the CSV format
// the CLI emits: '#'-prefixed "key=value" metadata lines, one header line,
// then one row per grid point with numbers printed to 17 significant digits.

#include "vacent/model.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vacent {

inline constexpr const char* kVersion = "1.0.0";

/// Fixed CSV column order.
inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "x",   "r_over_a0",  "concurrence_full", "concurrence_near", "concurrence_far",
      "eof", "wcp_energy", "validity"};
  return cols;
}

/// Everything but x: orientations, coupling and (optionally) the dimensional
/// atom that fixes k0 and the energy unit.
struct EvalContext {
  Vec3 n_a = Vec3::UnitX();
  Vec3 n_b = Vec3::UnitX();
  Vec3 r_hat = Vec3::UnitZ();
  double mu = 0.0;
  std::optional<double> omega0;  ///< Hartree/hbar; set in dimensional mode
  bool with_wcp = true;

  PairConfiguration at(double x) const;
};

struct SweepRow {
  double x = 0.0;
  std::optional<double> r_over_a0;
  double concurrence_full = 0.0;
  double concurrence_near = 0.0;
  double concurrence_far = 0.0;
  double eof = 0.0;
  double wcp_energy = 0.0;  ///< Hartree in dimensional mode, hbar omega0 otherwise
  double wcp_abs_err = 0.0;
  Validity validity = Validity::ok;
};

SweepRow evaluate_row(const EvalContext& ctx, double x);

enum class GridScale { log, linear };

std::vector<double> make_grid(double xmin, double xmax, int points, GridScale scale);

/// Evaluates rows on `threads` workers; output order always follows `grid`.
std::vector<SweepRow> evaluate_sweep(const EvalContext& ctx, const std::vector<double>& grid,
                                     unsigned threads = 1);

std::string format_number(double v);

/// Metadata lines describing ctx (version, unit system, configuration echo).
std::map<std::string, std::string> metadata_for(const EvalContext& ctx);

void write_csv(std::ostream& os, const EvalContext& ctx, const std::vector<SweepRow>& rows,
               const std::vector<std::string>& columns = csv_columns());

struct ParsedCsv {
  std::map<std::string, std::string> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Value of `column` in row `i`; throws std::out_of_range for unknown columns.
  const std::string& cell(std::size_t i, const std::string& column) const;
};

ParsedCsv parse_csv(std::istream& is);

/// Rebuild the evaluation context from a parsed metadata block.
EvalContext context_from_metadata(const std::map<std::string, std::string>& metadata);

}  // namespace vacent
