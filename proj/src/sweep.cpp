#include "vacent/sweep.hpp"

#include "vacent/casimir.hpp"
#include "vacent/entanglement.hpp"
#include "vacent/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace vacent {

namespace {

std::string format_vec(const Vec3& v) {
  return format_number(v.x()) + "," + format_number(v.y()) + "," + format_number(v.z());
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw DomainError("cannot parse number '" + s + "'");
  return v;
}

Vec3 parse_vec(const std::string& s) {
  std::stringstream ss(s);
  std::string part;
  std::vector<double> vals;
  while (std::getline(ss, part, ',')) vals.push_back(parse_double(part));
  if (vals.size() != 3) throw DomainError("expected three comma-separated components in '" + s + "'");
  return {vals[0], vals[1], vals[2]};
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

PairConfiguration EvalContext::at(double x) const {
  return PairConfiguration::normalized(x, n_a, n_b, r_hat, mu);
}

SweepRow evaluate_row(const EvalContext& ctx, double x) {
  const auto cfg = ctx.at(x);
  SweepRow row;
  row.x = x;
  const auto full = concurrence_full(cfg);
  row.concurrence_full = full.raw;
  row.concurrence_near = concurrence_near(cfg).raw;
  row.concurrence_far = concurrence_far(cfg).raw;
  row.eof = entanglement_of_formation(full.value);
  row.validity = full.validity;
  double energy_unit = 1.0;
  if (ctx.omega0) {
    const double k0 = *ctx.omega0 / atomic_units().c;
    row.r_over_a0 = x / k0;
    energy_unit = atomic_units().hbar * *ctx.omega0;
  }
  if (ctx.with_wcp) {
    const auto w = casimir::wcp_reduced(cfg);
    row.wcp_energy = energy_unit * w.energy;
    row.wcp_abs_err = energy_unit * w.abs_err_est;
  }
  return row;
}

std::vector<double> make_grid(double xmin, double xmax, int points, GridScale scale) {
  if (!(xmin > 0.0) || !(xmax > xmin) || !std::isfinite(xmax)) {
    throw DomainError("grid: need 0 < xmin < xmax");
  }
  if (points < 2) throw DomainError("grid: need at least 2 points");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    grid[i] = scale == GridScale::log
                  ? std::exp(std::log(xmin) + t * (std::log(xmax) - std::log(xmin)))
                  : xmin + t * (xmax - xmin);
  }
  grid.front() = xmin;
  grid.back() = xmax;
  return grid;
}

std::vector<SweepRow> evaluate_sweep(const EvalContext& ctx, const std::vector<double>& grid,
                                     unsigned threads) {
  std::vector<SweepRow> rows(grid.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(grid.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = evaluate_row(ctx, grid[i]);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < grid.size(); i = next++) {
        try {
          rows[i] = evaluate_row(ctx, grid[i]);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, ptr);
}

std::map<std::string, std::string> metadata_for(const EvalContext& ctx) {
  std::map<std::string, std::string> md;
  md["version"] = kVersion;
  md["units"] = ctx.omega0 ? "hartree_atomic" : "reduced";
  md["energy_unit"] = ctx.omega0 ? "hartree" : "hbar_omega0";
  md["mu"] = format_number(ctx.mu);
  md["n_a"] = format_vec(ctx.n_a);
  md["n_b"] = format_vec(ctx.n_b);
  md["r_hat"] = format_vec(ctx.r_hat);
  md["omega0"] = ctx.omega0 ? format_number(*ctx.omega0) : "none";
  md["wcp"] = ctx.with_wcp ? "on" : "off";
  return md;
}

void write_csv(std::ostream& os, const EvalContext& ctx, const std::vector<SweepRow>& rows,
               const std::vector<std::string>& columns) {
  const auto& all = csv_columns();
  std::vector<std::string> selected;
  for (const auto& c : all) {
    if (std::find(columns.begin(), columns.end(), c) != columns.end()) selected.push_back(c);
  }
  for (const auto& c : columns) {
    if (std::find(all.begin(), all.end(), c) == all.end()) throw DomainError("unknown column '" + c + "'");
  }
  for (const auto& [k, v] : metadata_for(ctx)) os << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < selected.size(); ++i) os << (i ? "," : "") << selected[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < selected.size(); ++i) {
      const auto& c = selected[i];
      if (i) os << ",";
      if (c == "x") os << format_number(row.x);
      else if (c == "r_over_a0") os << (row.r_over_a0 ? format_number(*row.r_over_a0) : "");
      else if (c == "concurrence_full") os << format_number(row.concurrence_full);
      else if (c == "concurrence_near") os << format_number(row.concurrence_near);
      else if (c == "concurrence_far") os << format_number(row.concurrence_far);
      else if (c == "eof") os << format_number(row.eof);
      else if (c == "wcp_energy") os << (ctx.with_wcp ? format_number(row.wcp_energy) : "");
      else if (c == "validity") os << to_string(row.validity);
    }
    os << "\n";
  }
}

const std::string& ParsedCsv::cell(std::size_t i, const std::string& column) const {
  const auto it = std::find(header.begin(), header.end(), column);
  if (it == header.end()) throw std::out_of_range("no column '" + column + "'");
  return rows.at(i).at(static_cast<std::size_t>(it - header.begin()));
}

ParsedCsv parse_csv(std::istream& is) {
  ParsedCsv out;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto body = line.substr(line.find_first_not_of("# "));
      const auto eq = body.find('=');
      if (eq != std::string::npos) out.metadata[body.substr(0, eq)] = body.substr(eq + 1);
      continue;
    }
    auto cells = split_csv_line(line);
    if (!have_header) {
      out.header = std::move(cells);
      have_header = true;
    } else {
      if (cells.size() != out.header.size()) throw DomainError("csv: ragged row");
      out.rows.push_back(std::move(cells));
    }
  }
  if (!have_header) throw DomainError("csv: missing header line");
  return out;
}

EvalContext context_from_metadata(const std::map<std::string, std::string>& md) {
  EvalContext ctx;
  ctx.mu = parse_double(md.at("mu"));
  ctx.n_a = parse_vec(md.at("n_a"));
  ctx.n_b = parse_vec(md.at("n_b"));
  ctx.r_hat = parse_vec(md.at("r_hat"));
  const auto& w = md.at("omega0");
  if (w != "none") ctx.omega0 = parse_double(w);
  const auto it = md.find("wcp");
  ctx.with_wcp = it == md.end() || it->second != "off";
  return ctx;
}

}  // namespace vacent
