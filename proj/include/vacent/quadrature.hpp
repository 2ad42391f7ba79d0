#pragma once

// Small quadrature toolkit shared by the production paths and the oracles:
// fixed Gauss-Legendre panels, adaptive bisection on top of them, and
// iterated averaging of alternating partial sums for oscillatory tails.

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace vacent::quad {

template <class T>
struct Estimate {
  T value{};
  double abs_err = 0.0;
  int intervals = 0;
};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

/// 30-point Gauss-Legendre on [a, b].
template <class F>
auto gauss_panel(F&& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

/// Adaptive bisection: accept a panel when one 30-point rule and the sum over
/// its two halves agree within max(abs_tol, rel_tol |value|) scaled to the
/// panel's share of the interval.
template <class F>
auto adaptive(F&& f, double a, double b, double abs_tol, double rel_tol, int max_depth = 40)
    -> Estimate<decltype(f(a))> {
  using T = decltype(f(a));
  Estimate<T> out;
  struct Panel {
    double a, b;
    T whole;
    int depth;
  };
  std::vector<Panel> stack;
  stack.push_back({a, b, gauss_panel(f, a, b), 0});
  const double total_width = std::abs(b - a);
  double scale = magnitude(stack.back().whole);
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    const T left = gauss_panel(f, p.a, mid);
    const T right = gauss_panel(f, mid, p.b);
    const T refined = left + right;
    const double diff = magnitude(refined - p.whole);
    scale = std::max(scale, magnitude(refined));
    const double share = std::abs(p.b - p.a) / total_width;
    const double tol = std::max(abs_tol, rel_tol * scale) * std::max(share, 1e-3);
    if (diff <= tol || p.depth >= max_depth) {
      out.value += refined;
      out.abs_err += diff;
      ++out.intervals;
      continue;
    }
    stack.push_back({mid, p.b, right, p.depth + 1});
    stack.push_back({p.a, mid, left, p.depth + 1});
  }
  return out;
}

/// Repeatedly replace partial sums by the means of neighbours until one value
/// is left (Euler-type summation). Sums alternating series whose terms are
/// smooth in the index, including non-decaying ones, to their Abel limit.
template <class T>
T iterated_average(std::vector<T> partial) {
  while (partial.size() > 1) {
    for (std::size_t i = 0; i + 1 < partial.size(); ++i) {
      partial[i] = 0.5 * (partial[i] + partial[i + 1]);
    }
    partial.pop_back();
  }
  return partial.empty() ? T{} : partial.front();
}

/// Abel-sense integral of f over [start, inf) when f oscillates with a fixed
/// half period h: panels [start + n h, start + (n+1) h] alternate in sign.
/// The estimate compares averaging over `terms` and `terms - 12` panels, plus
/// a rounding allowance proportional to the largest partial sum.
template <class F>
auto oscillatory_tail(F&& f, double start, double h, int terms = 64)
    -> Estimate<decltype(f(start))> {
  using T = decltype(f(start));
  std::vector<T> partial;
  partial.reserve(terms + 1);
  partial.push_back(T{});
  double largest = 0.0;
  for (int n = 0; n < terms; ++n) {
    const double a = start + n * h;
    partial.push_back(partial.back() + gauss_panel(f, a, a + h));
    largest = std::max(largest, magnitude(partial.back()));
  }
  const std::vector<T> shorter(partial.begin(), partial.end() - 12);
  const T full = iterated_average(partial);
  const T coarse = iterated_average(shorter);
  Estimate<T> out;
  out.value = full;
  out.abs_err = magnitude(full - coarse) + 64.0 * std::numeric_limits<double>::epsilon() * largest;
  out.intervals = terms;
  return out;
}

}  // namespace vacent::quad
