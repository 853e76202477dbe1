#pragma once

// Deterministic 1-D maximization: uniform scan followed by golden-section
// refinement around the best scan point.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "be_nonuniform/errors.hpp"

namespace be_nonuniform {

struct SearchResult {
  std::vector<double> argmax;
  double value = 0.0;
  double bracket = 0.0;  // width of the final refinement interval
  std::size_t evaluations = 0;
  bool converged = false;
  // Set by searches whose optimum runs into a clipped domain end.
  bool at_boundary = false;
  std::optional<double> limit_reference;
};

inline constexpr std::size_t kDefaultScanPoints = 2048;
inline constexpr int kMaxGoldenIterations = 400;

namespace detail {

template <class F>
double checked_eval(F& f, double x, std::size_t& evals) {
  const double v = f(x);
  ++evals;
  if (!std::isfinite(v)) throw EvaluationError("objective is not finite", x);
  return v;
}

}  // namespace detail

/// Golden-section maximization of f on [a, b], seeded with an incumbent
/// (x0, f0) that is only ever replaced by a strictly better point.
template <class F>
SearchResult golden_maximize(F&& f, double a, double b, double tol, double x0, double f0) {
  constexpr double kInvPhi = 0.6180339887498948482045868343656;
  SearchResult r;
  double best_x = x0, best_f = f0;
  auto track = [&](double x, double v) {
    if (v > best_f) {
      best_f = v;
      best_x = x;
    }
  };
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = detail::checked_eval(f, c, r.evaluations);
  double fd = detail::checked_eval(f, d, r.evaluations);
  track(c, fc);
  track(d, fd);
  for (int it = 0; it < kMaxGoldenIterations && b - a > tol; ++it) {
    const double width = b - a;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = detail::checked_eval(f, c, r.evaluations);
      track(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = detail::checked_eval(f, d, r.evaluations);
      track(d, fd);
    }
    if (!(b - a < width)) break;  // interval stopped shrinking at double resolution
  }
  r.argmax = {best_x};
  r.value = best_f;
  r.bracket = b - a;
  r.converged = r.bracket <= tol;
  return r;
}

/// Maximizes f on [lo, hi]: `scan_points` uniform evaluations (ends included),
/// then golden-section on the two cells adjacent to the best one until the
/// bracket is narrower than tol. Deterministic; ties go to the leftmost point.
template <class F>
SearchResult maximize_1d(F&& f, double lo, double hi, double tol,
                         std::size_t scan_points = kDefaultScanPoints) {
  if (!(lo < hi)) throw DomainError("maximize_1d: need lo < hi");
  if (!(tol > 0.0)) throw DomainError("maximize_1d: tol must be positive");
  if (scan_points < 3) scan_points = 3;

  std::size_t evals = 0;
  const double step = (hi - lo) / static_cast<double>(scan_points - 1);
  auto grid = [&](std::size_t i) {
    return i + 1 == scan_points ? hi : lo + step * static_cast<double>(i);
  };
  std::size_t best_i = 0;
  double best_f = detail::checked_eval(f, lo, evals);
  for (std::size_t i = 1; i < scan_points; ++i) {
    const double v = detail::checked_eval(f, grid(i), evals);
    if (v > best_f) {
      best_f = v;
      best_i = i;
    }
  }
  const double a = grid(best_i == 0 ? 0 : best_i - 1);
  const double b = grid(best_i + 1 >= scan_points ? scan_points - 1 : best_i + 1);
  SearchResult r = golden_maximize(f, a, b, tol, grid(best_i), best_f);
  r.evaluations += evals;
  return r;
}

}  // namespace be_nonuniform
