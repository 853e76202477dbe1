#pragma once

// Weights from the class G: even g >= 0 with g(x) > 0, g(x) and x/g(x)
// non-decreasing for x > 0. Includes the envelopes
//   g_*(x; a) = min{1, |x|/a},   g^*(x; a) = max{1, |x|/a},
// which bound g(x)/g(a) from below and above for every g in G.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "be_nonuniform/errors.hpp"

namespace be_nonuniform {

namespace weight {

struct Constant {};

struct Power {
  double delta;
};

struct LowerStar {
  double a;
};

struct UpperStar {
  double a;
};

// Knots (x_i, g_i) on x >= 0, interpolated linearly in |x|.
//
// If g and x/g are non-decreasing at the knots, the interpolant stays in G on
// the tabulated range: on a segment g = alpha + beta x, and x/g is
// non-decreasing iff alpha >= 0, which is x_i/g_i <= x_{i+1}/g_{i+1}.
class Tabulated {
 public:
  explicit Tabulated(std::vector<std::pair<double, double>> knots) : knots_(std::move(knots)) {
    if (knots_.empty()) throw InvalidInput("tabulated weight: empty grid");
    for (std::size_t i = 0; i < knots_.size(); ++i) {
      const auto [x, g] = knots_[i];
      if (!std::isfinite(x) || !std::isfinite(g) || x < 0.0)
        throw InvalidInput("tabulated weight: knots need finite x >= 0");
      if (x > 0.0 && !(g > 0.0))
        throw InvalidInput("tabulated weight: g must be positive for x > 0");
      if (i > 0 && !(x > knots_[i - 1].first))
        throw InvalidInput("tabulated weight: grid must be strictly increasing");
    }
  }

  std::span<const std::pair<double, double>> knots() const noexcept { return knots_; }
  double lo() const noexcept { return knots_.front().first; }
  double hi() const noexcept { return knots_.back().first; }

  double operator()(double x) const {
    const double ax = std::fabs(x);
    if (ax < lo() || ax > hi())
      throw RangeError("tabulated weight: |x| = " + std::to_string(ax) + " outside [" +
                       std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
    auto it = std::lower_bound(knots_.begin(), knots_.end(), ax,
                               [](const auto& k, double v) { return k.first < v; });
    if (it->first == ax) return it->second;
    const auto& [x1, g1] = *it;
    const auto& [x0, g0] = *(it - 1);
    return g0 + (g1 - g0) * (ax - x0) / (x1 - x0);
  }

  friend bool operator==(const Tabulated&, const Tabulated&) = default;

 private:
  std::vector<std::pair<double, double>> knots_;
};

}  // namespace weight

using GWeight = std::variant<weight::Constant, weight::Power, weight::LowerStar,
                             weight::UpperStar, weight::Tabulated>;

inline double g_eval(const GWeight& w, double x) {
  if (!std::isfinite(x)) throw DomainError("g_eval: non-finite argument");
  const double ax = std::fabs(x);
  struct Visitor {
    double ax;
    double operator()(const weight::Constant&) const { return 1.0; }
    double operator()(const weight::Power& p) const { return std::pow(ax, p.delta); }
    double operator()(const weight::LowerStar& s) const { return std::min(1.0, ax / s.a); }
    double operator()(const weight::UpperStar& s) const { return std::max(1.0, ax / s.a); }
    double operator()(const weight::Tabulated& t) const { return t(ax); }
  };
  return std::visit(Visitor{ax}, w);
}

inline std::string describe(const GWeight& w) {
  struct Visitor {
    std::string operator()(const weight::Constant&) const { return "constant"; }
    std::string operator()(const weight::Power& p) const { return "power:" + std::to_string(p.delta); }
    std::string operator()(const weight::LowerStar& s) const { return "lower:" + std::to_string(s.a); }
    std::string operator()(const weight::UpperStar& s) const { return "upper:" + std::to_string(s.a); }
    std::string operator()(const weight::Tabulated& t) const {
      return "tabulated:" + std::to_string(t.knots().size()) + " knots";
    }
  };
  return std::visit(Visitor{}, w);
}

struct MembershipViolation {
  double x_prev;
  double x_next;
  std::string reason;
};

struct MembershipResult {
  bool member = true;
  std::optional<MembershipViolation> violation;

  explicit operator bool() const noexcept { return member; }
};

// Relative slack for "non-decreasing": x / min{1, x/a} = a is not always
// bit-exact.
inline constexpr double kMonotoneSlack = 1e-12;

/// Checks g > 0 and that g and x/g are non-decreasing along `grid` (strictly
/// increasing, positive). Tabulated weights are checked at their positive
/// knots together with the grid points inside the tabulated range.
inline MembershipResult membership_check(const GWeight& w, std::span<const double> grid) {
  std::vector<double> pts;
  if (const auto* t = std::get_if<weight::Tabulated>(&w)) {
    for (double x : grid)
      if (x >= t->lo() && x <= t->hi()) pts.push_back(x);
    for (const auto& [x, g] : t->knots())
      if (x > 0.0) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  } else {
    pts.assign(grid.begin(), grid.end());
  }

  MembershipResult result;
  double prev_x = 0.0, prev_g = 0.0, prev_ratio = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double x = pts[i];
    const double g = g_eval(w, x);
    if (!(g > 0.0)) {
      result.member = false;
      result.violation = MembershipViolation{i ? prev_x : x, x, "g is not positive"};
      return result;
    }
    const double ratio = x / g;
    if (i > 0) {
      if (g < prev_g * (1.0 - kMonotoneSlack)) {
        result.member = false;
        result.violation = MembershipViolation{prev_x, x, "g decreases"};
        return result;
      }
      if (ratio < prev_ratio * (1.0 - kMonotoneSlack)) {
        result.member = false;
        result.violation = MembershipViolation{prev_x, x, "x/g decreases"};
        return result;
      }
    }
    prev_x = x;
    prev_g = g;
    prev_ratio = ratio;
  }
  return result;
}

struct SandwichCheck {
  double lower;
  double mid;
  double upper;
  bool holds;
};

inline constexpr double kSandwichTolerance = 1e-12;

/// g_*(x; a) <= g(x)/g(a) <= g^*(x; a), with relative slack at equality.
inline SandwichCheck sandwich_check(const GWeight& w, double x, double a) {
  if (x == 0.0 || !std::isfinite(x)) throw DomainError("sandwich_check: x must be finite and non-zero");
  if (!(a > 0.0)) throw DomainError("sandwich_check: a must be positive");
  const double ga = g_eval(w, a);
  if (!(ga > 0.0)) throw DomainError("sandwich_check: g(a) must be positive");
  const double r = std::fabs(x) / a;
  const double lower = std::min(1.0, r);
  const double upper = std::max(1.0, r);
  const double mid = g_eval(w, x) / ga;
  const bool holds = lower <= mid + kSandwichTolerance * std::max(1.0, mid) &&
                     mid <= upper + kSandwichTolerance * std::max(1.0, upper);
  return {lower, mid, upper, holds};
}

}  // namespace be_nonuniform
