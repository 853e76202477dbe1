#pragma once

// The deviation Delta_n(x) = |P(S_n < x B_n) - Phi(x)| and the right-hand
// sides of the non-uniform bounds, each returned as the coefficient of its
// absolute constant:
//
//   Nagaev-Bikelis   L_{2+d,n} / (1 + |x|^{2+d})
//   Bikelis (min)    c^-3 sum_k E X_k^2 min{|X_k|, c},             c = (1+|x|) B_n
//   Bikelis (split)  sum_k [E X_k^2 1(|X_k|>c) / c^2 + E|X_k|^3 1(|X_k|<=c) / c^3]
//   Bikelis (int)    (1+|x|)^-3 int_0^{1+|x|} L_n(z) dz
//   Petrov           sum_k E X_k^2 g(X_k) / (c^2 g(c))
//   structural       L_{2+d,n} + s T_{2+d,n}   (against sup_x (1+|x|^{2+d}) Delta_n(x))
//
// The three Bikelis forms are the same number; the integral form is taken in
// the B_n-scaled variable so that the identity is exact.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "be_nonuniform/distributions.hpp"
#include "be_nonuniform/fractions.hpp"
#include "be_nonuniform/gclass.hpp"
#include "be_nonuniform/normal.hpp"
#include "be_nonuniform/scalar_search.hpp"

namespace be_nonuniform {

// ---------------------------------------------------------------------------
// Published upper bounds for the absolute constants.

struct Table1Row {
  double delta;
  double k0;       // K_0(delta), general case
  double ks1;      // K_{s_1}(delta), general case
  double s1;
  double k0_iid;
  double ks1_iid;
  double s1_iid;
};

struct ReferenceConstants {
  static constexpr std::array<Table1Row, 10> table1 = {{
      {1.0, 21.82, 18.19, 1.0, 17.36, 15.70, 0.646},
      {0.9, 20.07, 16.65, 1.0, 16.24, 14.61, 0.619},
      {0.8, 18.53, 15.34, 1.0, 15.20, 13.61, 0.625},
      {0.7, 17.14, 14.20, 1.0, 14.13, 12.71, 0.570},
      {0.6, 15.91, 13.19, 0.859, 13.15, 11.90, 0.498},
      {0.5, 14.84, 12.30, 0.834, 12.26, 11.17, 0.428},
      {0.4, 13.92, 11.53, 0.806, 11.43, 10.51, 0.350},
      {0.3, 13.10, 10.86, 0.778, 10.66, 9.93, 0.273},
      {0.2, 12.35, 10.28, 0.748, 9.92, 9.42, 0.183},
      {0.1, 11.67, 9.77, 0.710, 9.18, 8.97, 0.074},
  }};
  static constexpr double a_general = 47.65;
  static constexpr double a_iid = 39.32;
  // Valid for |x| >= 10.
  static constexpr double a_general_far = 29.62;
  static constexpr double a_iid_far = 24.13;
  static constexpr double far_threshold = 10.0;

  static std::optional<Table1Row> row(double delta) {
    for (const auto& r : table1)
      if (std::fabs(r.delta - delta) <= 1e-12) return r;
    return std::nullopt;
  }

  /// Constant A for Bikelis/Petrov at argument x.
  static double a(double x, bool iid = false) {
    const bool far = std::fabs(x) >= far_threshold;
    if (iid) return far ? a_iid_far : a_iid;
    return far ? a_general_far : a_general;
  }

  /// K_0(delta): published value on the tabulated grid, otherwise A 2^{1+delta}.
  static double k0(double delta, bool iid = false) {
    require_delta(delta, "k0");
    if (auto r = row(delta)) return iid ? r->k0_iid : r->k0;
    return (iid ? a_iid : a_general) * std::pow(2.0, 1.0 + delta);
  }

  /// K_s(delta): K_{s_1} once s >= s_1, else K_0 (K_s <= K_0 for all s).
  static double ks(double delta, double s, bool iid = false) {
    if (auto r = row(delta)) {
      const double s1 = iid ? r->s1_iid : r->s1;
      if (s >= s1) return iid ? r->ks1_iid : r->ks1;
    }
    return k0(delta, iid);
  }
};

// ---------------------------------------------------------------------------
// Deviation.

enum class DeltaSide { kStrict, kWeak, kMax };

namespace detail {

// |F - Phi(x)| where F is the mass of S/B below x on `side`; the right tail is
// compared through upper masses to avoid 1 - (1 - eps) cancellation.
inline double deviation(const NormalizedSum& ns, double x, CdfSide side) {
  if (x > 0.0) return std::fabs(ns.upper_mass(x, side) - phi_tail(x));
  return std::fabs(ns.lower_mass(x, side) - phi_cdf(x));
}

// Deviation on an open segment where the strict CDF equals `below`
// (`above` = 1 - below accumulated from the right).
inline double segment_deviation(double below, double above, double x) {
  if (x > 0.0) return std::fabs(above - phi_tail(x));
  return std::fabs(below - phi_cdf(x));
}

}  // namespace detail

inline double delta_n(const SummandSystem& system, double x, DeltaSide side = DeltaSide::kStrict) {
  if (!std::isfinite(x)) throw DomainError("delta_n: non-finite x");
  const NormalizedSum& ns = system.normalized_sum();
  switch (side) {
    case DeltaSide::kStrict:
      return detail::deviation(ns, x, CdfSide::kStrict);
    case DeltaSide::kWeak:
      return detail::deviation(ns, x, CdfSide::kWeak);
    case DeltaSide::kMax:
      break;
  }
  return std::max(detail::deviation(ns, x, CdfSide::kStrict),
                  detail::deviation(ns, x, CdfSide::kWeak));
}

// ---------------------------------------------------------------------------
// Right-hand-side coefficients.

inline double rhs_nagaev_bikelis(const SummandSystem& system, double x, double delta) {
  return lyapounov(system, delta) / (1.0 + std::pow(std::fabs(x), 2.0 + delta));
}

inline double rhs_bikelis_min(const SummandSystem& system, double x) {
  const double c = (1.0 + std::fabs(x)) * system.bn();
  double s = 0.0;
  for (const auto& d : system.summands())
    for (const Atom& a : d.atoms()) s += a.prob * a.value * a.value * std::min(std::fabs(a.value), c);
  return s / (c * c * c);
}

inline double rhs_bikelis_split(const SummandSystem& system, double x) {
  const double c = (1.0 + std::fabs(x)) * system.bn();
  double s = 0.0;
  for (const auto& d : system.summands())
    s += truncated_moment(d, 2.0, c, Region::kOutside) / (c * c) +
         truncated_moment(d, 3.0, c, Region::kInside) / (c * c * c);
  return s;
}

/// (1+|x|)^-3 int_0^{1+|x|} L_n(z) dz, integrating the step function L_n
/// exactly between its breakpoints |X_k-atom| / B_n.
inline double rhs_bikelis_integral(const SummandSystem& system, double x) {
  const double upper = 1.0 + std::fabs(x);
  const double bn = system.bn();
  struct Step {
    double at;      // |v| / B_n
    double weight;  // p v^2 / B_n^2, dropped from L_n once z >= at
  };
  std::vector<Step> steps;
  for (const auto& d : system.summands())
    for (const Atom& a : d.atoms()) steps.push_back({std::fabs(a.value) / bn, a.prob * a.value * a.value / system.bn2()});
  std::sort(steps.begin(), steps.end(), [](const Step& l, const Step& r) { return l.at < r.at; });

  // tail[i] = L_n(z) for z in [steps[i-1].at, steps[i].at)
  std::vector<double> tail(steps.size() + 1, 0.0);
  for (std::size_t i = steps.size(); i-- > 0;) tail[i] = tail[i + 1] + steps[i].weight;

  double integral = 0.0;
  double from = 0.0;
  for (std::size_t i = 0; i < steps.size() && from < upper; ++i) {
    const double to = std::min(steps[i].at, upper);
    if (to > from) {
      integral += (to - from) * tail[i];
      from = to;
    }
  }
  const double ucube = upper * upper * upper;
  return integral / ucube;
}

inline double rhs_petrov(const SummandSystem& system, double x, const GWeight& w) {
  const double c = (1.0 + std::fabs(x)) * system.bn();
  const double gc = g_eval(w, c);
  if (!(gc > 0.0)) throw DomainError("rhs_petrov: g((1+|x|)B_n) must be positive");
  double s = 0.0;
  for (const auto& d : system.summands())
    for (const Atom& a : d.atoms()) s += a.prob * a.value * a.value * g_eval(w, a.value);
  return s / (c * c * gc);
}

inline double rhs_structural(const SummandSystem& system, double delta, double s) {
  if (!(s >= 0.0)) throw DomainError("rhs_structural: s must be non-negative");
  return lyapounov(system, delta) + s * t_fraction(system, delta);
}

/// sup_{x>0} (1+x)^{2+delta} / (1+x^{2+delta}) by numerical maximization.
struct RatioSup {
  double sup_value;
  double argmax;
};

inline RatioSup ratio_sup_weight(double delta) {
  require_delta(delta, "ratio_sup_weight");
  const double e = 2.0 + delta;
  auto ratio = [e](double x) { return std::pow(1.0 + x, e) / (1.0 + std::pow(x, e)); };
  const SearchResult r = maximize_1d(ratio, 1e-9, 100.0, 1e-12);
  return {r.value, r.argmax.front()};
}

// ---------------------------------------------------------------------------
// Suprema of weighted deviations.

enum class SupLocation { kLeftLimit, kRightLimit, kInterior };

struct SupResult {
  double value = 0.0;
  double x = 0.0;
  SupLocation location = SupLocation::kInterior;
};

inline constexpr std::size_t kSegmentRefinement = 64;
// Far-tail span searched beyond the extreme atoms; w(x) Phi(-|x|) is
// negligible past |x| = 40 for polynomial weights.
inline constexpr double kTailSpan = 40.0;

/// sup_x weight(x) Delta(x) over the law `ns` of S_n / B_n, where Delta is
/// taken on both one-sided limits at atoms. Between atoms Delta is
/// |const - Phi(x)|, so candidates are the one-sided atom limits plus
/// `kSegmentRefinement` interior points per segment, with a golden-section
/// polish around the best interior point.
template <class Weight>
SupResult sup_weighted_deviation(const NormalizedSum& ns, Weight&& weight, double polish_tol = 1e-12) {
  const auto v = ns.values();
  const std::size_t m = v.size();
  SupResult best;
  best.value = -1.0;
  auto offer = [&](double value, double x, SupLocation loc) {
    if (value > best.value) best = {value, x, loc};
  };

  for (std::size_t i = 0; i < m; ++i) {
    offer(weight(v[i]) * detail::deviation(ns, v[i], CdfSide::kStrict), v[i], SupLocation::kLeftLimit);
    offer(weight(v[i]) * detail::deviation(ns, v[i], CdfSide::kWeak), v[i], SupLocation::kRightLimit);
  }

  // Segment j spans (lo_j, hi_j) with strict CDF below_j; j = 0 and j = m are the tails.
  struct Interior {
    double value = -1.0;
    double x = 0.0;
    double a = 0.0, b = 0.0;
    double below = 0.0, above = 0.0;
  } interior;
  double below = 0.0;
  for (std::size_t j = 0; j <= m; ++j) {
    const double lo = j == 0 ? std::min(v[0], 0.0) - kTailSpan : v[j - 1];
    const double hi = j == m ? std::max(v[m - 1], 0.0) + kTailSpan : v[j];
    const double above = j == m ? 0.0 : ns.upper_mass(v[j], CdfSide::kStrict);
    const double h = (hi - lo) / static_cast<double>(kSegmentRefinement + 1);
    for (std::size_t k = 1; k <= kSegmentRefinement; ++k) {
      const double x = lo + h * static_cast<double>(k);
      const double val = weight(x) * detail::segment_deviation(below, above, x);
      if (val > interior.value) interior = {val, x, x - h, x + h, below, above};
    }
    if (j < m) below += ns.probs()[j];
    if (j + 1 == m) below = 1.0;
  }

  const double seg_below = interior.below, seg_above = interior.above;
  auto on_segment = [&](double x) { return weight(x) * detail::segment_deviation(seg_below, seg_above, x); };
  const SearchResult polished =
      golden_maximize(on_segment, interior.a, interior.b, polish_tol, interior.x, interior.value);
  offer(polished.value, polished.argmax.front(), SupLocation::kInterior);
  return best;
}

/// sup_x (1 + |x|^{2+delta}) Delta_n(x), the left side of the structural bound.
inline SupResult weighted_sup_delta(const SummandSystem& system, double delta) {
  require_delta(delta, "weighted_sup_delta");
  const double e = 2.0 + delta;
  return sup_weighted_deviation(system.normalized_sum(),
                                [e](double x) { return 1.0 + std::pow(std::fabs(x), e); });
}

/// As above, additionally evaluating Delta_n (both sides) at caller-supplied points.
inline SupResult weighted_sup_delta(const SummandSystem& system, double delta,
                                    std::span<const double> extra_points) {
  SupResult best = weighted_sup_delta(system, delta);
  const double e = 2.0 + delta;
  for (double x : extra_points) {
    const double val = (1.0 + std::pow(std::fabs(x), e)) * delta_n(system, x, DeltaSide::kMax);
    if (val > best.value) best = {val, x, SupLocation::kInterior};
  }
  return best;
}

// ---------------------------------------------------------------------------

struct BoundEvaluation {
  double x;
  double lhs;
  double rhs_coefficient;
  double constant_used;
  double rhs;
  bool satisfied;
};

inline BoundEvaluation make_evaluation(double x, double lhs, double coefficient, double constant) {
  const double rhs = constant * coefficient;
  return {x, lhs, coefficient, constant, rhs, lhs <= rhs};
}

}  // namespace be_nonuniform
