#pragma once

// Searches for extremal laws: the two-point minorant over p, and general
// small families where the supremum over x is taken numerically.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "be_nonuniform/bounds.hpp"
#include "be_nonuniform/distributions.hpp"
#include "be_nonuniform/fractions.hpp"
#include "be_nonuniform/minorants.hpp"
#include "be_nonuniform/scalar_search.hpp"

namespace be_nonuniform {

inline constexpr double kClipLo = 1e-6;
inline constexpr double kClipHi = 1.0 - 1e-6;

/// Maximizes theorem2_minorant(., params) over p in [1e-6, 1 - 1e-6]. When
/// the optimum sits on the lower clip (delta = 0 or s > 0) the result is
/// flagged at_boundary and carries limit_minorant(params) for comparison.
inline SearchResult search_two_point(const ModulusParams& params, double tol = 1e-10,
                                     std::size_t scan_points = kDefaultScanPoints) {
  auto objective = [&](double p) { return theorem2_minorant(p, params); };
  SearchResult r = maximize_1d(objective, kClipLo, kClipHi, tol, scan_points);
  const double step = (kClipHi - kClipLo) / static_cast<double>(scan_points - 1);
  if (r.argmax.front() <= kClipLo + step) {
    r.at_boundary = true;
    r.limit_reference = limit_minorant(params);
  }
  return r;
}

enum class Family { kTwoPointXY, kPinelisXY, kThreePoint };
enum class WeightKind { kNagaevBikelis, kBikelisA, kPetrovConstantG };

inline Family parse_family(std::string_view s) {
  if (s == "two_point_xy") return Family::kTwoPointXY;
  if (s == "pinelis_xy") return Family::kPinelisXY;
  if (s == "three_point") return Family::kThreePoint;
  throw InvalidInput("unknown family '" + std::string(s) + "'");
}

inline WeightKind parse_weight_kind(std::string_view s) {
  if (s == "nagaev_bikelis") return WeightKind::kNagaevBikelis;
  if (s == "bikelis_A") return WeightKind::kBikelisA;
  if (s == "petrov_constant_g") return WeightKind::kPetrovConstantG;
  throw InvalidInput("unknown weight '" + std::string(s) + "'");
}

/// Lower-bound objective for one summand: sup over x of Delta_1(x) divided by
/// the right-hand-side coefficient of the chosen inequality.
///   nagaev_bikelis     (1+|x|^{2+d}) Delta_1(x) / (L_{2+d,1} + s T_{2+d,1})
///   bikelis_A          (1+|x|)^2 Delta_1(x)
///   petrov_constant_g  Delta_1(x) / rhs_petrov(g = 1) = (1+|x|)^2 Delta_1(x)
inline SupResult single_summand_objective(const DiscreteDistribution& law, WeightKind kind,
                                          const ModulusParams& params) {
  const SummandSystem system(law);
  const NormalizedSum& ns = system.normalized_sum();
  switch (kind) {
    case WeightKind::kNagaevBikelis: {
      const double e = 2.0 + params.delta;
      const double scale = rhs_structural(system, params.delta, params.s);
      SupResult r = sup_weighted_deviation(ns, [e](double x) { return 1.0 + std::pow(std::fabs(x), e); });
      r.value /= scale;
      return r;
    }
    case WeightKind::kBikelisA:
      return sup_weighted_deviation(ns, [](double x) {
        const double u = 1.0 + std::fabs(x);
        return u * u;
      });
    case WeightKind::kPetrovConstantG: {
      const GWeight constant = weight::Constant{};
      return sup_weighted_deviation(ns, [&](double x) { return 1.0 / rhs_petrov(system, x, constant); });
    }
  }
  return {};
}

namespace detail {

// Law on {0, t, 1} with masses (1 - w2) (1 - u), w2, (1 - w2) u, standardized.
// w2 = 0 is the two-point law make_two_point(u).
inline DiscreteDistribution three_point_law(double u, double w2, double t) {
  std::vector<Atom> atoms;
  const double outer = 1.0 - w2;
  if (outer * (1.0 - u) > 0.0) atoms.push_back({0.0, outer * (1.0 - u)});
  if (w2 > 0.0) atoms.push_back({t, w2});
  if (outer * u > 0.0) atoms.push_back({1.0, outer * u});
  return standardize(DiscreteDistribution(std::move(atoms)));
}

}  // namespace detail

inline constexpr std::size_t kCoordinateScanPoints = 64;
inline constexpr int kCoordinateSweeps = 3;

/// Maximizes single_summand_objective over a law family.
///
/// two_point_xy  p in [1e-6, 1-1e-6] on make_two_point(p)
/// pinelis_xy    p in [1e-6, 1-1e-6] on make_pinelis(p) (unstandardized)
/// three_point   (u, w2, t) on detail::three_point_law; starts from the best
///               two-point law and improves coordinate-wise, so the result is
///               never below the two-point value
///
/// argmax holds the family parameters followed by the maximizing x.
inline SearchResult search_general(Family family, const ModulusParams& params, WeightKind kind,
                                   double tol = 1e-10, std::size_t scan_points = kDefaultScanPoints) {
  auto value_of = [&](const DiscreteDistribution& law) {
    return single_summand_objective(law, kind, params).value;
  };

  if (family == Family::kTwoPointXY || family == Family::kPinelisXY) {
    auto objective = [&](double p) {
      return value_of(family == Family::kTwoPointXY ? make_two_point(p) : make_pinelis(p));
    };
    SearchResult r = maximize_1d(objective, kClipLo, kClipHi, tol, scan_points);
    const SupResult at = single_summand_objective(
        family == Family::kTwoPointXY ? make_two_point(r.argmax[0]) : make_pinelis(r.argmax[0]), kind, params);
    r.value = at.value;
    r.argmax.push_back(at.x);
    r.evaluations += 1;
    return r;
  }

  // three_point
  SearchResult seed = search_general(Family::kTwoPointXY, params, kind, tol, scan_points);
  std::array<double, 3> theta = {seed.argmax[0], 0.0, 0.5};  // u, w2, t
  constexpr std::array<std::array<double, 2>, 3> box = {{{kClipLo, kClipHi}, {0.0, 0.99}, {1e-6, 1.0 - 1e-6}}};
  double best = seed.value;
  double bracket = seed.bracket;
  bool converged = seed.converged;
  std::size_t total = seed.evaluations;
  for (int sweep = 0; sweep < kCoordinateSweeps; ++sweep) {
    bool improved = false;
    for (std::size_t c = 0; c < theta.size(); ++c) {
      auto coord = [&](double v) {
        auto th = theta;
        th[c] = v;
        return value_of(detail::three_point_law(th[0], th[1], th[2]));
      };
      SearchResult r = maximize_1d(coord, box[c][0], box[c][1], tol, kCoordinateScanPoints);
      total += r.evaluations;
      if (r.value > best) {
        best = r.value;
        theta[c] = r.argmax[0];
        bracket = r.bracket;
        converged = r.converged;
        improved = true;
      }
    }
    if (!improved) break;
  }

  SearchResult out;
  if (theta[1] == 0.0) {
    // no mass moved to the middle atom: this is the two-point optimum itself
    out = seed;
    out.argmax = {theta[0], theta[1], theta[2], seed.argmax[1]};
    out.evaluations = total;
    return out;
  }
  const SupResult at = single_summand_objective(detail::three_point_law(theta[0], theta[1], theta[2]), kind, params);
  out.argmax = {theta[0], theta[1], theta[2], at.x};
  out.value = at.value;
  out.bracket = bracket;
  out.converged = converged;
  out.evaluations = total + 1;
  return out;
}

}  // namespace be_nonuniform
