#pragma once

// Standard normal distribution function.
//
// Phi is evaluated with W. J. Cody's rational Chebyshev approximations
// (ACM TOMS 715 / "anorm"), the same scheme used by R's pnorm. Three ranges:
//
//   |x| <= 0.67448975        Phi(x) = 1/2 + x R1(x^2)
//   0.67448975 < |x| <= √32   Phi(-|x|) = exp(-x^2/2) R2(|x|)
//   |x| > √32                 Phi(-|x|) = exp(-x^2/2) (1/√(2π) - R3(1/x^2)/x^2) / |x|
//
// The published maximal relative error of each rational piece is below
// 1e-18 (double rounding dominates). exp(-x^2/2) is split as
// exp(-xs^2/2) exp(-(x-xs)(x+xs)/2) with xs = x rounded down to 1/16 so that
// the square does not lose low-order bits in the far tail. The lower tail is
// always computed directly, never as 1 - something, which keeps Phi(-x)
// relatively accurate down to the subnormal range.

#include <array>
#include <cmath>
#include <numbers>

#include "be_nonuniform/errors.hpp"

namespace be_nonuniform {

namespace detail {

inline constexpr std::array<double, 5> kCodyA = {
    2.2352520354606839287, 161.02823106855587881, 1067.6894854603709582,
    18154.981253343561249, 0.065682337918207449113};
inline constexpr std::array<double, 4> kCodyB = {
    47.20258190468824187, 976.09855173777669322, 10260.932208618978205,
    45507.789335026729956};
inline constexpr std::array<double, 9> kCodyC = {
    0.39894151208813466764, 8.8831497943883759412, 93.506656132177855979,
    597.27027639480026226,  2494.5375852903726711, 6848.1904505362823326,
    11602.651437647350124,  9842.7148383839780218, 1.0765576773720192317e-8};
inline constexpr std::array<double, 8> kCodyD = {
    22.266688044328115691, 235.38790178262499861, 1519.377599407554805,
    6485.558298266760755,  18615.571640885098091, 34900.952721145977266,
    38912.003286093271411, 19685.429676859990727};
inline constexpr std::array<double, 6> kCodyP = {
    0.21589853405795699,     0.1274011611602473639, 0.022235277870649807,
    0.001421619193227893466, 2.9112874951168792e-5, 0.02307344176494017303};
inline constexpr std::array<double, 5> kCodyQ = {
    1.28426009614491121, 0.468238212480865118, 0.0659881378689285515,
    0.00378239633202758244, 7.29751555083966205e-5};

inline constexpr double kSmallBranch = 0.67448975;
inline constexpr double kSqrt32 = 5.656854249492380195206754896838;
inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;

inline void require_finite(double x, const char* op) {
  if (!std::isfinite(x)) throw DomainError(std::string(op) + ": non-finite argument");
}

// exp(-y^2/2) * factor with the square split at a 1/16 grid.
inline double gauss_scaled(double y, double factor) {
  const double ys = std::trunc(y * 16.0) / 16.0;
  const double del = (y - ys) * (y + ys);
  return std::exp(-ys * ys * 0.5) * std::exp(-del * 0.5) * factor;
}

// Phi(-y) for y > kSmallBranch.
inline double lower_tail_abs(double y) {
  if (y <= kSqrt32) {
    double num = kCodyC[8] * y;
    double den = y;
    for (int i = 0; i < 7; ++i) {
      num = (num + kCodyC[i]) * y;
      den = (den + kCodyD[i]) * y;
    }
    return gauss_scaled(y, (num + kCodyC[7]) / (den + kCodyD[7]));
  }
  const double inv_sq = 1.0 / (y * y);
  double num = kCodyP[5] * inv_sq;
  double den = inv_sq;
  for (int i = 0; i < 4; ++i) {
    num = (num + kCodyP[i]) * inv_sq;
    den = (den + kCodyQ[i]) * inv_sq;
  }
  double r = inv_sq * (num + kCodyP[4]) / (den + kCodyQ[4]);
  r = (kInvSqrt2Pi - r) / y;
  return gauss_scaled(y, r);
}

// x R1(x^2) for |x| <= kSmallBranch, so that Phi(x) = 1/2 + central_term(x).
inline double central_term(double x) {
  const double sq = x * x;
  double num = kCodyA[4] * sq;
  double den = sq;
  for (int i = 0; i < 3; ++i) {
    num = (num + kCodyA[i]) * sq;
    den = (den + kCodyB[i]) * sq;
  }
  return x * (num + kCodyA[3]) / (den + kCodyB[3]);
}

}  // namespace detail

/// Phi(x) = P(N(0,1) <= x).
inline double phi_cdf(double x) {
  detail::require_finite(x, "phi_cdf");
  const double y = std::fabs(x);
  if (y <= detail::kSmallBranch) return 0.5 + detail::central_term(x);
  const double tail = detail::lower_tail_abs(y);
  return x < 0 ? tail : 1.0 - tail;
}

/// 1 - Phi(x) = Phi(-x), computed without subtracting from one in the tail.
inline double phi_tail(double x) {
  detail::require_finite(x, "phi_tail");
  const double y = std::fabs(x);
  if (y <= detail::kSmallBranch) return 0.5 - detail::central_term(x);
  const double tail = detail::lower_tail_abs(y);
  return x > 0 ? tail : 1.0 - tail;
}

/// Standard normal density.
inline double phi_density(double x) {
  return detail::kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

struct TailBoundCheck {
  double lhs;  // Phi(-x)
  double rhs;  // exp(-x^2/2) / (sqrt(2 pi) x)
  bool holds;
};

/// Mills-ratio bound Phi(-x) <= phi(x)/x for x > 0.
inline TailBoundCheck tail_bound_check(double x) {
  detail::require_finite(x, "tail_bound_check");
  if (!(x > 0)) throw DomainError("tail_bound_check: x must be positive");
  const double lhs = phi_tail(x);
  const double rhs = phi_density(x) / x;
  return {lhs, rhs, lhs <= rhs};
}

}  // namespace be_nonuniform
