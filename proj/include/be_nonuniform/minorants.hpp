#pragma once

// Closed-form lower bounds for the absolute constants, evaluated on the
// standardized two-point law (atom sqrt(q/p) with mass p, -sqrt(p/q) with
// mass q) at x = sqrt(q/p), where the strict CDF equals q.

#include <cmath>

#include "be_nonuniform/errors.hpp"
#include "be_nonuniform/fractions.hpp"
#include "be_nonuniform/normal.hpp"

namespace be_nonuniform {

struct ModulusParams {
  double delta = 0.0;
  double s = 0.0;

  ModulusParams() = default;
  ModulusParams(double d, double s_) : delta(d), s(s_) {
    require_delta(delta, "ModulusParams");
    if (!(s >= 0.0)) throw DomainError("ModulusParams: s must be non-negative");
  }
};

namespace detail {
inline void require_open_unit(double p, const char* op) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError(std::string(op) + ": p must lie in (0,1)");
}
}  // namespace detail

/// |q - Phi(sqrt(q/p))|, evaluated as |p - Phi(-sqrt(q/p))|.
inline double delta1_two_point(double p) {
  detail::require_open_unit(p, "delta1_two_point");
  const double q = 1.0 - p;
  return std::fabs(p - phi_tail(std::sqrt(q / p)));
}

/// (1 + sqrt(q/p))^2 |q - Phi(sqrt(q/p))|: lower bound for the Bikelis/Petrov constant A.
inline double theorem1_minorant(double p) {
  detail::require_open_unit(p, "theorem1_minorant");
  const double root = std::sqrt((1.0 - p) / p);
  return (1.0 + root) * (1.0 + root) * delta1_two_point(p);
}

/// q^{d/2} (p^{1+d/2} + q^{1+d/2}) / (p^{1+d} + q^{1+d} + s (pq)^{d/2}) |1 - Phi(-sqrt(q/p))/p|:
/// lower bound for K_s(delta); s = 0 gives the K_0 bound.
inline double theorem2_minorant(double p, const ModulusParams& params) {
  detail::require_open_unit(p, "theorem2_minorant");
  const double d = params.delta;
  const double q = 1.0 - p;
  const double num = std::pow(q, d / 2.0) * (std::pow(p, 1.0 + d / 2.0) + std::pow(q, 1.0 + d / 2.0));
  const double den = std::pow(p, 1.0 + d) + std::pow(q, 1.0 + d) + params.s * std::pow(p * q, d / 2.0);
  return num / den * std::fabs(1.0 - phi_tail(std::sqrt(q / p)) / p);
}

/// Limit of theorem2_minorant as p -> 0+: 1/(1+s) at delta = 0, else 1.
inline double limit_minorant(const ModulusParams& params) {
  return params.delta == 0.0 ? 1.0 / (1.0 + params.s) : 1.0;
}

}  // namespace be_nonuniform
