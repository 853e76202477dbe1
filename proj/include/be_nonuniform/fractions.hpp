#pragma once

// Lindeberg, Lyapounov and T fractions of a summand system.

#include <cmath>
#include <string>

#include "be_nonuniform/distributions.hpp"
#include "be_nonuniform/errors.hpp"

namespace be_nonuniform {

inline void require_delta(double delta, const char* op) {
  if (!(delta >= 0.0 && delta <= 1.0))
    throw DomainError(std::string(op) + ": delta must lie in [0,1]");
}

/// L_n(eps) = B^-2 sum_k E X_k^2 1(|X_k| > eps B).
inline double lindeberg(const SummandSystem& system, double eps) {
  if (!(eps > 0.0)) throw DomainError("lindeberg: eps must be positive");
  const double cutoff = eps * system.bn();
  double s = 0.0;
  for (const auto& d : system.summands()) s += truncated_moment(d, 2.0, cutoff, Region::kOutside);
  return s / system.bn2();
}

/// L_{2+delta,n}; exactly 1 at delta = 0.
inline double lyapounov(const SummandSystem& system, double delta) {
  require_delta(delta, "lyapounov");
  if (delta == 0.0) return 1.0;
  double s = 0.0;
  for (const auto& d : system.summands()) s += abs_moment(d, 2.0 + delta);
  return s / std::pow(system.bn(), 2.0 + delta);
}

/// T_{2+delta,n} = B^-(2+delta) sum_j sigma_j^(2+delta).
inline double t_fraction(const SummandSystem& system, double delta) {
  require_delta(delta, "t_fraction");
  if (delta == 0.0 || system.n() == 1) return 1.0;
  double s = 0.0;
  for (double v : system.sigma2()) s += std::pow(v, 1.0 + delta / 2.0);
  return s / std::pow(system.bn2(), 1.0 + delta / 2.0);
}

struct FractionReport {
  double bn;
  double lyapounov;
  double t_fraction;
  double delta;
};

inline FractionReport fraction_report(const SummandSystem& system, double delta) {
  return {system.bn(), lyapounov(system, delta), t_fraction(system, delta), delta};
}

}  // namespace be_nonuniform
