#pragma once

// Seeded property suites behind `verify` and the acceptance tests.
//
//   forms        the three Bikelis forms agree; Petrov with g_*(.; (1+|x|)B_n)
//                reproduces the min form
//   sandwich     g_*(x;a) <= g(x)/g(a) <= g^*(x;a) over random weights in G
//   consistency  Delta_n stays below the published constants times each RHS

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "be_nonuniform/bounds.hpp"
#include "be_nonuniform/gclass.hpp"
#include "be_nonuniform/parallel.hpp"
#include "be_nonuniform/random_suite.hpp"

namespace be_nonuniform {

inline constexpr std::size_t kXPerSystem = 20;
inline constexpr double kXRange = 6.0;
inline constexpr double kFormTolerance = 1e-12;

struct Finding {
  std::string check;
  std::size_t item;  // system or draw index
  double x;
  double observed;   // relative gap, or lhs/rhs ratio
  std::string detail;
};

// Per-check tally. `worst` is the largest relative gap (identity checks) or
// the largest lhs/rhs ratio (inequality checks).
struct CheckSummary {
  std::string name;
  std::size_t evaluated = 0;
  std::size_t failed = 0;
  double worst = 0.0;
};

struct SuiteOutcome {
  std::string suite;
  std::vector<CheckSummary> checks;
  std::vector<Finding> findings;

  bool passed() const noexcept { return findings.empty(); }
};

inline double relative_gap(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

inline std::vector<double> random_x_values(SplitMix64& rng, std::size_t count = kXPerSystem) {
  std::vector<double> xs(count);
  for (double& x : xs) x = rng.uniform(-kXRange, kXRange);
  return xs;
}

namespace detail {

struct ItemResult {
  std::vector<CheckSummary> checks;
  std::vector<Finding> findings;
};

inline SuiteOutcome merge(std::string name, std::vector<ItemResult> items) {
  SuiteOutcome out{std::move(name), {}, {}};
  for (auto& item : items) {
    if (out.checks.empty()) out.checks = item.checks;
    else
      for (std::size_t c = 0; c < item.checks.size(); ++c) {
        out.checks[c].evaluated += item.checks[c].evaluated;
        out.checks[c].failed += item.checks[c].failed;
        out.checks[c].worst = std::max(out.checks[c].worst, item.checks[c].worst);
      }
    for (auto& f : item.findings) out.findings.push_back(std::move(f));
  }
  return out;
}

inline void tally(ItemResult& r, std::size_t check, double observed, bool ok, Finding finding) {
  auto& c = r.checks[check];
  ++c.evaluated;
  c.worst = std::max(c.worst, observed);
  if (!ok) {
    ++c.failed;
    r.findings.push_back(std::move(finding));
  }
}

}  // namespace detail

/// Bikelis min = split = integral and Petrov(g_*) = min, relative 1e-12.
inline SuiteOutcome run_forms_suite(std::uint64_t seed, std::size_t count) {
  auto items = parallel_map<detail::ItemResult>(count, [seed](std::size_t i) {
    SplitMix64 rng = SplitMix64::stream(seed, i);
    const SummandSystem system = random_system(rng);
    detail::ItemResult r;
    r.checks = {{"bikelis_min_vs_split"}, {"bikelis_min_vs_integral"}, {"petrov_lower_star_vs_min"}};
    for (double x : random_x_values(rng)) {
      const double m = rhs_bikelis_min(system, x);
      const double split = rhs_bikelis_split(system, x);
      const double integral = rhs_bikelis_integral(system, x);
      const GWeight lower = weight::LowerStar{(1.0 + std::fabs(x)) * system.bn()};
      const double petrov = rhs_petrov(system, x, lower);
      const double gaps[] = {relative_gap(m, split), relative_gap(m, integral), relative_gap(m, petrov)};
      const double others[] = {split, integral, petrov};
      for (std::size_t c = 0; c < 3; ++c)
        detail::tally(r, c, gaps[c], gaps[c] <= kFormTolerance,
                      {r.checks[c].name, i, x, gaps[c],
                       "min=" + std::to_string(m) + " other=" + std::to_string(others[c])});
    }
    return r;
  });
  return detail::merge("forms", std::move(items));
}

/// A random member of G drawn from one of the five kinds.
inline GWeight random_weight(SplitMix64& rng) {
  switch (rng.below(5)) {
    case 0:
      return weight::Constant{};
    case 1:
      return weight::Power{rng.uniform()};
    case 2:
      return weight::LowerStar{std::pow(10.0, rng.uniform(-3.0, 3.0))};
    case 3:
      return weight::UpperStar{std::pow(10.0, rng.uniform(-3.0, 3.0))};
    default: {
      // log-slopes in [0, 1] keep both g and x/g non-decreasing at the knots
      std::vector<std::pair<double, double>> knots;
      double log_g = rng.uniform(-2.0, 2.0);
      for (int e = -6; e <= 6; ++e) {
        knots.push_back({std::pow(10.0, e), std::pow(10.0, log_g)});
        log_g += rng.uniform();
      }
      return weight::Tabulated(std::move(knots));
    }
  }
}

/// g_*(x;a) <= g(x)/g(a) <= g^*(x;a) on `draws` random (weight, x, a).
inline SuiteOutcome run_sandwich_suite(std::uint64_t seed, std::size_t draws) {
  auto items = parallel_map<detail::ItemResult>(draws, [seed](std::size_t i) {
    SplitMix64 rng = SplitMix64::stream(seed, i);
    const GWeight w = random_weight(rng);
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    const double x = sign * std::pow(10.0, rng.uniform(-6.0, 6.0));
    const double a = std::pow(10.0, rng.uniform(-6.0, 6.0));
    detail::ItemResult r;
    r.checks = {{"sandwich"}};
    const SandwichCheck s = sandwich_check(w, x, a);
    detail::tally(r, 0, 0.0, s.holds,
                  {"sandwich", i, x, s.mid,
                   describe(w) + " a=" + std::to_string(a) + " lower=" + std::to_string(s.lower) +
                       " upper=" + std::to_string(s.upper)});
    return r;
  });
  return detail::merge("sandwich", std::move(items));
}

/// Delta_n(x) (both one-sided limits) against published constants:
///   nagaev_bikelis   published K_0(delta) (general case) for every tabulated delta
///   bikelis          A = 47.65 (29.62 for |x| >= 10)
///   petrov_power     A with g(u) = |u|^delta
///   structural       sup_x (1+|x|^3) Delta_n(x) against K_0(1) L_3 and K_{s1}(1)(L_3 + s1 T_3)
inline SuiteOutcome run_consistency_suite(std::uint64_t seed, std::size_t count) {
  auto items = parallel_map<detail::ItemResult>(count, [seed](std::size_t i) {
    SplitMix64 rng = SplitMix64::stream(seed, i);
    const SummandSystem system = random_system(rng);
    detail::ItemResult r;
    r.checks = {{"nagaev_bikelis"}, {"bikelis_min"}, {"petrov_power"}, {"structural"}};
    auto check = [&](std::size_t c, double x, double lhs, double coefficient, double constant,
                     const std::string& what) {
      const BoundEvaluation e = make_evaluation(x, lhs, coefficient, constant);
      const double ratio = e.rhs > 0.0 ? e.lhs / e.rhs : (e.lhs > 0.0 ? INFINITY : 0.0);
      detail::tally(r, c, ratio, e.satisfied,
                    {r.checks[c].name, i, x, ratio,
                     what + " lhs=" + std::to_string(e.lhs) + " rhs=" + std::to_string(e.rhs)});
    };
    for (double x : random_x_values(rng)) {
      const double lhs = delta_n(system, x, DeltaSide::kMax);
      for (const auto& row : ReferenceConstants::table1) {
        const std::string tag = "delta=" + std::to_string(row.delta);
        check(0, x, lhs, rhs_nagaev_bikelis(system, x, row.delta), row.k0, tag);
        check(2, x, lhs, rhs_petrov(system, x, weight::Power{row.delta}), ReferenceConstants::a(x), tag);
      }
      check(1, x, lhs, rhs_bikelis_min(system, x), ReferenceConstants::a(x), "A");
    }
    const SupResult sup = weighted_sup_delta(system, 1.0);
    const Table1Row& top = ReferenceConstants::table1.front();
    check(3, sup.x, sup.value, rhs_structural(system, 1.0, 0.0), top.k0, "s=0");
    check(3, sup.x, sup.value, rhs_structural(system, 1.0, top.s1), top.ks1, "s=s1");
    return r;
  });
  return detail::merge("consistency", std::move(items));
}

}  // namespace be_nonuniform
