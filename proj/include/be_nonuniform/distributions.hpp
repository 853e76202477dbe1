#pragma once

// Finite atomic probability laws and systems of independent summands.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "be_nonuniform/errors.hpp"

namespace be_nonuniform {

struct Atom {
  double value;
  double prob;

  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class CdfSide { kStrict, kWeak };
enum class Region { kInside, kOutside };

inline constexpr double kMergeTolerance = 1e-12;
inline constexpr double kMassTolerance = 1e-12;
inline constexpr std::size_t kDefaultAtomCap = 1'000'000;

class DiscreteDistribution {
 public:
  // Sorts, merges values closer than kMergeTolerance and validates the law.
  explicit DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw InvalidInput("distribution has no atoms");
    for (const Atom& a : atoms_) {
      if (!std::isfinite(a.value) || !std::isfinite(a.prob))
        throw InvalidInput("non-finite atom");
      if (!(a.prob > 0.0) || a.prob > 1.0)
        throw InvalidInput("atom probability must lie in (0,1]");
    }
    normalize_layout();
    const double total = std::accumulate(
        atoms_.begin(), atoms_.end(), 0.0,
        [](double s, const Atom& a) { return s + a.prob; });
    if (std::fabs(total - 1.0) > kMassTolerance)
      throw InvalidInput("probabilities sum to " + std::to_string(total) +
                                ", expected 1");
  }

  static DiscreteDistribution point_mass(double at) { return DiscreteDistribution({{at, 1.0}}); }

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  double mean() const noexcept {
    double m = 0.0;
    for (const Atom& a : atoms_) m += a.prob * a.value;
    return m;
  }

  // Central second moment.
  double variance() const noexcept {
    const double m = mean();
    double v = 0.0;
    for (const Atom& a : atoms_) v += a.prob * (a.value - m) * (a.value - m);
    return v;
  }

  friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

 private:
  struct Unchecked {};
  DiscreteDistribution(std::vector<Atom> atoms, Unchecked) : atoms_(std::move(atoms)) {
    normalize_layout();
  }

  void normalize_layout() {
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.value < b.value; });
    std::vector<Atom> merged;
    merged.reserve(atoms_.size());
    for (const Atom& a : atoms_) {
      if (!merged.empty() && a.value - merged.back().value <= kMergeTolerance)
        merged.back().prob += a.prob;
      else
        merged.push_back(a);
    }
    atoms_ = std::move(merged);
  }

  std::vector<Atom> atoms_;

  friend DiscreteDistribution convolve(const DiscreteDistribution&, const DiscreteDistribution&,
                                       std::size_t);
  friend DiscreteDistribution standardize(const DiscreteDistribution&);
};

/// Zero-mean unit-variance two-point law: -sqrt(p/q) w.p. q, sqrt(q/p) w.p. p.
inline DiscreteDistribution make_two_point(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("make_two_point: p must lie in (0,1)");
  const double q = 1.0 - p;
  return DiscreteDistribution({{-std::sqrt(p / q), q}, {std::sqrt(q / p), p}});
}

/// Centered Bernoulli: -p w.p. q, 1-p w.p. p. Variance pq.
inline DiscreteDistribution make_pinelis(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("make_pinelis: p must lie in (0,1)");
  return DiscreteDistribution({{-p, 1.0 - p}, {1.0 - p, p}});
}

/// (X - EX) / sd(X).
inline DiscreteDistribution standardize(const DiscreteDistribution& d) {
  const double m = d.mean();
  const double var = d.variance();
  if (!(var > 0.0)) throw DegenerateError("standardize: zero variance");
  const double sd = std::sqrt(var);
  std::vector<Atom> out;
  out.reserve(d.size());
  for (const Atom& a : d.atoms()) out.push_back({(a.value - m) / sd, a.prob});
  return DiscreteDistribution(std::move(out), DiscreteDistribution::Unchecked{});
}

/// Law of the sum of independent copies of `a` and `b`.
inline DiscreteDistribution convolve(const DiscreteDistribution& a, const DiscreteDistribution& b,
                                     std::size_t atom_cap = kDefaultAtomCap) {
  if (a.size() * b.size() > atom_cap)
    throw CapacityError("convolve: " + std::to_string(a.size()) + " x " +
                        std::to_string(b.size()) + " atoms exceeds cap " +
                        std::to_string(atom_cap));
  std::vector<Atom> out;
  out.reserve(a.size() * b.size());
  for (const Atom& x : a.atoms())
    for (const Atom& y : b.atoms()) out.push_back({x.value + y.value, x.prob * y.prob});
  return DiscreteDistribution(std::move(out), DiscreteDistribution::Unchecked{});
}

/// strict: P(X < t); weak: P(X <= t).
inline double cdf(const DiscreteDistribution& d, double t, CdfSide side = CdfSide::kStrict) {
  double s = 0.0;
  for (const Atom& a : d.atoms()) {
    if (a.value < t || (side == CdfSide::kWeak && a.value == t))
      s += a.prob;
    else
      break;
  }
  return std::min(s, 1.0);
}

/// E|X|^r.
inline double abs_moment(const DiscreteDistribution& d, double r) {
  if (!(r >= 0.0)) throw DomainError("abs_moment: r must be non-negative");
  double s = 0.0;
  for (const Atom& a : d.atoms()) s += a.prob * std::pow(std::fabs(a.value), r);
  return s;
}

/// E|X|^r 1(|X| <= cutoff) for kInside, E|X|^r 1(|X| > cutoff) for kOutside.
inline double truncated_moment(const DiscreteDistribution& d, double r, double cutoff,
                               Region region) {
  if (!(r >= 0.0)) throw DomainError("truncated_moment: r must be non-negative");
  if (!(cutoff > 0.0)) throw DomainError("truncated_moment: cutoff must be positive");
  double s = 0.0;
  for (const Atom& a : d.atoms()) {
    const double mag = std::fabs(a.value);
    if ((mag <= cutoff) == (region == Region::kInside)) s += a.prob * std::pow(mag, r);
  }
  return s;
}

/// Atoms of S_n / B_n with prefix and suffix masses for one-sided CDF lookups.
class NormalizedSum {
 public:
  explicit NormalizedSum(const DiscreteDistribution& sum, double bn) {
    values_.reserve(sum.size());
    probs_.reserve(sum.size());
    for (const Atom& a : sum.atoms()) {
      values_.push_back(a.value / bn);
      probs_.push_back(a.prob);
    }
    // below_[i] = mass strictly below atom i; above_[i] = mass at or above atom i.
    below_.assign(values_.size() + 1, 0.0);
    above_.assign(values_.size() + 1, 0.0);
    for (std::size_t i = 0; i < values_.size(); ++i) below_[i + 1] = below_[i] + probs_[i];
    for (std::size_t i = values_.size(); i-- > 0;) above_[i] = above_[i + 1] + probs_[i];
  }

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> probs() const noexcept { return probs_; }

  // P(S/B < x) (strict) or P(S/B <= x) (weak).
  double lower_mass(double x, CdfSide side) const noexcept { return below_[count_below(x, side)]; }
  // 1 - lower_mass(x, side), accumulated from the right.
  double upper_mass(double x, CdfSide side) const noexcept { return above_[count_below(x, side)]; }

 private:
  std::size_t count_below(double x, CdfSide side) const noexcept {
    auto it = side == CdfSide::kStrict ? std::lower_bound(values_.begin(), values_.end(), x)
                                       : std::upper_bound(values_.begin(), values_.end(), x);
    return static_cast<std::size_t>(it - values_.begin());
  }

  std::vector<double> values_;
  std::vector<double> probs_;
  std::vector<double> below_;
  std::vector<double> above_;
};

inline constexpr double kMeanTolerance = 1e-12;

/// Independent zero-mean summands X_1..X_n with cached variances and B_n^2.
class SummandSystem {
 public:
  explicit SummandSystem(std::vector<DiscreteDistribution> summands,
                         std::size_t atom_cap = kDefaultAtomCap)
      : summands_(std::move(summands)), atom_cap_(atom_cap), cache_(std::make_shared<Cache>()) {
    if (summands_.empty()) throw InvalidInput("summand system is empty");
    sigma2_.reserve(summands_.size());
    for (std::size_t k = 0; k < summands_.size(); ++k) {
      const auto& d = summands_[k];
      if (std::fabs(d.mean()) > kMeanTolerance)
        throw InvalidInput("summand " + std::to_string(k) + " has non-zero mean " +
                                  std::to_string(d.mean()));
      double second = 0.0;
      for (const Atom& a : d.atoms()) second += a.prob * a.value * a.value;
      if (!(second > 0.0))
        throw DegenerateError("summand " + std::to_string(k) + " has zero variance");
      sigma2_.push_back(second);
      bn2_ += second;
    }
  }

  explicit SummandSystem(DiscreteDistribution single) : SummandSystem(std::vector{std::move(single)}) {}

  std::size_t n() const noexcept { return summands_.size(); }
  std::span<const DiscreteDistribution> summands() const noexcept { return summands_; }
  std::span<const double> sigma2() const noexcept { return sigma2_; }
  double bn2() const noexcept { return bn2_; }
  double bn() const noexcept { return std::sqrt(bn2_); }

  // Law of S_n by exact convolution, computed once and shared between copies.
  const DiscreteDistribution& sum() const {
    std::call_once(cache_->once, [this] {
      DiscreteDistribution s = summands_.front();
      for (std::size_t k = 1; k < summands_.size(); ++k) s = convolve(s, summands_[k], atom_cap_);
      cache_->sum = std::make_unique<DiscreteDistribution>(std::move(s));
      cache_->normalized = std::make_unique<NormalizedSum>(*cache_->sum, bn());
    });
    return *cache_->sum;
  }

  const NormalizedSum& normalized_sum() const {
    sum();
    return *cache_->normalized;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<DiscreteDistribution> sum;
    std::unique_ptr<NormalizedSum> normalized;
  };

  std::vector<DiscreteDistribution> summands_;
  std::vector<double> sigma2_;
  double bn2_ = 0.0;
  std::size_t atom_cap_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace be_nonuniform
