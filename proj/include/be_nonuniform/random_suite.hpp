#pragma once

// Deterministic random inputs for the property suites.
//
// Generator: SplitMix64. Item i of a suite run with seed S uses its own
// stream whose initial state is S + (i + 1) * 0xD1B54A32D192ED03 (mod 2^64);
// each draw adds 0x9E3779B97F4A7C15 to the state and returns the SplitMix64
// finalizer of the new state. A uniform double in [0, 1) is (draw >> 11) * 2^-53.
// Because every item owns its stream, results do not depend on how items are
// distributed over worker threads.
//
// Random system: n = 1 + floor(5 U) summands; each summand has
// 2 + floor(3 U) atoms with values 10 U - 5 and masses from a flat Dirichlet
// draw (E_j / sum E, E_j = -log(1 - U)); values are then shifted by the mean.

#include <cmath>
#include <cstdint>
#include <vector>

#include "be_nonuniform/distributions.hpp"

namespace be_nonuniform {

class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kStreamStride = 0xD1B54A32D192ED03ULL;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed + (index + 1) * kStreamStride);
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // 0 .. n-1
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

 private:
  std::uint64_t state_;
};

struct RandomSystemConfig {
  std::size_t max_summands = 5;
  std::size_t min_atoms = 2;
  std::size_t max_atoms = 4;
  double value_bound = 5.0;
};

inline DiscreteDistribution random_centered_law(SplitMix64& rng, std::size_t atoms, double bound) {
  std::vector<double> values(atoms), masses(atoms);
  double total = 0.0;
  for (std::size_t j = 0; j < atoms; ++j) {
    values[j] = rng.uniform(-bound, bound);
    masses[j] = -std::log(1.0 - rng.uniform());
    total += masses[j];
  }
  double mean = 0.0;
  for (std::size_t j = 0; j < atoms; ++j) {
    masses[j] /= total;
    mean += masses[j] * values[j];
  }
  std::vector<Atom> out;
  for (std::size_t j = 0; j < atoms; ++j)
    if (masses[j] > 0.0) out.push_back({values[j] - mean, masses[j]});
  return DiscreteDistribution(std::move(out));
}

inline SummandSystem random_system(SplitMix64& rng, const RandomSystemConfig& cfg = {}) {
  const std::size_t n = 1 + rng.below(cfg.max_summands);
  std::vector<DiscreteDistribution> summands;
  summands.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t atoms = cfg.min_atoms + rng.below(cfg.max_atoms - cfg.min_atoms + 1);
    summands.push_back(random_centered_law(rng, atoms, cfg.value_bound));
  }
  return SummandSystem(std::move(summands));
}

}  // namespace be_nonuniform
