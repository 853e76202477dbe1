#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "be_nonuniform/distributions.hpp"

#ifndef BE_NONUNIFORM_SOURCE_DIR
#error "BE_NONUNIFORM_SOURCE_DIR must point at the repository root"
#endif

namespace be_nonuniform::testing {

inline std::string source_path(const std::string& rel) { return std::string(BE_NONUNIFORM_SOURCE_DIR) + "/" + rel; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct PhiGolden {
  double x;
  double phi;
  double phi_neg;
};

// Rows of tests/goldens/phi.csv (quadrature oracle, tools/gen_phi_golden.py).
inline std::vector<PhiGolden> load_phi_golden() {
  std::ifstream in(source_path("tests/goldens/phi.csv"));
  std::vector<PhiGolden> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string a, b, c;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    std::getline(ss, c, ',');
    rows.push_back({std::strtod(a.c_str(), nullptr), std::strtod(b.c_str(), nullptr),
                    std::strtod(c.c_str(), nullptr)});
  }
  return rows;
}

inline double rel_diff(double a, double b) {
  const double s = std::max(std::fabs(a), std::fabs(b));
  return s == 0.0 ? 0.0 : std::fabs(a - b) / s;
}

// P(S < t) (or <= t) by enumerating every tuple of summand atoms; independent
// of the sequential convolution used by SummandSystem.
inline double brute_force_cdf(const SummandSystem& system, double t, bool weak) {
  const auto summands = system.summands();
  std::vector<std::size_t> idx(summands.size(), 0);
  double total = 0.0;
  while (true) {
    double value = 0.0, prob = 1.0;
    for (std::size_t k = 0; k < summands.size(); ++k) {
      value += summands[k].atoms()[idx[k]].value;
      prob *= summands[k].atoms()[idx[k]].prob;
    }
    if (value < t || (weak && value <= t)) total += prob;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == summands[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return total;
}

}  // namespace be_nonuniform::testing
