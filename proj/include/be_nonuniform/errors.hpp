#pragma once

#include <stdexcept>
#include <string>

namespace be_nonuniform {

// Argument outside the mathematical domain of an operation (p not in (0,1),
// delta not in [0,1], non-finite x, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Zero-variance input where a non-degenerate law is required.
class DegenerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact convolution would exceed the configured atom cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Tabulated weight evaluated outside its grid.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Objective returned a non-finite value during a search.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double at)
      : std::runtime_error(what + " at " + std::to_string(at)), point_(at) {}

  double point() const noexcept { return point_; }

 private:
  double point_;
};

// Malformed distribution, system or weight description.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace be_nonuniform
