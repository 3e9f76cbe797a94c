#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ultraweights {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad table entries, unknown kinds, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis or algorithm precondition does not hold on the data.
/// Carries the index (or index tuple) that exhibits the violation.
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, std::vector<long long> witness = {})
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<long long>& witness() const noexcept { return witness_; }

 private:
  std::vector<long long> witness_;
};

/// Iterative numerics that did not converge within their configured limits.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ultraweights
