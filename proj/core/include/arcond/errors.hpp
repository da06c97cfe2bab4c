#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace arcond {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: syntax, unknown keys, wrong shapes.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a structural invariant. Carries every
/// violation found, not only the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// A computation that cannot produce a result for valid input
/// (division by zero, irrational pairing, non-integral quotient filtration).
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace arcond
