#pragma once

#include <stdexcept>
#include <string>

namespace entromax {

/// Malformed or out-of-domain input (non-Hermitian matrix, bad flag, ...).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation whose result could not be certified at any tried precision.
class NumericInstabilityError : public std::runtime_error {
public:
  NumericInstabilityError(const std::string& what, std::string last_estimate = {},
                          std::string previous_estimate = {})
      : std::runtime_error(what),
        last_estimate_(std::move(last_estimate)),
        previous_estimate_(std::move(previous_estimate)) {}

  const std::string& last_estimate() const { return last_estimate_; }
  const std::string& previous_estimate() const { return previous_estimate_; }

private:
  std::string last_estimate_;
  std::string previous_estimate_;
};

/// The marginal lies on (or outside) the boundary of the convex hull, so the
/// dual program has no finite optimizer.
class InteriorityError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

}  // namespace entromax
