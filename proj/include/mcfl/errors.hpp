#pragma once

#include <stdexcept>
#include <string>

namespace mcfl {

// Malformed or contract-violating input (bad files, precondition failures).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The instance admits no feasible assignment.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size cap (total demand, facility count, budget range) was hit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matrix that must be Monge is not.
class MongeViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mcfl
