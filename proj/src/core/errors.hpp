#pragma once

#include <stdexcept>
#include <string>

namespace modstab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A request exceeds the configured computational budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A class function failed to decompose with nonnegative integer multiplicities.
class NotGenuineCharacter : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. an oracle disagreed).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace modstab
