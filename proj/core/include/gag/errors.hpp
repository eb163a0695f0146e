#pragma once

#include <stdexcept>
#include <string>

namespace gag {

// An argument broke an operation's precondition (index out of range, width
// mismatch, malformed table, inconsistent search spec).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive computation was refused because its input exceeds the
// configured size guard.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gag
