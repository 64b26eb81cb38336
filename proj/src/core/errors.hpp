#pragma once

#include <stdexcept>
#include <string>

namespace eaqmds {

// Bad parameters: out-of-range delta, inadmissible q, mixed fields, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An oracle would exceed its configured enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed value contradicts a claimed one (closed form, bound, lemma).
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eaqmds
