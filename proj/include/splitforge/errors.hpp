#pragma once

#include <stdexcept>
#include <string>

namespace splitforge {

// Caller supplied parameters outside an operation's domain. The CLI maps this
// to exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search ran out of its node/memory budget before deciding.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace splitforge
