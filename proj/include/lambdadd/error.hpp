#pragma once

#include <stdexcept>
#include <string>

namespace lambdadd {

/// A caller broke an operation's precondition (arity mismatch, bad index...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested model cannot be used for the operation.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lambdadd
