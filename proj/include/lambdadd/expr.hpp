#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "lambdadd/error.hpp"
#include "lambdadd/truth_table.hpp"

namespace lambdadd {

/// Boolean expression over x0..x_{n-1}.
///
///   or   := xor ('|' xor)*
///   xor  := and ('^' and)*
///   and  := unary ('&' unary)*
///   unary:= '~' unary | '(' or ')' | '0' | '1' | 'x' digits
struct Expr {
  enum class Kind { Const, Var, Not, And, Or, Xor };

  Kind kind = Kind::Const;
  bool value = false;  // Const
  unsigned var = 0;    // Var
  std::unique_ptr<Expr> lhs;  // Not uses lhs only
  std::unique_ptr<Expr> rhs;
};

class ParseError : public ContractError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : ContractError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Throws ParseError on syntax errors and out-of-range variables.
Expr parse_expr(std::string_view src, unsigned arity);

/// Truth table of an expression, evaluated directly on tables.
TruthTable expr_truth_table(const Expr& e, unsigned arity);

/// Fully parenthesized rendering.
std::string to_string(const Expr& e);

}  // namespace lambdadd
