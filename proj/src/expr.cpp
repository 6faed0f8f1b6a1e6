#include "lambdadd/expr.hpp"

#include <cctype>
#include <limits>

namespace lambdadd {
namespace {

class Parser {
 public:
  Parser(std::string_view src, unsigned arity) : src_(src), arity_(arity) {}

  Expr parse() {
    Expr e = parse_or();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.lhs = std::make_unique<Expr>(std::move(lhs));
    e.rhs = std::make_unique<Expr>(std::move(rhs));
    return e;
  }

  Expr parse_or() {
    Expr e = parse_xor();
    while (accept('|')) e = binary(Expr::Kind::Or, std::move(e), parse_xor());
    return e;
  }

  Expr parse_xor() {
    Expr e = parse_and();
    while (accept('^')) e = binary(Expr::Kind::Xor, std::move(e), parse_and());
    return e;
  }

  Expr parse_and() {
    Expr e = parse_unary();
    while (accept('&')) e = binary(Expr::Kind::And, std::move(e), parse_unary());
    return e;
  }

  Expr parse_unary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    const char c = src_[pos_];
    if (c == '~') {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::Not;
      e.lhs = std::make_unique<Expr>(parse_unary());
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr e = parse_or();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::Const;
      e.value = c == '1';
      return e;
    }
    if (c == 'x' || c == 'X') {
      const std::size_t start = pos_;
      ++pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        fail("expected variable index");
      unsigned long long index = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        index = index * 10 + static_cast<unsigned>(src_[pos_] - '0');
        if (index > std::numeric_limits<unsigned>::max()) break;
        ++pos_;
      }
      if (index >= arity_) throw ParseError("variable out of range", start);
      Expr e;
      e.kind = Expr::Kind::Var;
      e.var = static_cast<unsigned>(index);
      return e;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  unsigned arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view src, unsigned arity) { return Parser(src, arity).parse(); }

TruthTable expr_truth_table(const Expr& e, unsigned arity) {
  switch (e.kind) {
    case Expr::Kind::Const: return TruthTable::constant(arity, e.value);
    case Expr::Kind::Var: return TruthTable::projection(arity, e.var);
    case Expr::Kind::Not: return ~expr_truth_table(*e.lhs, arity);
    case Expr::Kind::And: return expr_truth_table(*e.lhs, arity) & expr_truth_table(*e.rhs, arity);
    case Expr::Kind::Or: return expr_truth_table(*e.lhs, arity) | expr_truth_table(*e.rhs, arity);
    case Expr::Kind::Xor: return expr_truth_table(*e.lhs, arity) ^ expr_truth_table(*e.rhs, arity);
  }
  return TruthTable(arity);
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Const: return e.value ? "1" : "0";
    case Expr::Kind::Var: return "x" + std::to_string(e.var);
    case Expr::Kind::Not: return "~" + to_string(*e.lhs);
    case Expr::Kind::And: return "(" + to_string(*e.lhs) + " & " + to_string(*e.rhs) + ")";
    case Expr::Kind::Or: return "(" + to_string(*e.lhs) + " | " + to_string(*e.rhs) + ")";
    case Expr::Kind::Xor: return "(" + to_string(*e.lhs) + " ^ " + to_string(*e.rhs) + ")";
  }
  return {};
}

}  // namespace lambdadd
