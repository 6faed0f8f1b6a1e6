#include "lambdadd/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "lambdadd/error.hpp"

namespace lambdadd {

std::optional<Letter> parse_letter(std::string_view text) noexcept {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "u") return Letter::U;
  if (lower == "x") return Letter::X;
  if (lower == "c00") return Letter::C00;
  if (lower == "c01") return Letter::C01;
  if (lower == "c10") return Letter::C10;
  if (lower == "c11") return Letter::C11;
  if (lower == "n") return Letter::N;
  return std::nullopt;
}

TruthTable tt_apply(BoolOp op, const TruthTable& f, const std::optional<TruthTable>& g) {
  if (op == BoolOp::Not) return ~f;
  if (!g) throw ContractError("binary operator needs two operands");
  if (g->arity() != f.arity()) throw ContractError("truth table arity mismatch");
  switch (op) {
    case BoolOp::And: return f & *g;
    case BoolOp::Or: return f | *g;
    case BoolOp::Xor: return f ^ *g;
    case BoolOp::Implies: return ~f | *g;
    case BoolOp::Not: break;
  }
  return ~f;
}

bool tt_eval(const TruthTable& f, std::span<const bool> valuation) { return f.eval(valuation); }

TruthTable combine(Combinator comb, const TruthTable& f, const TruthTable& g) {
  if (f.arity() != g.arity()) throw ContractError("combinator operands differ in arity");
  switch (comb) {
    case Combinator::Shannon: return TruthTable::shannon(f, g);
    case Combinator::DavioPos: return TruthTable::shannon(f, f ^ g);
    case Combinator::DavioNeg: return TruthTable::shannon(f ^ g, f);
  }
  return TruthTable::shannon(f, g);
}

TruthTable apply_functor(Combinator comb, Letter letter, const TruthTable& f) {
  switch (letter) {
    case Letter::N: return ~f;
    case Letter::U: return combine(comb, f, f);
    case Letter::X: return combine(comb, f, ~f);
    default: break;
  }
  const TruthTable c = TruthTable::constant(f.arity(), canalizing_value(letter));
  return canalizing_branch(letter) ? combine(comb, f, c) : combine(comb, c, f);
}

bool TopClassification::is_canalizing(bool branch, bool value) const noexcept {
  return std::find(canalizing.begin(), canalizing.end(), CanalizingKind{branch, value}) !=
         canalizing.end();
}

TopClassification classify_top(const TruthTable& f) {
  if (f.arity() == 0) throw ContractError("classify_top needs arity >= 1");
  TopClassification c;
  c.low = f.cofactor(false);
  c.high = f.cofactor(true);
  c.useless = c.low == c.high;
  c.xor_variable = c.high == ~c.low;
  for (bool branch : {false, true}) {
    const TruthTable& side = branch ? c.high : c.low;
    for (bool value : {false, true})
      if (side.is_constant(value)) c.canalizing.push_back({branch, value});
  }
  return c;
}

}  // namespace lambdadd
