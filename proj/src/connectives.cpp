#include "lambdadd/connectives.hpp"

#include <utility>

#include "lambdadd/error.hpp"
#include "lambdadd/reduction.hpp"
#include "memo_tags.hpp"

namespace lambdadd {

using detail::memo_key;
using detail::MemoOp;

namespace {

void check_pair(const Manager& mgr, const FuncHandle& a, const FuncHandle& b) {
  mgr.check_owner(a);
  mgr.check_owner(b);
  if (a.arity != b.arity) throw ContractError("operands differ in arity");
}

EdgeId and_edge(Manager& mgr, const Model& m, EdgeId a, EdgeId b) {
  if (a == b) return a;
  const std::uint32_t n = mgr.edge_arity(a);
  const EdgeId zero = constant(mgr, m, false, n);
  if (m.negation && a == push_neg(mgr, b)) return zero;
  if (a == zero || b == zero) return zero;
  const EdgeId one = constant(mgr, m, true, n);
  if (a == one) return b;
  if (b == one) return a;

  if (b < a) std::swap(a, b);
  const auto key = memo_key(MemoOp::And, m, a.value, b.value);
  if (auto it = mgr.memo().find(key); it != mgr.memo().end()) return EdgeId{it->second};
  ++mgr.counters().andb_recursions;
  const auto [a0, a1] = split(mgr, m, a);
  const auto [b0, b1] = split(mgr, m, b);
  const EdgeId lo = and_edge(mgr, m, a0, b0);
  const EdgeId hi = and_edge(mgr, m, a1, b1);
  const EdgeId result = cons_diamond(mgr, m, lo, hi);
  mgr.remember(key, result.value);
  return result;
}

EdgeId xor_edge(Manager& mgr, const Model& m, EdgeId a, EdgeId b) {
  const std::uint32_t n = mgr.edge_arity(a);
  bool parity = false;
  if (m.negation) {
    // ¬a ⊕ b = ¬(a ⊕ b): strip root negations into a parity bit.
    if (mgr.head_letter(a) == Letter::N) {
      a = mgr.rest(a);
      parity = !parity;
    }
    if (mgr.head_letter(b) == Letter::N) {
      b = mgr.rest(b);
      parity = !parity;
    }
  }
  auto finish = [&](EdgeId r) { return parity ? push_neg(mgr, r) : r; };

  if (a == b) return finish(constant(mgr, m, false, n));
  const EdgeId zero = constant(mgr, m, false, n);
  if (a == zero) return finish(b);
  if (b == zero) return finish(a);
  if (!m.negation) {
    const EdgeId one = constant(mgr, m, true, n);
    if (a == one) return negate(mgr, m, b);
    if (b == one) return negate(mgr, m, a);
    if (a == negate(mgr, m, b)) return one;
  }

  if (b < a) std::swap(a, b);
  const auto key = memo_key(MemoOp::Xor, m, a.value, b.value);
  if (auto it = mgr.memo().find(key); it != mgr.memo().end()) return finish(EdgeId{it->second});
  ++mgr.counters().xor_recursions;
  const auto [a0, a1] = split(mgr, m, a);
  const auto [b0, b1] = split(mgr, m, b);
  const EdgeId lo = xor_edge(mgr, m, a0, b0);
  const EdgeId hi = xor_edge(mgr, m, a1, b1);
  const EdgeId result = cons_diamond(mgr, m, lo, hi);
  mgr.remember(key, result.value);
  return finish(result);
}

EdgeId negb_edge(Manager& mgr, const Model& m, EdgeId e) {
  if (m.negation) return push_neg(mgr, e);
  const std::uint64_t before = mgr.counters().complement_recursions;
  const EdgeId r = negate(mgr, m, e);
  mgr.counters().negb_recursions += mgr.counters().complement_recursions - before;
  return r;
}

}  // namespace

FuncHandle cofactor(Manager& mgr, const Model& m, bool v0, const FuncHandle& h) {
  mgr.check_owner(h);
  if (h.arity == 0) throw ContractError("cannot cofactor an arity-0 function");
  const auto [lo, hi] = split(mgr, m, h.edge);
  return mgr.handle(v0 ? hi : lo);
}

FuncHandle andb(Manager& mgr, const Model& m, const FuncHandle& a, const FuncHandle& b) {
  check_pair(mgr, a, b);
  return mgr.handle(and_edge(mgr, m, a.edge, b.edge));
}

FuncHandle negb(Manager& mgr, const Model& m, const FuncHandle& h) {
  mgr.check_owner(h);
  return mgr.handle(negb_edge(mgr, m, h.edge));
}

FuncHandle apply(Manager& mgr, const Model& m, BoolOp op, const FuncHandle& a,
                 const FuncHandle& b) {
  if (op == BoolOp::Not) return negb(mgr, m, a);
  check_pair(mgr, a, b);
  switch (op) {
    case BoolOp::And: return mgr.handle(and_edge(mgr, m, a.edge, b.edge));
    case BoolOp::Or: {
      // a ∨ b = ¬(¬a ∧ ¬b)
      const EdgeId r = and_edge(mgr, m, negb_edge(mgr, m, a.edge), negb_edge(mgr, m, b.edge));
      return mgr.handle(negb_edge(mgr, m, r));
    }
    case BoolOp::Implies: {
      const EdgeId r = and_edge(mgr, m, a.edge, negb_edge(mgr, m, b.edge));
      return mgr.handle(negb_edge(mgr, m, r));
    }
    case BoolOp::Xor: return mgr.handle(xor_edge(mgr, m, a.edge, b.edge));
    case BoolOp::Not: break;
  }
  return negb(mgr, m, a);
}

FuncHandle projection(Manager& mgr, const Model& m, std::uint32_t arity, std::uint32_t index) {
  if (index >= arity) throw ContractError("variable index out of range");
  const std::uint32_t below = arity - index - 1;
  EdgeId e = cons_diamond(mgr, m, constant(mgr, m, false, below), constant(mgr, m, true, below));
  for (std::uint32_t i = 0; i < index; ++i) e = cons_diamond(mgr, m, e, e);
  return mgr.handle(e);
}

FuncHandle build_expr(Manager& mgr, const Model& m, const Expr& e, std::uint32_t arity) {
  require_supported(m);
  switch (e.kind) {
    case Expr::Kind::Const: return mgr.handle(constant(mgr, m, e.value, arity));
    case Expr::Kind::Var: return projection(mgr, m, arity, e.var);
    case Expr::Kind::Not: return negb(mgr, m, build_expr(mgr, m, *e.lhs, arity));
    case Expr::Kind::And:
      return andb(mgr, m, build_expr(mgr, m, *e.lhs, arity), build_expr(mgr, m, *e.rhs, arity));
    case Expr::Kind::Or:
      return apply(mgr, m, BoolOp::Or, build_expr(mgr, m, *e.lhs, arity),
                   build_expr(mgr, m, *e.rhs, arity));
    case Expr::Kind::Xor:
      return apply(mgr, m, BoolOp::Xor, build_expr(mgr, m, *e.lhs, arity),
                   build_expr(mgr, m, *e.rhs, arity));
  }
  throw ContractError("unknown expression node");
}

}  // namespace lambdadd
