#include "lambdadd/reduction.hpp"

#include <unordered_map>
#include <unordered_set>

#include "lambdadd/error.hpp"
#include "memo_tags.hpp"

namespace lambdadd {

using detail::memo_key;
using detail::MemoOp;

void require_supported(const Model& m) {
  if (m.negation && !is_stable(m))
    throw ModelError("model " + m.name() +
                     " carries negation over an alphabet that is not closed under it");
}

EdgeId push_neg(Manager& mgr, EdgeId e) {
  if (mgr.head_letter(e) == Letter::N) return mgr.rest(e);
  return mgr.prepend(Letter::N, e);
}

EdgeId constant(Manager& mgr, const Model& m, bool value, std::uint32_t arity) {
  if (m.negation && value) return push_neg(mgr, constant(mgr, m, false, arity));
  const auto key = memo_key(MemoOp::Constant, m, arity, value ? 1 : 0);
  if (auto it = mgr.memo().find(key); it != mgr.memo().end()) return EdgeId{it->second};
  EdgeId result;
  if (arity == 0) {
    result = mgr.terminal_edge(value);
  } else {
    const EdgeId below = constant(mgr, m, value, arity - 1);
    result = cons_diamond(mgr, m, below, below);
  }
  mgr.remember(key, result.value);
  return result;
}

namespace {

EdgeId complement(Manager& mgr, const Model& m, EdgeId e) {
  const auto key = memo_key(MemoOp::Complement, m, e.value);
  if (auto it = mgr.memo().find(key); it != mgr.memo().end()) return EdgeId{it->second};
  EdgeId result;
  const std::uint32_t arity = mgr.edge_arity(e);
  if (arity == 0) {
    // Reduced arity-0 edges of negation-free models are bare terminals.
    const NodeId t = mgr.edge_target(e);
    if (!mgr.word_empty(mgr.edge_word(e)) || !Manager::is_terminal(t))
      throw ContractError("complement expects a reduced edge");
    result = mgr.terminal_edge(!Manager::terminal_value(t));
  } else {
    ++mgr.counters().complement_recursions;
    const auto [lo, hi] = split(mgr, m, e);
    const EdgeId nlo = complement(mgr, m, lo);
    const EdgeId nhi = complement(mgr, m, hi);
    result = cons_diamond(mgr, m, nlo, nhi);
  }
  mgr.remember(key, result.value);
  return result;
}

/// The letter-introducing match on children whose lo side carries no
/// leading negation (guaranteed by cons_diamond in negation models).
EdgeId introduce(Manager& mgr, const Model& m, EdgeId lo, EdgeId hi) {
  const std::uint32_t n = mgr.edge_arity(lo);
  if (m.has(Letter::U) && lo == hi) return mgr.prepend(Letter::U, lo);
  if (m.has(Letter::X) && hi == negate(mgr, m, lo)) return mgr.prepend(Letter::X, lo);
  if (m.has(Letter::C11) && hi == constant(mgr, m, true, n)) return mgr.prepend(Letter::C11, lo);
  if (m.has(Letter::C10) && hi == constant(mgr, m, false, n)) return mgr.prepend(Letter::C10, lo);
  if (m.negation) {
    if (lo == constant(mgr, m, false, n)) {
      if (mgr.head_letter(hi) == Letter::N) {
        // ■ ⋄ •φ  ≡  •.c01 φ
        if (m.has(Letter::C01))
          return mgr.prepend(Letter::N, mgr.prepend(Letter::C01, mgr.rest(hi)));
      } else if (m.has(Letter::C00)) {
        return mgr.prepend(Letter::C00, hi);
      }
    }
  } else {
    if (m.has(Letter::C01) && lo == constant(mgr, m, true, n)) return mgr.prepend(Letter::C01, hi);
    if (m.has(Letter::C00) && lo == constant(mgr, m, false, n)) return mgr.prepend(Letter::C00, hi);
  }
  return mgr.intern_diamond(lo, hi);
}

EdgeId reduce_edge(Manager& mgr, const Model& m, EdgeId e) {
  const auto key = memo_key(MemoOp::Reduce, m, e.value);
  if (auto it = mgr.memo().find(key); it != mgr.memo().end()) return EdgeId{it->second};
  EdgeId result;
  if (const auto head = mgr.head_letter(e)) {
    const EdgeId tail = mgr.rest(e);
    if (*head == Letter::N) {
      result = negate(mgr, m, reduce_edge(mgr, m, tail));
    } else {
      const auto [lo, hi] = elim_letter(mgr, m, *head, tail);
      const EdgeId rlo = reduce_edge(mgr, m, lo);
      const EdgeId rhi = reduce_edge(mgr, m, hi);
      result = cons_diamond(mgr, m, rlo, rhi);
    }
  } else {
    const NodeId n = mgr.edge_target(e);
    if (Manager::is_terminal(n)) {
      result = constant(mgr, m, Manager::terminal_value(n), 0);
    } else {
      const EdgeId rlo = reduce_edge(mgr, m, mgr.node_lo(n));
      const EdgeId rhi = reduce_edge(mgr, m, mgr.node_hi(n));
      result = cons_diamond(mgr, m, rlo, rhi);
    }
  }
  mgr.remember(key, result.value);
  return result;
}

class Compiler {
 public:
  Compiler(Manager& mgr, const Model& m) : mgr_(mgr), m_(m) {}

  EdgeId run(const TruthTable& f) {
    if (f.arity() <= 5) {
      const auto key = memo_key(MemoOp::CompileSmall, m_, f.arity(),
                                static_cast<std::uint32_t>(f.code()));
      if (auto it = mgr_.memo().find(key); it != mgr_.memo().end()) return EdgeId{it->second};
      const EdgeId e = build(f);
      mgr_.remember(key, e.value);
      return e;
    }
    if (auto it = large_.find(f); it != large_.end()) return it->second;
    const EdgeId e = build(f);
    large_.emplace(f, e);
    return e;
  }

 private:
  EdgeId build(const TruthTable& f) {
    if (f.arity() == 0) return constant(mgr_, m_, f.get(0), 0);
    const EdgeId lo = run(f.cofactor(false));
    const EdgeId hi = run(f.cofactor(true));
    return cons_diamond(mgr_, m_, lo, hi);
  }

  Manager& mgr_;
  Model m_;
  std::unordered_map<TruthTable, EdgeId, TruthTableHash> large_;
};

EdgeId raw_shannon_tree(Manager& mgr, const TruthTable& f) {
  if (f.arity() == 0) return mgr.terminal_edge(f.get(0));
  return mgr.intern_diamond(raw_shannon_tree(mgr, f.cofactor(false)),
                            raw_shannon_tree(mgr, f.cofactor(true)));
}

}  // namespace

EdgeId negate(Manager& mgr, const Model& m, EdgeId e) {
  if (m.negation) return push_neg(mgr, e);
  return complement(mgr, m, e);
}

EdgeId cons_diamond(Manager& mgr, const Model& m, EdgeId lo, EdgeId hi) {
  if (mgr.edge_arity(lo) != mgr.edge_arity(hi))
    throw ContractError("diamond children differ in arity");
  if (m.negation && mgr.head_letter(lo) == Letter::N) {
    // (•φ0) ⋄ φ1  ⇒  •(φ0 ⋄ •φ1)
    return push_neg(mgr, introduce(mgr, m, mgr.rest(lo), push_neg(mgr, hi)));
  }
  return introduce(mgr, m, lo, hi);
}

std::pair<EdgeId, EdgeId> elim_letter(Manager& mgr, const Model& m, Letter l, EdgeId e) {
  switch (l) {
    case Letter::N: throw ContractError("negation is not an elementary letter");
    case Letter::U: return {e, e};
    case Letter::X: return {e, mgr.prepend(Letter::N, e)};
    default: break;
  }
  const EdgeId c = constant(mgr, m, canalizing_value(l), mgr.edge_arity(e));
  if (canalizing_branch(l)) return {e, c};
  return {c, e};
}

std::pair<EdgeId, EdgeId> split(Manager& mgr, const Model& m, EdgeId e) {
  if (mgr.edge_arity(e) == 0) throw ContractError("cannot split an arity-0 function");
  const auto head = mgr.head_letter(e);
  if (!head) {
    const NodeId n = mgr.edge_target(e);
    return {mgr.node_lo(n), mgr.node_hi(n)};
  }
  const EdgeId tail = mgr.rest(e);
  switch (*head) {
    case Letter::N: {
      const auto [lo, hi] = split(mgr, m, tail);
      return {negate(mgr, m, lo), negate(mgr, m, hi)};
    }
    case Letter::U: return {tail, tail};
    case Letter::X: return {tail, negate(mgr, m, tail)};
    default: break;
  }
  const EdgeId c = constant(mgr, m, canalizing_value(*head), mgr.edge_arity(tail));
  if (canalizing_branch(*head)) return {tail, c};
  return {c, tail};
}

FuncHandle reduce(Manager& mgr, const Model& m, const FuncHandle& h) {
  require_supported(m);
  mgr.check_owner(h);
  return mgr.handle(reduce_edge(mgr, m, h.edge));
}

FuncHandle compile(Manager& mgr, const Model& m, const TruthTable& f) {
  require_supported(m);
  return mgr.handle(Compiler(mgr, m).run(f));
}

bool certify_canonicity(const Model& m, unsigned max_arity) {
  if (max_arity > 4) throw ContractError("certification is exhaustive; use max_arity <= 4");
  require_supported(m);
  for (unsigned n = 0; n <= max_arity; ++n) {
    Manager mgr;
    std::unordered_set<std::uint32_t> seen;
    const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t code = 0; code < count; ++code) {
      const TruthTable f = TruthTable::from_code(n, code);
      const FuncHandle h = compile(mgr, m, f);
      if (!(to_truth_table(mgr, h) == f)) return false;
      if (reduce(mgr, m, h) != h) return false;
      if (reduce(mgr, m, mgr.handle(raw_shannon_tree(mgr, f))) != h) return false;
      if (!seen.insert(h.edge.value).second) return false;
    }
  }
  return true;
}

}  // namespace lambdadd
