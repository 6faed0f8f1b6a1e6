#include "lambdadd/queries.hpp"

#include <unordered_map>

#include "lambdadd/error.hpp"
#include "lambdadd/reduction.hpp"

namespace lambdadd {
namespace {

BigCount power_of_two(std::uint32_t k) { return BigCount(1) << k; }

/// With U available, the reduced constant 0 is U^n ■ (no N) and the
/// constant 1 is N.U^n ■ (or U^n □ without negation). Both are recognized
/// by scanning the root word alone.
bool is_constant_by_scan(Manager& mgr, const Model& m, const FuncHandle& h, bool value) {
  WordId w = mgr.edge_word(h.edge);
  auto& touched = mgr.counters().sat_letters_touched;
  bool negated = false;
  if (m.negation && !mgr.word_empty(w) && mgr.word_head(w) == Letter::N) {
    ++touched;
    negated = true;
    w = mgr.word_tail(w);
  }
  if (negated != (m.negation && value)) return false;
  for (; !mgr.word_empty(w); w = mgr.word_tail(w)) {
    ++touched;
    if (mgr.word_head(w) != Letter::U) return false;
  }
  const NodeId t = mgr.edge_target(h.edge);
  if (!Manager::is_terminal(t)) return false;
  const bool terminal_expected = m.negation ? false : value;
  return Manager::terminal_value(t) == terminal_expected;
}

bool is_constant_function(Manager& mgr, const Model& m, const FuncHandle& h, bool value) {
  mgr.check_owner(h);
  if (m.has(Letter::U)) return is_constant_by_scan(mgr, m, h, value);
  return h.edge == constant(mgr, m, value, h.arity);
}

class Counter {
 public:
  explicit Counter(const Manager& mgr) : mgr_(mgr) {}

  BigCount edge(EdgeId e) {
    const NodeId t = mgr_.edge_target(e);
    BigCount c = node(t);
    std::uint32_t k = mgr_.node_arity(t);
    const std::vector<Letter> word = mgr_.letters(mgr_.edge_word(e));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      switch (*it) {
        case Letter::N: c = power_of_two(k) - c; continue;  // arity unchanged
        case Letter::U: c *= 2; break;
        case Letter::X: c = power_of_two(k); break;
        default:
          if (canalizing_value(*it)) c += power_of_two(k);
          break;
      }
      ++k;
    }
    return c;
  }

 private:
  BigCount node(NodeId n) {
    if (Manager::is_terminal(n)) return Manager::terminal_value(n) ? 1 : 0;
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    BigCount c = edge(mgr_.node_lo(n)) + edge(mgr_.node_hi(n));
    memo_.emplace(n, c);
    return c;
  }

  const Manager& mgr_;
  std::unordered_map<NodeId, BigCount> memo_;
};

}  // namespace

bool is_sat(Manager& mgr, const Model& m, const FuncHandle& h) {
  return !is_constant_function(mgr, m, h, false);
}

bool is_taut(Manager& mgr, const Model& m, const FuncHandle& h) {
  return is_constant_function(mgr, m, h, true);
}

bool equiv(const Manager& mgr, const FuncHandle& a, const FuncHandle& b) {
  mgr.check_owner(a);
  mgr.check_owner(b);
  return a.arity == b.arity && a.edge == b.edge;
}

BigCount count_sat(const Manager& mgr, const FuncHandle& h) {
  mgr.check_owner(h);
  return Counter(mgr).edge(h.edge);
}

std::optional<Valuation> any_sat(Manager& mgr, const Model& m, const FuncHandle& h) {
  mgr.check_owner(h);
  auto sat = [&](EdgeId e, bool parity) {
    return e != constant(mgr, m, parity, mgr.edge_arity(e));
  };
  EdgeId e = h.edge;
  bool parity = false;
  if (!sat(e, parity)) return std::nullopt;
  Valuation v;
  v.reserve(h.arity);
  for (;;) {
    if (const auto head = mgr.head_letter(e)) {
      const EdgeId r = mgr.rest(e);
      switch (*head) {
        case Letter::N: parity = !parity; break;
        case Letter::U: v.push_back(false); break;
        case Letter::X:
          if (sat(r, parity)) {
            v.push_back(false);
          } else {
            v.push_back(true);
            parity = !parity;
          }
          break;
        default: {
          const bool b = canalizing_branch(*head);
          if (canalizing_value(*head) != parity) {
            v.push_back(b);
            v.resize(h.arity, false);
            return v;
          }
          v.push_back(!b);
          break;
        }
      }
      e = r;
      continue;
    }
    const NodeId n = mgr.edge_target(e);
    if (Manager::is_terminal(n)) return v;
    if (sat(mgr.node_lo(n), parity)) {
      v.push_back(false);
      e = mgr.node_lo(n);
    } else {
      v.push_back(true);
      e = mgr.node_hi(n);
    }
  }
}

SatEnumerator::SatEnumerator(Manager& mgr, const Model& m, const FuncHandle& h)
    : mgr_(mgr), model_(m), arity_(h.arity), current_(h.arity, false) {
  mgr.check_owner(h);
  if (satisfiable(h.edge, false)) stack_.push_back(make_frame(false, h.edge, false, 0));
}

SatEnumerator::Frame SatEnumerator::make_frame(bool free, EdgeId e, bool parity,
                                               std::uint32_t depth) {
  if (!free) {
    while (mgr_.head_letter(e) == Letter::N) {
      e = mgr_.rest(e);
      parity = !parity;
    }
  }
  return Frame{free, e, parity, depth, 0};
}

bool SatEnumerator::satisfiable(EdgeId e, bool parity) {
  return e != constant(mgr_, model_, parity, mgr_.edge_arity(e));
}

std::optional<SatEnumerator::Frame> SatEnumerator::child(const Frame& f, bool choice) {
  const std::uint32_t d = f.depth + 1;
  if (f.free) return make_frame(true, f.edge, f.parity, d);
  auto guarded = [&](EdgeId e, bool parity) -> std::optional<Frame> {
    if (!satisfiable(e, parity)) return std::nullopt;
    return make_frame(false, e, parity, d);
  };
  if (const auto head = mgr_.head_letter(f.edge)) {
    const EdgeId r = mgr_.rest(f.edge);
    switch (*head) {
      case Letter::U: return guarded(r, f.parity);
      case Letter::X: return guarded(r, f.parity != choice);
      default: {
        if (choice == canalizing_branch(*head)) {
          if (canalizing_value(*head) == f.parity) return std::nullopt;
          return make_frame(true, r, f.parity, d);
        }
        return guarded(r, f.parity);
      }
    }
  }
  const NodeId n = mgr_.edge_target(f.edge);
  return guarded(choice ? mgr_.node_hi(n) : mgr_.node_lo(n), f.parity);
}

std::optional<Valuation> SatEnumerator::next() {
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.depth == arity_) {
      stack_.pop_back();
      return current_;
    }
    if (top.next_choice == 2) {
      stack_.pop_back();
      continue;
    }
    const bool choice = top.next_choice++ == 1;
    const std::uint32_t depth = top.depth;
    if (auto c = child(top, choice)) {
      current_[depth] = choice;
      stack_.push_back(*c);
    }
  }
  return std::nullopt;
}

std::vector<Valuation> all_sat(Manager& mgr, const Model& m, const FuncHandle& h) {
  std::vector<Valuation> out;
  SatEnumerator it(mgr, m, h);
  while (auto v = it.next()) out.push_back(std::move(*v));
  return out;
}

}  // namespace lambdadd
