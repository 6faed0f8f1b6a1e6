#include "lambdadd/graph.hpp"

#include <atomic>
#include <sstream>
#include <unordered_set>

#include "lambdadd/error.hpp"
#include "lambdadd/oracle.hpp"

namespace lambdadd {
namespace {

std::uint64_t next_manager_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

Manager::Manager() : id_(next_manager_id()) {
  words_.push_back({Letter::U, WordId{0}, 0, 0});  // ε
  nodes_.push_back({EdgeId{0}, EdgeId{0}, 0});      // ■
  nodes_.push_back({EdgeId{0}, EdgeId{0}, 0});      // □
}

WordId Manager::word_cons(Letter head, WordId tail) {
  const std::uint64_t key = pack(tail.value, static_cast<std::uint32_t>(head));
  auto [it, inserted] = word_table_.try_emplace(key, static_cast<std::uint32_t>(words_.size()));
  if (inserted) {
    const WordCell& t = words_[tail.value];
    words_.push_back({head, tail, t.length + 1, t.elementary + (is_elementary(head) ? 1u : 0u)});
  }
  return WordId{it->second};
}

WordId Manager::make_word(std::span<const Letter> letters) {
  WordId w = epsilon();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = word_cons(*it, w);
  return w;
}

std::vector<Letter> Manager::letters(WordId w) const {
  std::vector<Letter> out;
  out.reserve(word_length(w));
  for (; !word_empty(w); w = word_tail(w)) out.push_back(word_head(w));
  return out;
}

EdgeId Manager::edge(WordId word, NodeId target) {
  const std::uint64_t key = pack(word.value, target.value);
  auto [it, inserted] = edge_table_.try_emplace(key, static_cast<std::uint32_t>(edges_.size()));
  if (inserted)
    edges_.push_back({word, target, word_elementary(word) + node_arity(target)});
  return EdgeId{it->second};
}

std::optional<Letter> Manager::head_letter(EdgeId e) const noexcept {
  const WordId w = edge_word(e);
  if (word_empty(w)) return std::nullopt;
  return word_head(w);
}

EdgeId Manager::rest(EdgeId e) {
  const WordId w = edge_word(e);
  if (word_empty(w)) throw ContractError("rest() of an edge with an empty word");
  return edge(word_tail(w), edge_target(e));
}

EdgeId Manager::intern_diamond(EdgeId lo, EdgeId hi) {
  const std::uint32_t arity = edge_arity(lo);
  if (arity != edge_arity(hi)) throw ContractError("diamond children differ in arity");
  const std::uint64_t key = pack(lo.value, hi.value);
  auto [it, inserted] = node_table_.try_emplace(key, static_cast<std::uint32_t>(nodes_.size()));
  if (inserted) nodes_.push_back({lo, hi, arity + 1});
  return edge(epsilon(), NodeId{it->second});
}

EdgeId Manager::prepend(WordId word, EdgeId e) {
  if (word_empty(word)) return e;
  const std::vector<Letter> front = letters(word);
  WordId w = edge_word(e);
  for (auto it = front.rbegin(); it != front.rend(); ++it) w = word_cons(*it, w);
  return edge(w, edge_target(e));
}

EdgeId Manager::prepend(Letter letter, EdgeId e) {
  return edge(word_cons(letter, edge_word(e)), edge_target(e));
}

void Manager::check_owner(const FuncHandle& h) const {
  if (h.owner != id_) throw ContractError("handle belongs to a different Manager");
  if (h.edge.value >= edges_.size() || edge_arity(h.edge) != h.arity)
    throw ContractError("malformed function handle");
}

bool eval(const Manager& mgr, const FuncHandle& h, std::span<const bool> valuation) {
  mgr.check_owner(h);
  if (valuation.size() != h.arity) throw ContractError("valuation length does not match arity");
  bool parity = false;
  std::size_t pos = 0;
  EdgeId e = h.edge;
  for (;;) {
    for (WordId w = mgr.edge_word(e); !mgr.word_empty(w); w = mgr.word_tail(w)) {
      const Letter l = mgr.word_head(w);
      switch (l) {
        case Letter::N: parity = !parity; continue;
        case Letter::U: break;
        case Letter::X:
          if (valuation[pos]) parity = !parity;
          break;
        default:
          if (valuation[pos] == canalizing_branch(l)) return canalizing_value(l) != parity;
          break;
      }
      ++pos;
    }
    const NodeId n = mgr.edge_target(e);
    if (Manager::is_terminal(n)) return Manager::terminal_value(n) != parity;
    e = valuation[pos++] ? mgr.node_hi(n) : mgr.node_lo(n);
  }
}

namespace {

class TableBuilder {
 public:
  explicit TableBuilder(const Manager& mgr) : mgr_(mgr) {}

  TruthTable edge_table(EdgeId e) {
    if (auto it = edges_.find(e); it != edges_.end()) return it->second;
    TruthTable t = node_table(mgr_.edge_target(e));
    const std::vector<Letter> word = mgr_.letters(mgr_.edge_word(e));
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = apply_functor(*it, t);
    edges_.emplace(e, t);
    return t;
  }

 private:
  TruthTable node_table(NodeId n) {
    if (Manager::is_terminal(n)) return TruthTable::constant(0, Manager::terminal_value(n));
    return TruthTable::shannon(edge_table(mgr_.node_lo(n)), edge_table(mgr_.node_hi(n)));
  }

  const Manager& mgr_;
  std::unordered_map<EdgeId, TruthTable> edges_;
};

void word_tokens(const Manager& mgr, WordId w, std::ostream& os, char sep) {
  if (mgr.word_empty(w)) {
    os << 'e';
    return;
  }
  bool first = true;
  for (; !mgr.word_empty(w); w = mgr.word_tail(w)) {
    if (!first) os << sep;
    first = false;
    os << token(mgr.word_head(w));
  }
}

void write_signature(const Manager& mgr, EdgeId e, std::ostream& os) {
  os << '[';
  word_tokens(mgr, mgr.edge_word(e), os, '.');
  os << ']';
  const NodeId n = mgr.edge_target(e);
  if (Manager::is_terminal(n)) {
    os << (Manager::terminal_value(n) ? '1' : '0');
    return;
  }
  os << '(';
  write_signature(mgr, mgr.node_lo(n), os);
  os << ',';
  write_signature(mgr, mgr.node_hi(n), os);
  os << ')';
}

}  // namespace

TruthTable to_truth_table(const Manager& mgr, const FuncHandle& h) {
  mgr.check_owner(h);
  if (h.arity > TruthTable::kMaxArity)
    throw ContractError("arity exceeds the truth-table limit");
  return TableBuilder(mgr).edge_table(h.edge);
}

std::string signature(const Manager& mgr, EdgeId e) {
  std::ostringstream os;
  write_signature(mgr, e, os);
  return os.str();
}

std::string signature(const Manager& mgr, const FuncHandle& h) {
  mgr.check_owner(h);
  return signature(mgr, h.edge);
}

void for_each_diamond(const Manager& mgr, EdgeId root, const std::function<void(NodeId)>& visit) {
  std::unordered_set<NodeId> seen;
  // explicit stack: (node, children_done)
  std::vector<std::pair<NodeId, bool>> stack;
  const NodeId top = mgr.edge_target(root);
  if (Manager::is_terminal(top)) return;
  stack.push_back({top, false});
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      visit(n);
      continue;
    }
    if (!seen.insert(n).second) continue;
    stack.push_back({n, true});
    for (EdgeId child : {mgr.node_hi(n), mgr.node_lo(n)}) {
      const NodeId c = mgr.edge_target(child);
      if (!Manager::is_terminal(c) && !seen.contains(c)) stack.push_back({c, false});
    }
  }
}

std::string dot_export(const Manager& mgr, const FuncHandle& h) {
  mgr.check_owner(h);
  std::ostringstream os;
  std::unordered_set<NodeId> terminals;
  auto note_terminal = [&](EdgeId e) {
    const NodeId n = mgr.edge_target(e);
    if (Manager::is_terminal(n)) terminals.insert(n);
  };
  auto label = [&](EdgeId e) {
    std::ostringstream l;
    if (!mgr.word_empty(mgr.edge_word(e))) word_tokens(mgr, mgr.edge_word(e), l, '.');
    return l.str();
  };
  auto name = [](NodeId n) {
    if (Manager::is_terminal(n)) return std::string(Manager::terminal_value(n) ? "t1" : "t0");
    return "n" + std::to_string(n.value);
  };

  std::ostringstream body;
  note_terminal(h.edge);
  body << "  root -> " << name(mgr.edge_target(h.edge)) << " [label=\"" << label(h.edge)
       << "\"];\n";
  for_each_diamond(mgr, h.edge, [&](NodeId n) {
    body << "  " << name(n) << " [shape=diamond,label=\"\"];\n";
    const EdgeId lo = mgr.node_lo(n);
    const EdgeId hi = mgr.node_hi(n);
    note_terminal(lo);
    note_terminal(hi);
    body << "  " << name(n) << " -> " << name(mgr.edge_target(lo)) << " [style=dashed,label=\""
         << label(lo) << "\"];\n";
    body << "  " << name(n) << " -> " << name(mgr.edge_target(hi)) << " [style=solid,label=\""
         << label(hi) << "\"];\n";
  });

  os << "digraph lambdadd {\n";
  os << "  root [shape=invtriangle,label=\"\",tooltip=\"arity " << h.arity << "\"];\n";
  for (bool v : {false, true})
    if (terminals.contains(Manager::terminal(v)))
      os << "  " << name(Manager::terminal(v)) << " [shape=box,label=\"" << (v ? 1 : 0)
         << "\"];\n";
  os << body.str() << "}\n";
  return os.str();
}

bool arity_consistent(const Manager& mgr, const FuncHandle& h) {
  if (h.owner != mgr.id() || mgr.edge_arity(h.edge) != h.arity) return false;
  bool ok = true;
  auto edge_ok = [&](EdgeId e) {
    const std::uint32_t expect =
        mgr.word_elementary(mgr.edge_word(e)) + mgr.node_arity(mgr.edge_target(e));
    return mgr.edge_arity(e) == expect;
  };
  ok = edge_ok(h.edge);
  for_each_diamond(mgr, h.edge, [&](NodeId n) {
    const EdgeId lo = mgr.node_lo(n);
    const EdgeId hi = mgr.node_hi(n);
    ok = ok && edge_ok(lo) && edge_ok(hi) && mgr.edge_arity(lo) == mgr.edge_arity(hi) &&
         mgr.node_arity(n) == mgr.edge_arity(lo) + 1;
  });
  // Word element counts are recomputed from the letters themselves.
  auto word_ok = [&](WordId w) {
    std::uint32_t n = 0;
    for (Letter l : mgr.letters(w)) n += is_elementary(l) ? 1 : 0;
    return n == mgr.word_elementary(w);
  };
  ok = ok && word_ok(mgr.edge_word(h.edge));
  for_each_diamond(mgr, h.edge, [&](NodeId n) {
    ok = ok && word_ok(mgr.edge_word(mgr.node_lo(n))) && word_ok(mgr.edge_word(mgr.node_hi(n)));
  });
  return ok;
}

}  // namespace lambdadd
