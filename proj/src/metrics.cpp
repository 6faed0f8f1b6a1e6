#include "lambdadd/metrics.hpp"

#include <unordered_set>

#include "lambdadd/error.hpp"
#include "lambdadd/reduction.hpp"

namespace lambdadd {

SizeReport measure(const Manager& mgr, const Model& m, const FuncHandle& h) {
  mgr.check_owner(h);
  SizeReport r;
  r.model = m.name();
  r.arity = h.arity;
  std::unordered_set<EdgeId> edges{h.edge};
  std::unordered_set<NodeId> terminals;
  auto note = [&](EdgeId e) {
    edges.insert(e);
    const NodeId t = mgr.edge_target(e);
    if (Manager::is_terminal(t)) terminals.insert(t);
  };
  note(h.edge);
  for_each_diamond(mgr, h.edge, [&](NodeId n) {
    ++r.diamonds;
    note(mgr.node_lo(n));
    note(mgr.node_hi(n));
  });
  for (EdgeId e : edges) {
    const WordId w = mgr.edge_word(e);
    r.letters += mgr.word_elementary(w);
    r.negation_letters += mgr.word_length(w) - mgr.word_elementary(w);
  }
  r.terminals = terminals.size();
  return r;
}

BoundVerdict compare_sizes(const Model& lower, const SizeReport& lower_size, const Model& upper,
                           const SizeReport& upper_size) {
  if (!lattice_leq(lower, upper))
    throw ModelError(lower.name() + " is not below " + upper.name() + " in the model lattice");
  if (lower_size.arity != upper_size.arity) throw ContractError("reports differ in arity");
  BoundVerdict v;
  v.arity = lower_size.arity;
  v.lower_nodes = lower_size.nodes();
  v.upper_nodes = upper_size.nodes();
  const std::uint64_t n = v.arity;
  v.monotone = v.upper_nodes <= v.lower_nodes;
  v.linear_gain = 2 * v.lower_nodes <= (n + 1) * (v.upper_nodes + 1);
  v.negation_pair = !lower.negation && upper.negation && lower.letters == upper.letters;
  if (v.negation_pair) v.doubling = v.lower_nodes <= 2 * v.upper_nodes;
  return v;
}

BoundVerdict check_bounds(Manager& mgr, const TruthTable& f, const Model& lower,
                          const Model& upper) {
  if (!lattice_leq(lower, upper))
    throw ModelError(lower.name() + " is not below " + upper.name() + " in the model lattice");
  return compare_sizes(lower, measure(mgr, lower, compile(mgr, lower, f)), upper,
                       measure(mgr, upper, compile(mgr, upper, f)));
}

BoundVerdict check_bounds(const TruthTable& f, const Model& lower, const Model& upper) {
  Manager mgr;
  return check_bounds(mgr, f, lower, upper);
}

std::string csv_row(const SizeReport& r, std::uint64_t seed) {
  return r.model + "," + std::to_string(r.arity) + "," + std::to_string(seed) + "," +
         std::to_string(r.diamonds) + "," + std::to_string(r.letters) + "," +
         std::to_string(r.s_size());
}

}  // namespace lambdadd
