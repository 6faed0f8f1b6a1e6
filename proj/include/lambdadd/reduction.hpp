#pragma once

#include <utility>

#include "lambdadd/graph.hpp"
#include "lambdadd/model.hpp"
#include "lambdadd/truth_table.hpp"

namespace lambdadd {

/// Throws ModelError for models that cannot carry negation canonically
/// (negation over an alphabet that is not •-stable).
void require_supported(const Model& m);

/// Toggles a leading N: strips it if present, prepends it otherwise.
EdgeId push_neg(Manager& mgr, EdgeId e);

/// The reduced constant function of the given arity under m.
EdgeId constant(Manager& mgr, const Model& m, bool value, std::uint32_t arity);

/// Reduced form of the negation of a reduced edge. O(1) in negation
/// models; a memoized descent otherwise.
EdgeId negate(Manager& mgr, const Model& m, EdgeId e);

/// Normalized diamond constructor. Both children must already be reduced
/// under m and share an arity. Letters are tried in the fixed priority
/// U, X, C11, C10, C01, C00 (restricted to m); in negation models a
/// leading N on the lo child is first pushed above the diamond.
EdgeId cons_diamond(Manager& mgr, const Model& m, EdgeId lo, EdgeId hi);

/// Reverses the introduction rule of an elementary letter:
/// U → (e, e), X → (e, N.e), C(b,t) → constant t on side b and e on the other.
std::pair<EdgeId, EdgeId> elim_letter(Manager& mgr, const Model& m, Letter l, EdgeId e);

/// Cofactor pair (x0 = 0, x0 = 1) of a reduced edge, both reduced.
/// Requires arity >= 1.
std::pair<EdgeId, EdgeId> split(Manager& mgr, const Model& m, EdgeId e);

/// The reduction operator: maps any graph to its canonical form under m.
/// Inputs may use letters outside m; they are eliminated and re-derived.
FuncHandle reduce(Manager& mgr, const Model& m, const FuncHandle& h);

/// Canonical graph of a truth table under m.
FuncHandle compile(Manager& mgr, const Model& m, const TruthTable& f);

/// Exhaustive self-check for custom alphabets: for every function up to
/// max_arity, compile round-trips, is a fixed point of reduce, agrees with
/// reducing the raw Shannon tree, and distinct functions get distinct
/// graphs.
bool certify_canonicity(const Model& m, unsigned max_arity = 3);

}  // namespace lambdadd
