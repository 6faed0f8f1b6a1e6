#pragma once

#include "lambdadd/expr.hpp"
#include "lambdadd/graph.hpp"
#include "lambdadd/model.hpp"
#include "lambdadd/oracle.hpp"

namespace lambdadd {

// All operands must be reduced under the model passed alongside them and
// belong to `mgr`. Results are reduced under the same model.

/// Restriction x0 = v0; the result has arity h.arity - 1.
FuncHandle cofactor(Manager& mgr, const Model& m, bool v0, const FuncHandle& h);

/// Conjunction by memoized simultaneous cofactoring.
FuncHandle andb(Manager& mgr, const Model& m, const FuncHandle& a, const FuncHandle& b);

/// Negation: toggles the root N in negation models, otherwise rebuilds the
/// complement by descent.
FuncHandle negb(Manager& mgr, const Model& m, const FuncHandle& h);

/// Or, Xor and Implies (Not and And are forwarded to negb / andb; `b` is
/// ignored for Not).
FuncHandle apply(Manager& mgr, const Model& m, BoolOp op, const FuncHandle& a,
                 const FuncHandle& b);

/// x_index as a function of arity `arity`.
FuncHandle projection(Manager& mgr, const Model& m, std::uint32_t arity, std::uint32_t index);

/// Builds the reduced graph of an expression bottom-up.
FuncHandle build_expr(Manager& mgr, const Model& m, const Expr& e, std::uint32_t arity);

}  // namespace lambdadd
