#pragma once

// Ground-truth semantics on dense truth tables. Nothing here knows about
// diagrams; the diagram modules are checked against these functions.

#include <optional>
#include <vector>

#include "lambdadd/letter.hpp"
#include "lambdadd/truth_table.hpp"

namespace lambdadd {

enum class BoolOp { Not, And, Or, Xor, Implies };

/// Pointwise operator. `g` must be present (and of equal arity) for binary ops.
TruthTable tt_apply(BoolOp op, const TruthTable& f,
                    const std::optional<TruthTable>& g = std::nullopt);

bool tt_eval(const TruthTable& f, std::span<const bool> valuation);

/// Shannon, positive Davio and negative Davio combinators.
enum class Combinator { Shannon, DavioPos, DavioNeg };

/// Arity n+1 result; the fresh variable x0 is prepended.
///   Shannon:  (¬x0 ∧ f) ∨ (x0 ∧ g)
///   DavioPos: f ⊕ (x0 ∧ g)
///   DavioNeg: f ⊕ (¬x0 ∧ g)
TruthTable combine(Combinator comb, const TruthTable& f, const TruthTable& g);

/// The operator a letter denotes, built with the given combinator:
/// U ↦ f∘f, X ↦ f∘¬f, C(0,t) ↦ t∘f, C(1,t) ↦ f∘t, N ↦ ¬f.
TruthTable apply_functor(Combinator comb, Letter letter, const TruthTable& f);

inline TruthTable apply_functor(Letter letter, const TruthTable& f) {
  return apply_functor(Combinator::Shannon, letter, f);
}

struct CanalizingKind {
  bool branch;
  bool value;
  friend bool operator==(const CanalizingKind&, const CanalizingKind&) = default;
};

/// How the top variable x0 enters f. Several categories may hold at once.
struct TopClassification {
  bool useless = false;
  bool xor_variable = false;
  std::vector<CanalizingKind> canalizing;
  TruthTable low;   // x0 = 0
  TruthTable high;  // x0 = 1

  bool plain() const noexcept { return !useless && !xor_variable && canalizing.empty(); }
  bool is_canalizing(bool branch, bool value) const noexcept;
};

/// Requires f.arity() >= 1.
TopClassification classify_top(const TruthTable& f);

}  // namespace lambdadd
