#pragma once

#include <cstdint>
#include <string>

#include "lambdadd/graph.hpp"
#include "lambdadd/model.hpp"
#include "lambdadd/truth_table.hpp"

namespace lambdadd {

struct SizeReport {
  std::string model;
  std::uint32_t arity = 0;
  std::uint64_t diamonds = 0;         // distinct reachable ⋄ nodes
  std::uint64_t terminals = 0;        // distinct reachable terminal nodes
  std::uint64_t letters = 0;          // elementary letters over distinct reachable edges
  std::uint64_t negation_letters = 0; // N letters over the same edges

  /// Node count used by the compression bounds: diamonds + terminals.
  std::uint64_t nodes() const noexcept { return diamonds + terminals; }
  /// Size of the equivalent letter-free graph: every elementary letter
  /// stands for one diamond.
  std::uint64_t s_size() const noexcept { return diamonds + letters; }
  /// Each of the 2·diamonds + 1 edges carries at most `arity` letters.
  bool label_bound_holds() const noexcept {
    return letters <= (2 * diamonds + 1) * std::uint64_t{arity};
  }
};

SizeReport measure(const Manager& mgr, const Model& m, const FuncHandle& h);

/// Verdict of the compression-factor inequalities between a model `lower`
/// and a more expressive model `upper` for one function:
///   N_upper ≤ N_lower ≤ (n+1)/2 · (N_upper + 1)
/// and, when upper is lower plus negation, N_lower ≤ 2 · N_upper.
struct BoundVerdict {
  std::uint32_t arity = 0;
  std::uint64_t lower_nodes = 0;
  std::uint64_t upper_nodes = 0;
  bool monotone = false;      // N_upper ≤ N_lower
  bool linear_gain = false;   // 2·N_lower ≤ (n+1)·(N_upper + 1)
  bool negation_pair = false; // upper = lower + negation
  bool doubling = true;       // N_lower ≤ 2·N_upper (checked for negation pairs)

  bool holds() const noexcept { return monotone && linear_gain && doubling; }
};

/// Verdict from sizes already measured for the same function.
/// Throws ModelError unless lattice_leq(lower, upper).
BoundVerdict compare_sizes(const Model& lower, const SizeReport& lower_size, const Model& upper,
                           const SizeReport& upper_size);

/// Throws ModelError unless lattice_leq(lower, upper).
BoundVerdict check_bounds(const TruthTable& f, const Model& lower, const Model& upper);

/// Same, reusing graphs already compiled in `mgr`.
BoundVerdict check_bounds(Manager& mgr, const TruthTable& f, const Model& lower,
                          const Model& upper);

/// Header of the bench / compare CSV output.
inline constexpr const char* kCsvHeader = "model,arity,seed,diamonds,letters,s_size";

std::string csv_row(const SizeReport& r, std::uint64_t seed);

}  // namespace lambdadd
