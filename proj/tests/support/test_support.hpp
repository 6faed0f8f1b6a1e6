#pragma once

// Helpers shared by the unit tests and the acceptance runner.

#include <array>
#include <cstdint>
#include <span>
#include <random>
#include <vector>

#include "lambdadd/graph.hpp"
#include "lambdadd/letter.hpp"
#include "lambdadd/truth_table.hpp"

namespace lambdadd::testing {

inline TruthTable random_table(unsigned arity, std::mt19937_64& rng) {
  return TruthTable::random(arity, rng);
}

/// Valuation with index `index` under the x0-most-significant convention,
/// stored in `buf`.
inline std::span<const bool> valuation_of(std::uint64_t index, unsigned arity,
                                          std::array<bool, TruthTable::kMaxArity>& buf) {
  for (unsigned j = 0; j < arity; ++j) buf[j] = (index >> (arity - 1 - j)) & 1u;
  return {buf.data(), arity};
}

/// Every function of the given arity (arity <= 4), in code order.
inline std::vector<TruthTable> all_tables(unsigned arity) {
  std::vector<TruthTable> out;
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << arity);
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) out.push_back(TruthTable::from_code(arity, c));
  return out;
}

/// Random unreduced graphs: arbitrary letters (including ones outside any
/// particular model), stacked and repeated negations, both terminals, and
/// shared or duplicated children so that every reduction pattern fires.
class RawGraphGenerator {
 public:
  RawGraphGenerator(Manager& mgr, std::uint64_t seed) : mgr_(mgr), rng_(seed) {}

  EdgeId generate(std::uint32_t arity) {
    EdgeId e;
    if (arity == 0) {
      e = mgr_.terminal_edge(coin());
    } else {
      switch (pick(5)) {
        case 0:
        case 1: {
          const EdgeId lo = generate(arity - 1);
          EdgeId hi;
          switch (pick(4)) {
            case 0: hi = lo; break;
            case 1: hi = mgr_.prepend(Letter::N, lo); break;
            default: hi = generate(arity - 1); break;
          }
          e = mgr_.intern_diamond(lo, hi);
          break;
        }
        default:
          e = mgr_.prepend(kElementaryLetters[pick(6)], generate(arity - 1));
          break;
      }
    }
    while (pick(4) == 0) e = mgr_.prepend(Letter::N, e);
    return e;
  }

 private:
  bool coin() { return (rng_() & 1u) != 0; }
  unsigned pick(unsigned n) { return static_cast<unsigned>(rng_() % n); }

  Manager& mgr_;
  std::mt19937_64 rng_;
};

}  // namespace lambdadd::testing
