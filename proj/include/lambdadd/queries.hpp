#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "lambdadd/graph.hpp"
#include "lambdadd/model.hpp"

namespace lambdadd {

using BigCount = boost::multiprecision::cpp_int;
using Valuation = std::vector<bool>;

/// False iff h is the reduced constant 0. Walks at most the root word
/// (arity + 1 letters) in models with U.
bool is_sat(Manager& mgr, const Model& m, const FuncHandle& h);
bool is_taut(Manager& mgr, const Model& m, const FuncHandle& h);

/// Identity comparison of two reduced handles of the same Manager and model.
bool equiv(const Manager& mgr, const FuncHandle& a, const FuncHandle& b);

/// Number of satisfying valuations. Works on any graph, reduced or not.
BigCount count_sat(const Manager& mgr, const FuncHandle& h);

/// One satisfying valuation found by a single root-to-terminal descent.
std::optional<Valuation> any_sat(Manager& mgr, const Model& m, const FuncHandle& h);

/// Enumerates satisfying valuations lazily, in lexicographic order
/// (x0 varies slowest, 0 before 1). Every explored branch is satisfiable,
/// so producing each valuation costs O(arity).
class SatEnumerator {
 public:
  SatEnumerator(Manager& mgr, const Model& m, const FuncHandle& h);

  std::optional<Valuation> next();

 private:
  struct Frame {
    bool free;  // remaining variables unconstrained
    EdgeId edge;
    bool parity;
    std::uint32_t depth;
    std::uint8_t next_choice;
  };

  Frame make_frame(bool free, EdgeId e, bool parity, std::uint32_t depth);
  bool satisfiable(EdgeId e, bool parity);
  std::optional<Frame> child(const Frame& f, bool choice);

  Manager& mgr_;
  Model model_;
  std::uint32_t arity_;
  Valuation current_;
  std::vector<Frame> stack_;
};

/// Convenience: drains a SatEnumerator.
std::vector<Valuation> all_sat(Manager& mgr, const Model& m, const FuncHandle& h);

}  // namespace lambdadd
