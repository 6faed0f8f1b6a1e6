#include <doctest.h>

#include <regex>
#include <sstream>

#include "lambdadd/error.hpp"
#include "lambdadd/graph.hpp"
#include "lambdadd/reduction.hpp"
#include "support/test_support.hpp"

using namespace lambdadd;

namespace {

// x1 ⊕ x2 ⊕ (¬x0 ∧ x3)
TruthTable example1() {
  TruthTable t(4);
  for (std::uint64_t i = 0; i < 16; ++i) {
    const bool x0 = i & 8, x1 = i & 4, x2 = i & 2, x3 = i & 1;
    t.set(i, x1 ^ x2 ^ (!x0 && x3));
  }
  return t;
}

// Loose structural check of the DOT subset that dot_export emits.
bool looks_like_dot(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (line != "digraph lambdadd {") return false;
  const std::regex stmt(
      R"(  (root|t[01]|n\d+)( -> (t[01]|n\d+))? \[[a-z]+=("[^"]*"|[a-z]+)(,[a-z]+=("[^"]*"|[a-z]+))*\];)");
  bool closed = false;
  while (std::getline(in, line)) {
    if (closed) return false;
    if (line == "}") {
      closed = true;
      continue;
    }
    if (!std::regex_match(line, stmt)) return false;
  }
  return closed;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("intern_diamond") {
  Manager mgr;
  const EdgeId zero = mgr.terminal_edge(false);
  const EdgeId d1 = mgr.intern_diamond(zero, zero);
  const EdgeId d2 = mgr.intern_diamond(zero, zero);
  CHECK(d1 == d2);
  CHECK(mgr.edge_arity(d1) == 1);
  CHECK(mgr.word_empty(mgr.edge_word(d1)));
  CHECK_THROWS_AS(mgr.intern_diamond(mgr.intern_diamond(d1, d1), d1), ContractError);
}

TEST_CASE("prepend") {
  Manager mgr;
  const EdgeId zero = mgr.terminal_edge(false);
  CHECK(mgr.prepend(Manager::epsilon(), zero) == zero);
  const EdgeId uu = mgr.prepend(Letter::U, mgr.prepend(Letter::U, zero));
  CHECK(mgr.edge_arity(uu) == 2);
  CHECK(signature(mgr, mgr.handle(uu)) == "[U.U]0");
  const EdgeId nn = mgr.prepend(Letter::N, mgr.prepend(Letter::N, zero));
  CHECK(signature(mgr, mgr.handle(nn)) == "[N.N]0");
  CHECK(mgr.edge_arity(nn) == 0);
  const Letter w[] = {Letter::C10, Letter::N, Letter::X};
  const EdgeId e = mgr.prepend(mgr.make_word(w), zero);
  CHECK(mgr.letters(mgr.edge_word(e)) == std::vector<Letter>{Letter::C10, Letter::N, Letter::X});
  CHECK(mgr.edge_arity(e) == 2);
  CHECK(mgr.head_letter(e) == Letter::C10);
  CHECK(signature(mgr, mgr.rest(e)) == "[N.X]0");
  CHECK_FALSE(mgr.head_letter(zero).has_value());
}

TEST_CASE("eval") {
  Manager mgr;
  const EdgeId zero = mgr.terminal_edge(false);
  const auto uu = mgr.handle(mgr.prepend(Letter::U, mgr.prepend(Letter::U, zero)));
  const bool v10[] = {true, false};
  CHECK_FALSE(eval(mgr, uu, v10));
  const auto x = mgr.handle(mgr.prepend(Letter::X, zero));
  const bool one[] = {true}, nil[] = {false};
  CHECK(eval(mgr, x, one));
  CHECK_FALSE(eval(mgr, x, nil));
  CHECK_THROWS_AS(eval(mgr, x, v10), ContractError);

  const auto h = compile(mgr, models::ONUCX, example1());
  const bool v0101[] = {false, true, false, true};
  CHECK_FALSE(eval(mgr, h, v0101));
}

TEST_CASE("to_truth_table") {
  Manager mgr;
  const EdgeId zero = mgr.terminal_edge(false);
  CHECK(to_truth_table(mgr, mgr.handle(mgr.prepend(Letter::U, zero))) ==
        TruthTable::from_bits({0, 0}));
  CHECK(to_truth_table(mgr, mgr.handle(mgr.prepend(Letter::N, zero))) ==
        TruthTable::constant(0, true));
  const auto h = compile(mgr, models::ONUCX, example1());
  CHECK(to_truth_table(mgr, h).popcount() == 8);

  // Every letter of a raw graph agrees with the functor semantics.
  testing::RawGraphGenerator gen(mgr, 5);
  for (int i = 0; i < 300; ++i) {
    const auto r = mgr.handle(gen.generate(static_cast<std::uint32_t>(i % 6)));
    const auto t = to_truth_table(mgr, r);
    std::array<bool, TruthTable::kMaxArity> buf{};
    for (std::uint64_t k = 0; k < t.size(); ++k)
      CHECK(eval(mgr, r, testing::valuation_of(k, r.arity, buf)) == t.get(k));
    CHECK(arity_consistent(mgr, r));
  }
}

TEST_CASE("signature") {
  Manager mgr;
  const auto& m = models::ONUCX;
  CHECK(signature(mgr, compile(mgr, m, TruthTable::constant(2, false))) == "[U.U]0");
  CHECK(signature(mgr, compile(mgr, m, TruthTable::projection(1, 0))) == "[X]0");
  CHECK(signature(mgr, compile(mgr, m, ~TruthTable::projection(1, 0))) == "[N.X]0");
  CHECK(signature(mgr, compile(mgr, m, example1())) == "[e]([X.X.X]0,[X.X.U]0)");
  CHECK(signature(mgr, mgr.terminal_edge(true)) == "[e]1");
}

TEST_CASE("dot_export") {
  Manager mgr;
  const std::string t0 = dot_export(mgr, mgr.handle(mgr.terminal_edge(false)));
  CHECK(looks_like_dot(t0));
  CHECK(count_of(t0, "shape=box") == 1);
  CHECK(count_of(t0, "shape=diamond") == 0);

  const std::string d = dot_export(mgr, compile(mgr, models::ONUCX, example1()));
  CHECK(looks_like_dot(d));
  CHECK(count_of(d, "shape=diamond") == 1);
  CHECK(count_of(d, "style=dashed") == 1);
  CHECK(count_of(d, "style=solid") == 1);
  CHECK(d.find("label=\"X.X.X\"") != std::string::npos);

  std::mt19937_64 rng(3);
  for (const auto& np : preset_models())
    CHECK(looks_like_dot(dot_export(mgr, compile(mgr, np.model, testing::random_table(5, rng)))));
}

TEST_CASE("handles are bound to their manager") {
  Manager a, b;
  const auto h = a.handle(a.terminal_edge(false));
  CHECK_NOTHROW(a.check_owner(h));
  CHECK_THROWS_AS(b.check_owner(h), ContractError);
  CHECK_FALSE(arity_consistent(b, h));
}

TEST_CASE("compiling twice yields identical edges") {
  Manager mgr;
  std::mt19937_64 rng(11);
  for (const auto& np : preset_models()) {
    const auto f = testing::random_table(6, rng);
    CHECK(compile(mgr, np.model, f) == compile(mgr, np.model, f));
  }
}

TEST_CASE("memo limit flushes without changing results") {
  Manager capped, free;
  capped.set_memo_limit(16);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const auto f = testing::random_table(7, rng);
    CHECK(signature(capped, compile(capped, models::ONUCX, f)) ==
          signature(free, compile(free, models::ONUCX, f)));
    CHECK(capped.memo().size() <= 16);
  }
}
