#include <doctest.h>

#include "lambdadd/error.hpp"
#include "lambdadd/reduction.hpp"
#include "support/test_support.hpp"

using namespace lambdadd;

namespace {

EdgeId word_edge(Manager& mgr, std::initializer_list<Letter> letters, bool terminal) {
  const std::vector<Letter> w(letters);
  return mgr.prepend(mgr.make_word(w), mgr.terminal_edge(terminal));
}

std::string sig(const Manager& mgr, EdgeId e) { return signature(mgr, e); }

// N only at word position 0 and never at the head of a lo edge.
bool negation_normal(const Manager& mgr, EdgeId root) {
  auto word_ok = [&](EdgeId e, bool lo) {
    const auto ls = mgr.letters(mgr.edge_word(e));
    for (std::size_t i = 0; i < ls.size(); ++i)
      if (ls[i] == Letter::N && (i > 0 || lo)) return false;
    return true;
  };
  bool ok = word_ok(root, false);
  for_each_diamond(mgr, root, [&](NodeId n) {
    ok = ok && word_ok(mgr.node_lo(n), true) && word_ok(mgr.node_hi(n), false);
  });
  return ok;
}

bool has_terminal_one(const Manager& mgr, EdgeId root) {
  bool found = mgr.edge_target(root) == Manager::terminal(true);
  for_each_diamond(mgr, root, [&](NodeId n) {
    found = found || mgr.edge_target(mgr.node_lo(n)) == Manager::terminal(true) ||
            mgr.edge_target(mgr.node_hi(n)) == Manager::terminal(true);
  });
  return found;
}

}  // namespace

TEST_CASE("push_neg") {
  Manager mgr;
  CHECK(sig(mgr, push_neg(mgr, word_edge(mgr, {Letter::N, Letter::X}, false))) == "[X]0");
  CHECK(sig(mgr, push_neg(mgr, word_edge(mgr, {Letter::U}, false))) == "[N.U]0");
  const EdgeId e = word_edge(mgr, {Letter::C10, Letter::U}, false);
  CHECK(push_neg(mgr, push_neg(mgr, e)) == e);
}

TEST_CASE("constants") {
  Manager mgr;
  CHECK(sig(mgr, constant(mgr, models::ONUCX, false, 3)) == "[U.U.U]0");
  CHECK(sig(mgr, constant(mgr, models::ONUCX, true, 2)) == "[N.U.U]0");
  CHECK(sig(mgr, constant(mgr, models::OUC, true, 2)) == "[U.U]1");
  CHECK(sig(mgr, constant(mgr, models::SN, true, 0)) == "[N]0");
  CHECK(sig(mgr, constant(mgr, models::S, false, 1)) == "[e](" "[e]0,[e]0)");
  // Without U the constant is a chain of canalizing letters.
  CHECK(sig(mgr, constant(mgr, models::OC10, false, 2)) == "[C10.C10]0");
  CHECK(sig(mgr, constant(mgr, models::OC10, true, 1)) == "[e]([e]1,[e]1)");
}

TEST_CASE("cons_diamond") {
  Manager mgr;
  const EdgeId zero = mgr.terminal_edge(false);
  CHECK(sig(mgr, cons_diamond(mgr, models::ONUCX, zero, zero)) == "[U]0");
  CHECK(sig(mgr, cons_diamond(mgr, models::ONUCX, zero, push_neg(mgr, zero))) == "[X]0");
  CHECK(sig(mgr, cons_diamond(mgr, models::ONUC, zero, push_neg(mgr, zero))) == "[C11]0");
  CHECK(sig(mgr, cons_diamond(mgr, models::ONU, zero, push_neg(mgr, zero))) == "[e]([e]0,[N]0)");
  // norm-Shannon: a negated lo child is pushed above the diamond
  CHECK(sig(mgr, cons_diamond(mgr, models::ONU, push_neg(mgr, zero), zero)) ==
        "[N]([e]0,[N]0)");

  const EdgeId x = word_edge(mgr, {Letter::X}, false);
  const EdgeId u = constant(mgr, models::OUC10, false, 1);
  CHECK(cons_diamond(mgr, models::OUC10, x, u) == mgr.prepend(Letter::C10, x));
  CHECK_THROWS_AS(cons_diamond(mgr, models::OUC10, x, zero), ContractError);
}

TEST_CASE("elim_letter") {
  Manager mgr;
  const auto& m = models::ONUCX;
  const EdgeId x = word_edge(mgr, {Letter::X}, false);
  const auto [c0, c1] = elim_letter(mgr, m, Letter::C00, x);
  CHECK(c0 == constant(mgr, m, false, 1));
  CHECK(c1 == x);
  const auto [u0, u1] = elim_letter(mgr, m, Letter::U, x);
  CHECK(u0 == x);
  CHECK(u1 == x);
  const EdgeId zero = mgr.terminal_edge(false);
  const auto [x0, x1] = elim_letter(mgr, m, Letter::X, zero);
  CHECK(sig(mgr, x0) == "[e]0");
  CHECK(sig(mgr, x1) == "[N]0");
  const auto [k0, k1] = elim_letter(mgr, models::OUC, Letter::C11, zero);
  CHECK(k0 == zero);
  CHECK(sig(mgr, k1) == "[e]1");
  CHECK_THROWS_AS(elim_letter(mgr, m, Letter::N, zero), ContractError);
}

TEST_CASE("reduce") {
  Manager mgr;
  const auto c10 = mgr.handle(word_edge(mgr, {Letter::C10}, false));
  CHECK(signature(mgr, reduce(mgr, models::OUC, c10)) == "[U]0");

  const EdgeId one = mgr.terminal_edge(true), zero = mgr.terminal_edge(false);
  const auto raw = mgr.handle(
      mgr.intern_diamond(mgr.intern_diamond(one, one), mgr.intern_diamond(zero, zero)));
  CHECK(signature(mgr, reduce(mgr, models::OUC, raw)) == "[C10.U]1");
  CHECK(signature(mgr, reduce(mgr, models::ONUC, raw)) == "[N.C11.U]0");
  CHECK(signature(mgr, reduce(mgr, models::ONUCX, raw)) == "[N.X.U]0");

  CHECK(signature(mgr, reduce(mgr, models::ONU, mgr.handle(one))) == "[N]0");
  CHECK(signature(mgr, reduce(mgr, models::OU, mgr.handle(word_edge(mgr, {Letter::N}, false)))) ==
        "[e]1");
  const auto nnn = mgr.handle(word_edge(mgr, {Letter::N, Letter::N, Letter::N, Letter::U}, true));
  CHECK(signature(mgr, reduce(mgr, models::ONUCX, nnn)) == "[U]0");
}

TEST_CASE("reduce is idempotent and preserves semantics") {
  Manager mgr;
  testing::RawGraphGenerator gen(mgr, 77);
  for (int i = 0; i < 200; ++i) {
    const auto h = mgr.handle(gen.generate(static_cast<std::uint32_t>(i % 5)));
    for (const auto& np : preset_models()) {
      const auto r = reduce(mgr, np.model, h);
      CHECK(reduce(mgr, np.model, r) == r);
      CHECK(to_truth_table(mgr, r) == to_truth_table(mgr, h));
      CHECK(r == compile(mgr, np.model, to_truth_table(mgr, h)));
    }
  }
}

TEST_CASE("compile") {
  Manager mgr;
  const auto x0x1 = TruthTable::projection(2, 0) & TruthTable::projection(2, 1);
  CHECK(signature(mgr, compile(mgr, models::ONUCX, x0x1)) == "[C00.X]0");

  std::mt19937_64 rng(4);
  for (unsigned n = 0; n <= 6; ++n) {
    const auto f = testing::random_table(n, rng);
    const auto h = compile(mgr, models::S, f);
    std::uint64_t diamonds = 0;
    bool lettered = !mgr.word_empty(mgr.edge_word(h.edge));
    for_each_diamond(mgr, h.edge, [&](NodeId d) {
      ++diamonds;
      lettered = lettered || !mgr.word_empty(mgr.edge_word(mgr.node_lo(d))) ||
                 !mgr.word_empty(mgr.edge_word(mgr.node_hi(d)));
    });
    CHECK_FALSE(lettered);
    CHECK(diamonds <= (std::uint64_t{1} << n) - 1 + (n == 0 ? 1 : 0));
  }

  for (const auto& np : preset_models())
    for (unsigned n = 0; n <= 5; ++n) {
      const auto f = testing::random_table(n, rng);
      const auto h = compile(mgr, np.model, f);
      CHECK(to_truth_table(mgr, h) == f);
      CHECK(reduce(mgr, np.model, h) == h);
      CHECK(h.arity == n);
      if (np.model.negation) {
        CHECK(negation_normal(mgr, h.edge));
        CHECK_FALSE(has_terminal_one(mgr, h.edge));
      }
    }
}

TEST_CASE("cofactors recombine to the original") {
  Manager mgr;
  std::mt19937_64 rng(8);
  for (const auto& np : preset_models())
    for (int i = 0; i < 30; ++i) {
      const auto h = compile(mgr, np.model, testing::random_table(1 + i % 5, rng));
      const auto [lo, hi] = split(mgr, np.model, h.edge);
      CHECK(cons_diamond(mgr, np.model, lo, hi) == h.edge);
    }
}

TEST_CASE("unsupported and custom models") {
  Manager mgr;
  const auto bad = *Model::parse("custom:U,C10+neg");
  CHECK_THROWS_AS(compile(mgr, bad, TruthTable(2)), ModelError);
  CHECK_THROWS_AS(require_supported(bad), ModelError);
  CHECK_NOTHROW(require_supported(*Model::parse("custom:X,C00,C01+neg")));

  CHECK(certify_canonicity(*Model::parse("custom:X,C00,C01+neg"), 3));
  CHECK(certify_canonicity(*Model::parse("custom:X"), 3));
  CHECK(certify_canonicity(models::OC10, 3));
  CHECK_THROWS_AS(certify_canonicity(models::S, 5), ContractError);
}
