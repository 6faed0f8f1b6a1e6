#include <doctest.h>

#include "lambdadd/error.hpp"
#include "lambdadd/metrics.hpp"
#include "lambdadd/reduction.hpp"
#include "support/test_support.hpp"

using namespace lambdadd;

namespace {

TruthTable example1() {
  return TruthTable::projection(4, 1) ^ TruthTable::projection(4, 2) ^
         (~TruthTable::projection(4, 0) & TruthTable::projection(4, 3));
}

}  // namespace

TEST_CASE("measure") {
  Manager mgr;
  const auto z = measure(mgr, models::ONUCX, compile(mgr, models::ONUCX, TruthTable(3)));
  CHECK(z.diamonds == 0);
  CHECK(z.letters == 3);
  CHECK(z.terminals == 1);
  CHECK(z.nodes() == 1);
  CHECK(z.s_size() == 3);
  CHECK(z.model == "o-nucx");

  const auto ex = example1();
  const auto r = measure(mgr, models::ONUCX, compile(mgr, models::ONUCX, ex));
  CHECK(r.diamonds == 1);
  CHECK(r.letters == 6);
  CHECK(r.label_bound_holds());

  const auto uc10 = measure(mgr, models::OUC10, compile(mgr, models::OUC10, ex)).diamonds;
  const auto nuc = measure(mgr, models::ONUC, compile(mgr, models::ONUC, ex)).diamonds;
  CHECK(uc10 >= nuc);
  CHECK(nuc >= r.diamonds);

  const auto one = measure(mgr, models::ONU, compile(mgr, models::ONU, ~TruthTable(2)));
  CHECK(one.letters == 2);
  CHECK(one.negation_letters == 1);

  // Shared subgraphs are counted once.
  const auto s = measure(mgr, models::S, compile(mgr, models::S, TruthTable::projection(3, 2)));
  CHECK(s.diamonds == 3);
  CHECK(s.terminals == 2);
}

TEST_CASE("check_bounds") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const auto f = testing::random_table(5, rng);
    const auto same = check_bounds(f, models::OU, models::OU);
    CHECK(same.holds());
    CHECK(same.lower_nodes == same.upper_nodes);
    CHECK(check_bounds(f, models::OU, models::OUC10).holds());
    const auto neg = check_bounds(f, models::OU, models::ONU);
    CHECK(neg.negation_pair);
    CHECK(neg.holds());
  }
  CHECK_THROWS_AS(check_bounds(TruthTable(2), models::ONU, models::OUC10), ModelError);
  CHECK_THROWS_AS(check_bounds(TruthTable(2), models::ONUCX, models::OU), ModelError);
}

TEST_CASE("csv") {
  CHECK(std::string(kCsvHeader) == "model,arity,seed,diamonds,letters,s_size");
  Manager mgr;
  const auto r = measure(mgr, models::ONUCX, compile(mgr, models::ONUCX, example1()));
  CHECK(csv_row(r, 42) == "o-nucx,4,42,1,6,7");
}
