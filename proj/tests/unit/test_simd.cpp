#include <doctest.h>

#include <random>
#include <vector>

#include "lambdadd/simd/bit_kernels.hpp"
#include "lambdadd/truth_table.hpp"
#include "support/test_support.hpp"

using namespace lambdadd;
namespace simd = lambdadd::simd;

namespace {

std::vector<simd::Word64> random_words(std::size_t n, std::mt19937_64& rng) {
  std::vector<simd::Word64> v(n);
  for (auto& w : v) w = rng();
  return v;
}

void check_equivalent(const simd::BitKernels& ref, const simd::BitKernels& k) {
  std::mt19937_64 rng(1234);
  for (std::size_t n = 0; n <= 70; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto a = random_words(n, rng);
      auto b = random_words(n, rng);
      std::vector<simd::Word64> r1(n), r2(n);

      ref.and_words(r1.data(), a.data(), b.data(), n);
      k.and_words(r2.data(), a.data(), b.data(), n);
      CHECK(r1 == r2);
      ref.or_words(r1.data(), a.data(), b.data(), n);
      k.or_words(r2.data(), a.data(), b.data(), n);
      CHECK(r1 == r2);
      ref.xor_words(r1.data(), a.data(), b.data(), n);
      k.xor_words(r2.data(), a.data(), b.data(), n);
      CHECK(r1 == r2);
      ref.not_words(r1.data(), a.data(), n);
      k.not_words(r2.data(), a.data(), n);
      CHECK(r1 == r2);
      CHECK(ref.popcount(a.data(), n) == k.popcount(a.data(), n));
      CHECK(ref.equal(a.data(), b.data(), n) == k.equal(a.data(), b.data(), n));
      CHECK(k.equal(a.data(), a.data(), n));
      if (n > 0) {
        b = a;
        b[rng() % n] ^= simd::Word64{1} << (rng() % 64);
        CHECK_FALSE(k.equal(a.data(), b.data(), n));
      }
    }
  }
  const std::vector<simd::Word64> ones(37, ~simd::Word64{0});
  CHECK(k.popcount(ones.data(), ones.size()) == 37 * 64);
}

}  // namespace

TEST_CASE("scalar kernels") {
  const auto& s = simd::scalar_kernels();
  const simd::Word64 a[] = {0b1100, 0xFFFF'FFFF'FFFF'FFFFull};
  const simd::Word64 b[] = {0b1010, 1};
  simd::Word64 r[2];
  s.and_words(r, a, b, 2);
  CHECK(r[0] == 0b1000);
  CHECK(r[1] == 1);
  s.xor_words(r, a, b, 2);
  CHECK(r[0] == 0b0110);
  CHECK(s.popcount(a, 2) == 66);
}

TEST_CASE("avx2 kernels match the scalar reference") {
  const simd::BitKernels* avx = simd::avx2_kernels();
  if (avx == nullptr) {
    MESSAGE("AVX2 unavailable; equivalence check skipped");
    return;
  }
  check_equivalent(simd::scalar_kernels(), *avx);
}

TEST_CASE("truth-table results do not depend on the backend") {
  std::mt19937_64 rng(99);
  for (unsigned n : {0u, 3u, 6u, 7u, 9u, 12u}) {
    const auto f = lambdadd::testing::random_table(n, rng);
    const auto g = lambdadd::testing::random_table(n, rng);
    REQUIRE(simd::select_backend(simd::Backend::Scalar));
    CHECK(simd::active_kernels().name == simd::scalar_kernels().name);
    const auto s_and = f & g, s_or = f | g, s_xor = f ^ g, s_not = ~f;
    const auto s_pop = f.popcount();
    const bool s_eq = f == g;
    if (simd::select_backend(simd::Backend::Avx2)) {
      CHECK((f & g) == s_and);
      CHECK((f | g) == s_or);
      CHECK((f ^ g) == s_xor);
      CHECK(~f == s_not);
      CHECK(f.popcount() == s_pop);
      CHECK((f == g) == s_eq);
    }
  }
  CHECK(simd::select_backend(simd::Backend::Auto));
}
