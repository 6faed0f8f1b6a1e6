#include "lambdadd/simd/bit_kernels.hpp"

#include <bit>

namespace lambdadd::simd {
namespace {

void and_scalar(Word64* dst, const Word64* a, const Word64* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_scalar(Word64* dst, const Word64* a, const Word64* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void xor_scalar(Word64* dst, const Word64* a, const Word64* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void not_scalar(Word64* dst, const Word64* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = ~a[i];
}

std::uint64_t popcount_scalar(const Word64* a, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

bool equal_scalar(const Word64* a, const Word64* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

const BitKernels& scalar_kernels() noexcept {
  static const BitKernels k{"scalar",   and_scalar,      or_scalar, xor_scalar,
                            not_scalar, popcount_scalar, equal_scalar};
  return k;
}

}  // namespace lambdadd::simd
