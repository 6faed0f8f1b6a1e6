#pragma once

// Bulk kernels over packed 64-bit words. Every backend computes exactly the
// same results as the scalar reference; the dispatcher picks the widest one
// the running CPU supports.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace lambdadd::simd {

using Word64 = std::uint64_t;

struct BitKernels {
  std::string_view name;
  void (*and_words)(Word64* dst, const Word64* a, const Word64* b, std::size_t n);
  void (*or_words)(Word64* dst, const Word64* a, const Word64* b, std::size_t n);
  void (*xor_words)(Word64* dst, const Word64* a, const Word64* b, std::size_t n);
  void (*not_words)(Word64* dst, const Word64* a, std::size_t n);
  std::uint64_t (*popcount)(const Word64* a, std::size_t n);
  bool (*equal)(const Word64* a, const Word64* b, std::size_t n);
};

const BitKernels& scalar_kernels() noexcept;

/// nullptr when the build or the CPU lacks AVX2.
const BitKernels* avx2_kernels() noexcept;

enum class Backend { Auto, Scalar, Avx2 };

/// Kernels used by TruthTable. Defaults to Auto.
const BitKernels& active_kernels() noexcept;

/// Returns false (and leaves the selection unchanged) if the backend is
/// unavailable on this machine.
bool select_backend(Backend b) noexcept;

}  // namespace lambdadd::simd
