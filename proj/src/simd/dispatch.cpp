#include <atomic>

#include "lambdadd/simd/bit_kernels.hpp"

namespace lambdadd::simd {

#if defined(LAMBDADD_HAVE_AVX2)
namespace detail {
const BitKernels& avx2_table() noexcept;
}
#endif

const BitKernels* avx2_kernels() noexcept {
#if defined(LAMBDADD_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &detail::avx2_table();
#endif
  return nullptr;
}

namespace {

const BitKernels* best_available() noexcept {
  if (const BitKernels* k = avx2_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<const BitKernels*>& selected() noexcept {
  static std::atomic<const BitKernels*> current{best_available()};
  return current;
}

}  // namespace

const BitKernels& active_kernels() noexcept {
  return *selected().load(std::memory_order_relaxed);
}

bool select_backend(Backend b) noexcept {
  const BitKernels* k = nullptr;
  switch (b) {
    case Backend::Auto: k = best_available(); break;
    case Backend::Scalar: k = &scalar_kernels(); break;
    case Backend::Avx2: k = avx2_kernels(); break;
  }
  if (k == nullptr) return false;
  selected().store(k, std::memory_order_relaxed);
  return true;
}

}  // namespace lambdadd::simd
