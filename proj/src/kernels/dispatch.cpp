#include <cstdlib>
#include <string_view>

#include "splitforge/kernels.hpp"

namespace splitforge::kernels {

#if defined(SPLITFORGE_HAVE_AVX2_TU)
const KernelTable& avx2_table_impl();
#endif
#if defined(__aarch64__)
const KernelTable& neon_table_impl();
#endif

const KernelTable* avx2_table() {
#if defined(SPLITFORGE_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  }();
  if (supported) return &avx2_table_impl();
#endif
  return nullptr;
}

const KernelTable* neon_table() {
#if defined(__aarch64__)
  return &neon_table_impl();
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const char* forced = std::getenv("SPLITFORGE_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
      return &scalar_table();
    }
    if (const KernelTable* t = avx2_table()) return t;
    if (const KernelTable* t = neon_table()) return t;
    return &scalar_table();
  }();
  return *chosen;
}

}  // namespace splitforge::kernels
