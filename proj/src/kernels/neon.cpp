// NEON variants for aarch64, where Advanced SIMD is architecturally
// guaranteed.

#include <arm_neon.h>

#include <bit>

#include "splitforge/kernels.hpp"

namespace splitforge::kernels {
namespace {

std::size_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint8x16_t v = vreinterpretq_u8_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
  }
  std::size_t count = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
  for (; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

std::size_t and_into_neon(std::uint64_t* dst, const std::uint64_t* src,
                          std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i));
    vst1q_u64(dst + i, v);
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v))))));
  }
  std::size_t count = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
  for (; i < words; ++i) {
    dst[i] &= src[i];
    count += static_cast<std::size_t>(std::popcount(dst[i]));
  }
  return count;
}

void or_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

std::size_t popcount_neon(const std::uint64_t* a, std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(
                             vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i)))))));
  }
  std::size_t count = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
  for (; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i]));
  return count;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double sum = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable& neon_table_impl() {
  static const KernelTable table{
      "neon",        and_popcount_neon, and_into_neon, or_into_neon,
      popcount_neon, dot_neon,          axpy_neon,
  };
  return table;
}

}  // namespace splitforge::kernels
