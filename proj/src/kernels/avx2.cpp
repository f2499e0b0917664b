// AVX2 variants. This translation unit is compiled with -mavx2 -mpopcnt and
// must only be entered after dispatch has confirmed CPU support.

#include <immintrin.h>

#include <bit>

#include "splitforge/kernels.hpp"

namespace splitforge::kernels {
namespace {

// Nibble-lookup popcount of a 256-bit lane, summed into four 64-bit counters.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                         _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(va, vb)));
  }
  std::size_t count = horizontal_sum(acc);
  for (; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

std::size_t and_into_avx2(std::uint64_t* dst, const std::uint64_t* src,
                          std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* pd = reinterpret_cast<__m256i*>(dst + i);
    const __m256i v = _mm256_and_si256(
        _mm256_loadu_si256(pd),
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
    _mm256_storeu_si256(pd, v);
    acc = _mm256_add_epi64(acc, popcount_lanes(v));
  }
  std::size_t count = horizontal_sum(acc);
  for (; i < words; ++i) {
    dst[i] &= src[i];
    count += static_cast<std::size_t>(std::popcount(dst[i]));
  }
  return count;
}

void or_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* pd = reinterpret_cast<__m256i*>(dst + i);
    _mm256_storeu_si256(
        pd, _mm256_or_si256(_mm256_loadu_si256(pd),
                            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i))));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

std::size_t popcount_avx2(const std::uint64_t* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_add_epi64(
        acc, popcount_lanes(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i))));
  }
  std::size_t count = horizontal_sum(acc);
  for (; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i]));
  return count;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4),
                                             _mm256_loadu_pd(b + i + 4)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, _mm256_loadu_pd(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable& avx2_table_impl() {
  static const KernelTable table{
      "avx2",        and_popcount_avx2, and_into_avx2, or_into_avx2,
      popcount_avx2, dot_avx2,          axpy_avx2,
  };
  return table;
}

}  // namespace splitforge::kernels
