#pragma once
// Word-parallel kernels behind the bitset and dense linear-algebra hot loops.
//
// Every kernel has a scalar reference implementation. Wider variants (AVX2 on
// x86-64, NEON on aarch64) are compiled into separate translation units and
// selected once at runtime from CPU feature detection. Setting the
// environment variable SPLITFORGE_KERNELS=scalar forces the reference path.
//
// Integer kernels must agree bit-for-bit across variants; floating-point
// kernels may differ only by summation order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace splitforge::kernels {

struct KernelTable {
  std::string_view name;

  // popcount(a & b) over min(a.size(), b.size()) words.
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t words);
  // dst &= src; returns popcount(dst) after the update.
  std::size_t (*and_into)(std::uint64_t* dst, const std::uint64_t* src,
                          std::size_t words);
  // dst |= src.
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src,
                  std::size_t words);
  // popcount(a).
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
  // sum a[i] * b[i].
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x.
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

const KernelTable& scalar_table();
// nullptr when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// The table chosen for this process (first call decides).
const KernelTable& active();

inline std::size_t and_popcount(std::span<const std::uint64_t> a,
                                std::span<const std::uint64_t> b) {
  return active().and_popcount(a.data(), b.data(),
                               a.size() < b.size() ? a.size() : b.size());
}

inline std::size_t and_into(std::span<std::uint64_t> dst,
                            std::span<const std::uint64_t> src) {
  return active().and_into(dst.data(), src.data(),
                           dst.size() < src.size() ? dst.size() : src.size());
}

inline void or_into(std::span<std::uint64_t> dst,
                    std::span<const std::uint64_t> src) {
  active().or_into(dst.data(), src.data(),
                   dst.size() < src.size() ? dst.size() : src.size());
}

inline std::size_t popcount(std::span<const std::uint64_t> a) {
  return active().popcount(a.data(), a.size());
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(),
                      a.size() < b.size() ? a.size() : b.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(),
                x.size() < y.size() ? x.size() : y.size());
}

}  // namespace splitforge::kernels
