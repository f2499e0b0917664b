#include "splitforge/kernels.hpp"

#include <bit>

namespace splitforge::kernels {
namespace {

std::size_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < words; ++i) {
    count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return count;
}

std::size_t and_into_scalar(std::uint64_t* dst, const std::uint64_t* src,
                            std::size_t words) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < words; ++i) {
    dst[i] &= src[i];
    count += static_cast<std::size_t>(std::popcount(dst[i]));
  }
  return count;
}

void or_into_scalar(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

std::size_t popcount_scalar(const std::uint64_t* a, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < words; ++i) {
    count += static_cast<std::size_t>(std::popcount(a[i]));
  }
  return count;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      "scalar",         and_popcount_scalar, and_into_scalar, or_into_scalar,
      popcount_scalar,  dot_scalar,          axpy_scalar,
  };
  return table;
}

}  // namespace splitforge::kernels
