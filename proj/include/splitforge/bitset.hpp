#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "splitforge/kernels.hpp"

namespace splitforge {

// Fixed-size dynamic bitset over vertex indices; bulk operations go through
// the dispatched kernels.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const { return kernels::popcount(words_); }
  std::size_t count_and(const Bitset& other) const {
    return kernels::and_popcount(words_, other.words_);
  }
  // *this &= other; returns the new popcount.
  std::size_t intersect_with(const Bitset& other) {
    return kernels::and_into(words_, other.words_);
  }
  Bitset& operator|=(const Bitset& other) {
    kernels::or_into(words_, other.words_);
    return *this;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        fn(w * 64 + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace splitforge
