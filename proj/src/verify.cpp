#include "splitforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "splitforge/errors.hpp"

namespace splitforge {

namespace {

// Visits every m-subset of [0, r) in lexicographic order until fn returns
// false.
template <class Fn>
void for_each_subset(std::uint32_t r, std::uint32_t m, Fn&& fn) {
  if (m > r) return;
  std::vector<std::uint32_t> idx(m);
  for (std::uint32_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && idx[i] == r - m + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VerificationReport verify_rk(const Hypergraph& h, const SplitPartition& p) {
  const auto start = std::chrono::steady_clock::now();
  p.validate(h.num_vertices());

  VerificationReport rep;
  rep.r = p.r();
  rep.k_effective = p.max_part_size();
  const auto r = static_cast<std::uint32_t>(p.r());
  const std::uint32_t m = h.uniformity();
  const auto part_of = p.part_index(h.num_vertices());

  std::vector<bool> dependent(r, false);
  std::vector<std::uint32_t> tuple(m);
  auto note_missing = [&](const std::vector<std::uint32_t>& t) {
    ++rep.missing_count;
    if (rep.missing_tuples.size() < kMaxListedMissing) rep.missing_tuples.push_back(t);
  };

  if (m == 2) {
    std::vector<std::uint8_t> hit(static_cast<std::size_t>(r) * r, 0);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const auto ed = h.edge(e);
      const std::uint32_t a = part_of[ed[0]], b = part_of[ed[1]];
      if (a == UINT32_MAX || b == UINT32_MAX) continue;
      if (a == b) {
        dependent[a] = true;
      } else {
        hit[static_cast<std::size_t>(a) * r + b] = 1;
        hit[static_cast<std::size_t>(b) * r + a] = 1;
      }
    }
    for (std::uint32_t a = 0; a < r; ++a) {
      for (std::uint32_t b = a + 1; b < r; ++b) {
        if (!hit[static_cast<std::size_t>(a) * r + b]) note_missing({a, b});
      }
    }
  } else {
    // Part tuples are packed base r; reject partitions where that overflows.
    long double span = 1;
    for (std::uint32_t i = 0; i < m; ++i) span *= r;
    if (span > 1.8e19L) throw ParameterError("too many parts for the tuple index");
    std::unordered_set<std::uint64_t> covered;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const auto ed = h.edge(e);
      bool inside = true;
      for (std::uint32_t i = 0; i < m && inside; ++i) {
        tuple[i] = part_of[ed[i]];
        inside = tuple[i] != UINT32_MAX;
      }
      if (!inside) continue;
      std::sort(tuple.begin(), tuple.end());
      bool rainbow = true;
      for (std::uint32_t i = 1; i < m; ++i) rainbow &= tuple[i] != tuple[i - 1];
      if (tuple.front() == tuple.back()) dependent[tuple.front()] = true;
      if (!rainbow) continue;
      std::uint64_t key = 0;
      for (std::uint32_t x : tuple) key = key * r + x;
      covered.insert(key);
    }
    for_each_subset(r, m, [&](const std::vector<std::uint32_t>& t) {
      std::uint64_t key = 0;
      for (std::uint32_t x : t) key = key * r + x;
      if (!covered.count(key)) note_missing(t);
      return true;
    });
  }

  for (std::uint32_t i = 0; i < r; ++i) {
    if (dependent[i]) rep.dependent_parts.push_back(i);
  }
  rep.completeness_ok = rep.missing_count == 0;
  rep.independence_ok = rep.dependent_parts.empty();
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace splitforge
