#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "splitforge/constructions.hpp"
#include "splitforge/errors.hpp"
#include "splitforge/gf.hpp"
#include "splitforge/numtheory.hpp"
#include "splitforge/rng.hpp"

namespace splitforge::detail {

inline gf::FieldSpec field_for(std::uint32_t q) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw ParameterError("q=" + std::to_string(q) + " is not a prime power");
  return gf::FieldSpec::make(pp->first, pp->second);
}

inline std::string join_ints(std::initializer_list<std::uint64_t> xs) {
  std::string s;
  for (std::uint64_t x : xs) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

inline std::string join_ints(const std::vector<std::uint32_t>& xs) {
  std::string s;
  for (std::uint32_t x : xs) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

// Identity, or a seeded permutation of [0, n).
inline std::vector<std::uint32_t> pairing(std::size_t n, std::optional<std::uint64_t> seed) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (seed) {
    Rng rng(*seed);
    rng.shuffle(std::span<std::uint32_t>(perm));
  }
  return perm;
}

// Same vertices, without the edges lying entirely inside one part.
inline Hypergraph strip_internal(const Hypergraph& h, const SplitPartition& p, std::size_t& removed) {
  const auto part_of = p.part_index(h.num_vertices());
  Hypergraph out(h.uniformity());
  for (const auto& label : h.labels()) out.add_vertex(label);
  removed = 0;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto ed = h.edge(e);
    bool internal = part_of[ed[0]] != UINT32_MAX;
    for (VertexId v : ed) internal &= part_of[v] == part_of[ed[0]];
    if (internal) {
      ++removed;
    } else {
      out.add_edge(ed);
    }
  }
  return out;
}

}  // namespace splitforge::detail
