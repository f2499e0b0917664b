#pragma once
// Explicit (r,k)-constructions: Wenger graphs, norm-quotient graphs, the
// theta_{3,4}-free graph, the Berge-cycle-free 3-graph G_q, design splits and
// Property-B colourings.
//
// Merged parts pair one part from each side of a bipartite graph; the single
// edge inside each merged part is dropped, since an (r,k)-graph may be
// assumed to have independent parts. internal_edges_removed counts them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitforge/designs.hpp"
#include "splitforge/hypergraph.hpp"

namespace splitforge {

struct Construction {
  Hypergraph graph;
  SplitPartition partition;
  std::size_t internal_edges_removed = 0;
  std::vector<std::string> notes;
};

// W_M(q): points and lines in GF(q)^(M+1), p ~ l iff l_{j+1} + p_{j+1} =
// l_j p_1 for j = 1..M. Vertices are points in lexicographic order, then lines.
Hypergraph build_wenger(std::uint32_t m_eqs, std::uint32_t q);

// M = 2: parts P_{p1,p3} + L_{l1,l2}, q^2 parts of size 2q.
// M = 4: parts P_{p1,p3,p5} + L_{l1,l2,l4}, q^3 parts of size 2q^2.
// The pairing is lexicographic, or a seeded permutation of the line parts.
Construction partition_wenger(std::uint32_t m_eqs, std::uint32_t q,
                              std::optional<std::uint64_t> seed = std::nullopt);

// q an even power of an odd prime. 2q^4 vertices; q^(5/2) parts of size
// 2q^(3/2).
Construction build_theta(std::uint32_t q, std::optional<std::uint64_t> seed = std::nullopt);

// q odd. Vertices GF(q)^2 minus the parabola x2 = x1^2/2; q parts P_{x1} of
// size q-1; one edge per triple of distinct first coordinates.
Construction build_berge3(std::uint32_t q);

// m must equal the design strength. Vertices (point, block) per block copy.
Construction build_design_split(const DesignInstance& design, std::uint32_t m);

// r parts of size c.size(); vertex (i, j) is part i, colour j.
Construction build_property_B(std::uint32_t m, const std::vector<std::uint32_t>& c, std::uint32_t r);

// B_d(q,t) on F_{q^{t-1}} x (F_q^*/K_d), both sides.
Hypergraph build_norm_quotient(std::uint32_t q, std::uint32_t t, std::uint32_t d);

enum class PatchStrategy { kMatching, kGreedyReuse };

struct PatchStats {
  std::string strategy;
  std::size_t deficient_pairs = 0;   // merged part pairs with no edge before patching
  std::size_t patch_vertices = 0;
  std::size_t patch_edges = 0;
  std::size_t reused_edges = 0;      // patch edges between existing patch vertices
  std::size_t fresh_edges = 0;       // edges with two new endpoints
  std::size_t k_base = 0;            // a + h
  std::size_t k_overhead = 0;        // k_effective - k_base
};

struct NormQuotientSplit : Construction {
  PatchStats stats;
};

// h*a = (q-1)/d and a <= h. r = q^(t-1) * a.
NormQuotientSplit partition_norm_quotient(std::uint32_t q, std::uint32_t t, std::uint32_t d,
                                          std::uint32_t h, std::uint32_t a, PatchStrategy strategy,
                                          std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace splitforge
