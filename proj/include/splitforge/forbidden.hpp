#pragma once
// Exact containment tests for the forbidden configurations: complete
// bipartite graphs, cycles, theta graphs, Berge cycles and explicit patterns.
// Every "free" answer is exhaustive. Witnesses are re-checked against the
// host before they are returned.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitforge/hypergraph.hpp"

namespace splitforge {

struct ForbiddenPattern {
  enum class Kind { kCompleteBipartite, kCycle, kTheta, kBergeCycle, kExplicit };

  Kind kind = Kind::kCycle;
  // K_{s,t}: (a, b) = (s, t). C_L: a = L. theta_{K,l}: (a, b) = (K, l).
  // bergeC_l: a = l.
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  // kExplicit: vertex count and edge list of the pattern graph.
  std::uint32_t pattern_vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pattern_edges;

  static ForbiddenPattern complete_bipartite(std::uint32_t s, std::uint32_t t);
  static ForbiddenPattern cycle(std::uint32_t length);
  static ForbiddenPattern theta(std::uint32_t k, std::uint32_t l);
  static ForbiddenPattern berge_cycle(std::uint32_t l);
  static ForbiddenPattern explicit_graph(std::uint32_t n,
                                         std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  // Accepts "K_{s,t}", "C_{L}" or "C_L", "theta_{K,l}", "bergeC_l" or
  // "bergeC_{l}", and "graph:n:u-v,u-v,...". Throws ParameterError.
  static ForbiddenPattern parse(std::string_view text);
  std::string name() const;
};

// vertices/edges follow a per-pattern layout:
//   K_{s,t}      the s side, then the t side; edges all cross pairs
//   C_L          the cycle in order
//   theta_{K,l}  the two terminals, then the l-1 interior vertices of each path
//   bergeC_l     the l core vertices in cyclic order; edges[i] is the
//                hyperedge covering core i and i+1
//   explicit     image of pattern vertex i at position i
struct Witness {
  std::string pattern;
  std::vector<VertexId> vertices;
  std::vector<std::vector<VertexId>> edges;
};

// threads == 0 uses default_threads(). Results do not depend on threads.
std::optional<Witness> contains_kst(const Graph& g, std::uint32_t s, std::uint32_t t,
                                    unsigned threads = 0);
std::optional<Witness> contains_cycle(const Graph& g, std::uint32_t length, unsigned threads = 0);
// nullopt for a forest.
std::optional<std::uint32_t> girth(const Graph& g);
std::optional<Witness> contains_theta(const Graph& g, std::uint32_t k, std::uint32_t l,
                                      unsigned threads = 0);
std::optional<Witness> contains_berge_cycle(const Hypergraph& h, std::uint32_t l,
                                            unsigned threads = 0);
// Brute-force subgraph search (not induced) for patterns of at most
// kMaxExplicitVertices vertices. Throws BudgetExceeded past node_budget.
inline constexpr std::uint32_t kMaxExplicitVertices = 10;
std::optional<Witness> contains_explicit(const Graph& g, std::uint32_t pattern_vertices,
                                         std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
                                         std::uint64_t node_budget = 2'000'000'000);

// The pattern's own graph (not defined for Berge cycles).
std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> pattern_graph(
    const ForbiddenPattern& p);

// Dispatches on the pattern kind; graph patterns require uniformity 2.
std::optional<Witness> find_forbidden(const Hypergraph& h, const ForbiddenPattern& p,
                                      unsigned threads = 0);

// True when w is a genuine copy of p in h.
bool check_witness(const Hypergraph& h, const ForbiddenPattern& p, const Witness& w);

}  // namespace splitforge
