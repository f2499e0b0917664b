#pragma once
// Adjacency spectra of regular graphs and the expander-mixing check.

#include <cstdint>
#include <span>
#include <vector>

#include "splitforge/hypergraph.hpp"

namespace splitforge {

inline constexpr std::size_t kDenseSpectrumLimit = 5000;

struct SpectrumSummary {
  std::size_t n = 0;
  std::size_t d = 0;
  bool bipartite = false;
  bool dense = false;
  // Descending. Dense path: all n eigenvalues. Iterative path: rho1, rho2,
  // rho_n.
  std::vector<double> eigenvalues;
  double rho1 = 0, rho2 = 0, rho_n = 0;
  // rho2 for bipartite graphs, max(rho2, -rho_n) otherwise.
  double rho = 0;
};

// Throws ParameterError for a non-regular or empty graph and
// std::runtime_error if the iterative solver does not converge.
SpectrumSummary spectrum(const Graph& g, std::size_t dense_limit = kDenseSpectrumLimit);

enum class MixingMode { kGeneral, kBipartite };

struct MixingResult {
  std::uint64_t e_uw = 0;  // ordered adjacent pairs (u, w)
  double lhs = 0;
  double bound = 0;
  bool ok = false;
};

// General mode uses max(rho2, -rho_n) and expected count d|U||W|/n.
// Bipartite mode requires U and W on opposite sides of the BFS bipartition
// and uses rho2 with 2d|U||W|/n. Duplicate entries in U or W are ignored.
MixingResult mixing_check(const Graph& g, const SpectrumSummary& s, std::span<const VertexId> u,
                          std::span<const VertexId> w, MixingMode mode);

}  // namespace splitforge
