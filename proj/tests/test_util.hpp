#pragma once
// Independent reference code for the tests: brute-force embedders, small
// graphs and schoolbook field arithmetic. None of it calls the library's
// search routines.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "splitforge/gf.hpp"
#include "splitforge/hypergraph.hpp"

namespace testutil {

using splitforge::Graph;
using splitforge::Hypergraph;
using splitforge::VertexId;
using Edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline Hypergraph graph_from_edges(std::size_t n, const Edges& edges) {
  Hypergraph h(2);
  for (std::size_t v = 0; v < n; ++v) h.add_vertex(std::to_string(v));
  for (const auto& [a, b] : edges) h.add_edge({a, b});
  return h;
}

inline Edges petersen_edges() {
  Edges e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return e;
}

inline Edges complete_bipartite_edges(std::uint32_t a, std::uint32_t b) {
  Edges e;
  for (std::uint32_t i = 0; i < a; ++i) {
    for (std::uint32_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return e;
}

inline Edges random_edges(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Edges e;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return e;
}

// Does some injective map send every pattern edge onto an edge of g?
inline bool brute_embeds(std::size_t n, const Edges& g_edges, std::uint32_t pn, const Edges& p_edges) {
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (const auto& [a, b] : g_edges) adj[a][b] = adj[b][a] = 1;
  std::vector<std::uint32_t> img(pn);
  std::vector<std::uint8_t> used(n, 0);
  auto rec = [&](auto&& self, std::uint32_t i) -> bool {
    if (i == pn) return true;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (const auto& [a, b] : p_edges) {
        if (a == i && b < i && !adj[v][img[b]]) ok = false;
        if (b == i && a < i && !adj[v][img[a]]) ok = false;
      }
      if (!ok) continue;
      used[v] = 1;
      img[i] = v;
      if (self(self, i + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

inline Edges cycle_pattern(std::uint32_t len) {
  Edges e;
  for (std::uint32_t i = 0; i < len; ++i) e.emplace_back(i, (i + 1) % len);
  return e;
}

inline Edges kst_pattern(std::uint32_t s, std::uint32_t t) { return complete_bipartite_edges(s, t); }

// Terminals 0 and 1; k internally disjoint paths with l edges each.
inline std::pair<std::uint32_t, Edges> theta_pattern(std::uint32_t k, std::uint32_t l) {
  Edges e;
  std::uint32_t next = 2;
  for (std::uint32_t j = 0; j < k; ++j) {
    std::uint32_t prev = 0;
    for (std::uint32_t s = 1; s < l; ++s) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 1);
  }
  return {next, e};
}

// Berge cycle of length l: distinct core vertices v_0..v_{l-1} and distinct
// edges e_i containing v_i and v_{i+1}.
inline bool brute_berge(const std::vector<std::vector<std::uint32_t>>& edges, std::size_t n, std::uint32_t l) {
  auto contains = [](const std::vector<std::uint32_t>& e, std::uint32_t v) {
    return std::find(e.begin(), e.end(), v) != e.end();
  };
  std::vector<std::uint32_t> core(l);
  std::vector<std::uint8_t> used_v(n, 0), used_e(edges.size(), 0);
  std::vector<std::size_t> chosen(l);
  auto pick_edges = [&](auto&& self, std::uint32_t i) -> bool {
    if (i == l) return true;
    const std::uint32_t a = core[i], b = core[(i + 1) % l];
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (used_e[e] || !contains(edges[e], a) || !contains(edges[e], b)) continue;
      used_e[e] = 1;
      if (self(self, i + 1)) return true;
      used_e[e] = 0;
    }
    return false;
  };
  auto pick_core = [&](auto&& self, std::uint32_t i) -> bool {
    if (i == l) return pick_edges(pick_edges, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
      if (used_v[v]) continue;
      used_v[v] = 1;
      core[i] = v;
      if (self(self, i + 1)) return true;
      used_v[v] = 0;
    }
    return false;
  };
  return pick_core(pick_core, 0);
}

// Schoolbook arithmetic on packed GF(p^n) elements using only the modulus.
struct RefField {
  std::uint32_t p, n;
  std::vector<std::uint32_t> modulus;  // x^0..x^n, monic

  explicit RefField(const splitforge::gf::FieldSpec& f)
      : p(f.characteristic()), n(f.degree()), modulus(f.modulus().begin(), f.modulus().end()) {}

  std::vector<std::uint32_t> unpack(std::uint32_t a) const {
    std::vector<std::uint32_t> c(n);
    for (std::uint32_t i = 0; i < n; ++i, a /= p) c[i] = a % p;
    return c;
  }
  std::uint32_t pack(const std::vector<std::uint32_t>& c) const {
    std::uint32_t a = 0;
    for (std::uint32_t i = n; i-- > 0;) a = a * p + c[i];
    return a;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = unpack(a), y = unpack(b);
    for (std::uint32_t i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    auto x = unpack(a), y = unpack(b);
    for (std::uint32_t i = 0; i < n; ++i) x[i] = (x[i] + p - y[i]) % p;
    return pack(x);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = unpack(a), y = unpack(b);
    std::vector<std::uint64_t> prod(2 * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    }
    for (std::uint32_t d = 2 * n - 1; d >= n; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= n; ++i) {
        prod[d - n + i] = (prod[d - n + i] + (p - c) * modulus[i]) % p;
      }
    }
    std::vector<std::uint32_t> out(n);
    for (std::uint32_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

inline std::vector<std::uint32_t> parse_ints(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  return out;
}

}  // namespace testutil
