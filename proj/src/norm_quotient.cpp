#include <algorithm>
#include <set>

#include "construction_util.hpp"
#include "splitforge/constructions.hpp"
#include "splitforge/forbidden.hpp"

namespace splitforge {

namespace {

struct NormQuotientShape {
  std::uint32_t q = 0;
  std::uint32_t big = 0;   // Q = q^(t-1)
  std::uint32_t c = 0;     // quotient order (q-1)/d
  bool even_power = false;
};

NormQuotientShape check_params(std::uint32_t q, std::uint32_t t, std::uint32_t d) {
  const auto pp = nt::prime_power(q);
  if (!pp || pp->first == 2) throw ParameterError("norm-quotient graphs need an odd prime power q");
  if (t < 2) throw ParameterError("norm-quotient graphs need t >= 2");
  if (d == 0 || (q - 1) % d != 0) {
    throw ParameterError("d=" + std::to_string(d) + " does not divide q-1=" + std::to_string(q - 1));
  }
  NormQuotientShape s;
  s.q = q;
  const std::uint64_t big = nt::ipow(q, t - 1);
  s.c = (q - 1) / d;
  if (big > gf::kMaxOrder || 2 * big * s.c > (1u << 23)) throw ParameterError("norm-quotient graph too large");
  s.big = static_cast<std::uint32_t>(big);
  s.even_power = pp->second % 2 == 0;
  return s;
}

}  // namespace

Hypergraph build_norm_quotient(std::uint32_t q, std::uint32_t t, std::uint32_t d) {
  const auto s = check_params(q, t, d);
  const auto pp = *nt::prime_power(q);
  const gf::FieldTower tower(pp.first, pp.second, t - 1);
  const auto& ext = tower.extension();
  const auto k = gf::subgroup(tower.base(), d);

  // Coset label of N(z) for every nonzero z.
  std::vector<std::uint32_t> label(s.big, UINT32_MAX);
  for (std::uint32_t z = 1; z < s.big; ++z) {
    label[z] = gf::coset_of(tower.base(), tower.norm({z}), k).index;
  }

  Hypergraph g(2);
  const VertexId side = s.big * s.c;
  for (std::uint32_t x = 0; x < s.big; ++x) {
    for (std::uint32_t a = 0; a < s.c; ++a) g.add_vertex("P:" + std::to_string(x) + ",c" + std::to_string(a));
  }
  for (std::uint32_t y = 0; y < s.big; ++y) {
    for (std::uint32_t b = 0; b < s.c; ++b) g.add_vertex("L:" + std::to_string(y) + ",c" + std::to_string(b));
  }
  for (std::uint32_t x = 0; x < s.big; ++x) {
    for (std::uint32_t y = 0; y < s.big; ++y) {
      const std::uint32_t z = ext.add({x}, {y}).value;
      if (z == 0) continue;
      for (std::uint32_t a = 0; a < s.c; ++a) {
        const std::uint32_t b = (label[z] + s.c - a) % s.c;
        g.add_edge({x * s.c + a, side + y * s.c + b});
      }
    }
  }
  return g;
}

NormQuotientSplit partition_norm_quotient(std::uint32_t q, std::uint32_t t, std::uint32_t d,
                                          std::uint32_t h, std::uint32_t a, PatchStrategy strategy,
                                          std::optional<std::uint64_t> seed) {
  const auto s = check_params(q, t, d);
  if (h == 0 || a == 0 || std::uint64_t{h} * a != s.c) {
    throw ParameterError("need h*a = (q-1)/d = " + std::to_string(s.c));
  }
  if (a > h) throw ParameterError("need a <= h");
  const Hypergraph base = build_norm_quotient(q, t, d);
  const VertexId side = s.big * s.c;

  // H = multiples of a in Z_c, A = {0..a-1}. P_{x,h1} = {(x, h1 + a')},
  // L_{y,a2} = {(y, a2 + eta)}. L_{y,j} merges with P_{y, H[sigma_y(j)]}.
  NormQuotientSplit out;
  auto& parts = out.partition.parts;
  parts.resize(std::size_t{s.big} * a);
  std::vector<std::uint32_t> sigma(h);
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed);
  for (std::uint32_t y = 0; y < s.big; ++y) {
    std::iota(sigma.begin(), sigma.end(), 0);
    if (rng) rng->shuffle(std::span<std::uint32_t>(sigma));
    for (std::uint32_t j = 0; j < a; ++j) {
      auto& part = parts[std::size_t{y} * a + j];
      const std::uint32_t h1 = sigma[j] * a;
      for (std::uint32_t ap = 0; ap < a; ++ap) part.push_back(y * s.c + (h1 + ap) % s.c);
      for (std::uint32_t e = 0; e < h; ++e) part.push_back(side + y * s.c + (j + e * a) % s.c);
    }
  }
  Hypergraph g = detail::strip_internal(base, out.partition, out.internal_edges_removed);

  // Merged parts (y, j) and (-y, j') have no edge: the only candidates would
  // need x + y = 0. Find the deficient pairs directly from the graph.
  const std::size_t r = parts.size();
  const auto part_of = out.partition.part_index(g.num_vertices());
  std::vector<std::uint8_t> hit(r * r, 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto ed = g.edge(e);
    const auto pa = part_of[ed[0]], pb = part_of[ed[1]];
    if (pa == UINT32_MAX || pb == UINT32_MAX) continue;
    hit[std::size_t{pa} * r + pb] = hit[std::size_t{pb} * r + pa] = 1;
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> deficient;
  for (std::uint32_t i = 0; i < r; ++i) {
    for (std::uint32_t j = i + 1; j < r; ++j) {
      if (!hit[std::size_t{i} * r + j]) deficient.emplace_back(i, j);
    }
  }

  PatchStats& st = out.stats;
  st.strategy = strategy == PatchStrategy::kMatching ? "matching" : "greedy_reuse";
  st.deficient_pairs = deficient.size();
  st.k_base = a + h;

  // Patch vertices only touch patch vertices, so freeness of the whole graph
  // reduces to freeness of the patch graph, tracked here with local ids.
  const std::uint32_t fs = t;
  std::uint64_t ft = d;
  for (std::uint32_t i = 2; i < t; ++i) ft *= i * std::uint64_t{d};
  ft += 1;  // (t-1)! d^(t-1) + 1
  std::vector<VertexId> patch_global;
  std::vector<std::set<std::uint32_t>> patch_adj;
  std::vector<std::vector<std::uint32_t>> patch_of_part(r);
  std::size_t counter = 0;

  auto new_patch_vertex = [&](std::uint32_t part, bool low_side) {
    const VertexId v = g.add_vertex((low_side ? "P:new" : "L:new") + std::to_string(counter++));
    parts[part].push_back(v);
    patch_global.push_back(v);
    patch_adj.emplace_back();
    patch_of_part[part].push_back(static_cast<std::uint32_t>(patch_global.size() - 1));
    return static_cast<std::uint32_t>(patch_global.size() - 1);
  };
  auto connect = [&](std::uint32_t u, std::uint32_t w) {
    patch_adj[u].insert(w);
    patch_adj[w].insert(u);
    g.add_edge({patch_global[u], patch_global[w]});
    ++st.patch_edges;
  };
  auto patch_free_with = [&](std::uint32_t u, std::uint32_t w) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::uint32_t x = 0; x < patch_adj.size(); ++x) {
      for (std::uint32_t y : patch_adj[x]) {
        if (x < y) edges.emplace_back(x, y);
      }
    }
    edges.emplace_back(std::min(u, w), std::max(u, w));
    const Graph pg(patch_adj.size(), edges);
    return !contains_kst(pg, fs, static_cast<std::uint32_t>(std::min<std::uint64_t>(ft, UINT32_MAX)), 1);
  };

  for (const auto& [i, j] : deficient) {
    if (strategy == PatchStrategy::kGreedyReuse) {
      bool done = false;
      for (std::uint32_t u : patch_of_part[i]) {
        for (std::uint32_t w : patch_of_part[j]) {
          if (patch_adj[u].count(w) || !patch_free_with(u, w)) continue;
          connect(u, w);
          ++st.reused_edges;
          done = true;
          break;
        }
        if (done) break;
      }
      // One fresh endpoint has degree 1 and cannot lie in a K_{s,t} with
      // s, t >= 2.
      if (!done && !patch_of_part[j].empty()) {
        const std::uint32_t w = patch_of_part[j].front();
        connect(new_patch_vertex(i, true), w);
        done = true;
      }
      if (!done && !patch_of_part[i].empty()) {
        const std::uint32_t u = patch_of_part[i].front();
        connect(u, new_patch_vertex(j, false));
        done = true;
      }
      if (done) continue;
    }
    const std::uint32_t u = new_patch_vertex(i, true);
    connect(u, new_patch_vertex(j, false));
    ++st.fresh_edges;
  }
  st.patch_vertices = patch_global.size();
  out.partition.declared_k = static_cast<std::uint32_t>(out.partition.max_part_size());
  st.k_overhead = out.partition.declared_k - st.k_base;
  out.graph = std::move(g);
  if (!s.even_power) {
    out.notes.push_back("q=" + std::to_string(q) +
                        " is not an even power of an odd prime; freeness is checked, not implied");
  }
  return out;
}

}  // namespace splitforge
