// Berge cycles in uniform hypergraphs. A Berge cycle of length l >= 3 is a
// cycle v_0..v_{l-1} of the 2-shadow together with distinct hyperedges
// e_i containing {v_i, v_{i+1}}; the hyperedges are assigned by bipartite
// matching between consecutive core pairs and the hyperedges covering them.

#include <algorithm>
#include <unordered_map>

#include "cycle_enum.hpp"
#include "splitforge/errors.hpp"
#include "splitforge/forbidden.hpp"
#include "splitforge/parallel.hpp"

namespace splitforge {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

// Kuhn's augmenting paths; match[i] is the hyperedge chosen for pair i.
bool distinct_representatives(const std::vector<const std::vector<std::uint32_t>*>& options,
                              std::vector<std::uint32_t>& match) {
  const std::size_t l = options.size();
  match.assign(l, UINT32_MAX);
  std::vector<std::pair<std::uint32_t, std::size_t>> owner;  // hyperedge -> pair
  auto owner_of = [&](std::uint32_t e) -> std::size_t {
    for (const auto& [edge, pair] : owner) {
      if (edge == e) return pair;
    }
    return SIZE_MAX;
  };
  auto set_owner = [&](std::uint32_t e, std::size_t pair) {
    for (auto& o : owner) {
      if (o.first == e) {
        o.second = pair;
        return;
      }
    }
    owner.emplace_back(e, pair);
  };
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<bool> visited(l, false);
    auto augment = [&](auto&& self, std::size_t p) -> bool {
      for (std::uint32_t e : *options[p]) {
        const std::size_t holder = owner_of(e);
        if (holder == SIZE_MAX) {
          set_owner(e, p);
          match[p] = e;
          return true;
        }
        if (visited[holder]) continue;
        visited[holder] = true;
        if (self(self, holder)) {
          set_owner(e, p);
          match[p] = e;
          return true;
        }
      }
      return false;
    };
    visited[i] = true;
    if (!augment(augment, i)) return false;
  }
  return true;
}

}  // namespace

std::optional<Witness> contains_berge_cycle(const Hypergraph& h, std::uint32_t l,
                                            unsigned threads) {
  const ForbiddenPattern pat = ForbiddenPattern::berge_cycle(l);
  const std::uint32_t m = h.uniformity();
  auto edge_vec = [&](std::uint32_t e) {
    const auto ed = h.edge(e);
    return std::vector<VertexId>(ed.begin(), ed.end());
  };

  if (l == 2) {
    std::unordered_map<std::uint64_t, std::uint32_t> first;
    for (std::uint32_t e = 0; e < h.num_edges(); ++e) {
      const auto ed = h.edge(e);
      for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = i + 1; j < m; ++j) {
          const auto [it, fresh] = first.emplace(pair_key(ed[i], ed[j]), e);
          if (!fresh) {
            Witness w;
            w.pattern = pat.name();
            w.vertices = {ed[i], ed[j]};
            w.edges = {edge_vec(it->second), edge_vec(e)};
            return w;
          }
        }
      }
    }
    return std::nullopt;
  }

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cover;
  std::vector<std::pair<VertexId, VertexId>> shadow;
  for (std::uint32_t e = 0; e < h.num_edges(); ++e) {
    const auto ed = h.edge(e);
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = i + 1; j < m; ++j) {
        auto& list = cover[pair_key(ed[i], ed[j])];
        if (list.empty()) shadow.emplace_back(ed[i], ed[j]);
        list.push_back(e);
      }
    }
  }
  const Graph g(h.num_vertices(), shadow);

  return first_hit<Witness>(g.num_vertices(), threads, [&](std::size_t root) -> std::optional<Witness> {
    thread_local detail::CycleScratch scratch;
    std::optional<Witness> found;
    std::vector<const std::vector<std::uint32_t>*> options(l);
    std::vector<std::uint32_t> match;
    detail::cycles_from(g, static_cast<VertexId>(root), l, scratch,
                        [&](const std::vector<VertexId>& cyc) {
                          for (std::uint32_t i = 0; i < l; ++i) {
                            options[i] = &cover.at(pair_key(cyc[i], cyc[(i + 1) % l]));
                          }
                          if (!distinct_representatives(options, match)) return false;
                          Witness w;
                          w.pattern = pat.name();
                          w.vertices = cyc;
                          for (std::uint32_t e : match) w.edges.push_back(edge_vec(e));
                          found = std::move(w);
                          return true;
                        });
    return found;
  });
}

}  // namespace splitforge
