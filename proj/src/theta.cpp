// theta_{K,l} detection. For each root u, every simple path of exactly l
// edges from u to an endpoint v > u is enumerated and bucketed by v; a bucket
// holds a theta exactly when K of its paths have pairwise disjoint interiors.

#include <algorithm>
#include <queue>

#include "splitforge/errors.hpp"
#include "splitforge/forbidden.hpp"
#include "splitforge/parallel.hpp"

namespace splitforge {

namespace {

constexpr std::size_t kFlowFilterThreshold = 64;
constexpr std::uint64_t kPackingBudget = 4'000'000'000ull;

struct ThetaScratch {
  std::vector<std::uint8_t> on_path;
  std::vector<std::vector<VertexId>> bucket;  // by endpoint, interiors back to back
  std::vector<VertexId> endpoints;
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
};

// Upper bound on the number of internally disjoint u-v paths in the union of
// the bucket's paths (unit vertex capacities, stopped once `need` is reached).
std::uint32_t disjoint_path_bound(VertexId u, VertexId v, const std::vector<VertexId>& flat,
                                  std::uint32_t inner, std::uint32_t need) {
  // Local ids: 0 = u, 1 = v, interior vertices after that. Each interior
  // vertex x splits into in-node 2x and out-node 2x+1.
  std::vector<VertexId> ids = flat;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto local = [&](VertexId x) -> std::uint32_t {
    if (x == u) return 0;
    if (x == v) return 1;
    return 2 + static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  const std::uint32_t nodes = 2 * (2 + static_cast<std::uint32_t>(ids.size()));
  struct Arc {
    std::uint32_t to, cap, rev;
  };
  std::vector<std::vector<Arc>> adj(nodes);
  auto add_arc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t cap) {
    adj[a].push_back({b, cap, static_cast<std::uint32_t>(adj[b].size())});
    adj[b].push_back({a, 0, static_cast<std::uint32_t>(adj[a].size() - 1)});
  };
  const std::uint32_t big = need;
  for (std::uint32_t x = 2; x < nodes / 2; ++x) add_arc(2 * x, 2 * x + 1, 1);
  add_arc(0, 1, big);  // u in -> u out
  add_arc(2, 3, big);  // v in -> v out
  const std::size_t paths = flat.size() / inner;
  for (std::size_t p = 0; p < paths; ++p) {
    std::uint32_t prev = local(u);
    for (std::uint32_t i = 0; i <= inner; ++i) {
      const std::uint32_t cur = i < inner ? local(flat[p * inner + i]) : local(v);
      add_arc(2 * prev + 1, 2 * cur, 1);
      prev = cur;
    }
  }
  const std::uint32_t source = 1, sink = 2;
  std::uint32_t flow = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> via(nodes);
  while (flow < need) {
    std::vector<bool> seen(nodes, false);
    std::queue<std::uint32_t> q;
    q.push(source);
    seen[source] = true;
    while (!q.empty() && !seen[sink]) {
      const std::uint32_t x = q.front();
      q.pop();
      for (std::uint32_t i = 0; i < adj[x].size(); ++i) {
        const Arc& a = adj[x][i];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          via[a.to] = {x, i};
          q.push(a.to);
        }
      }
    }
    if (!seen[sink]) break;
    for (std::uint32_t x = sink; x != source; x = via[x].first) {
      Arc& a = adj[via[x].first][via[x].second];
      a.cap -= 1;
      adj[x][a.rev].cap += 1;
    }
    ++flow;
  }
  return flow;
}

// Exact search for K paths with pairwise disjoint interiors; returns their
// indices.
std::optional<std::vector<std::size_t>> pack(const std::vector<VertexId>& flat, std::uint32_t inner,
                                             std::uint32_t k, ThetaScratch& s) {
  const std::size_t paths = flat.size() / inner;
  std::vector<std::size_t> chosen;
  std::vector<std::uint32_t> owner;  // stamp of the path depth that claimed a vertex
  std::uint64_t nodes = 0;
  const std::uint32_t base = s.epoch;
  s.epoch += k + 1;
  auto free_path = [&](std::size_t p) {
    for (std::uint32_t i = 0; i < inner; ++i) {
      const std::uint32_t st = s.stamp[flat[p * inner + i]];
      if (st > base && st <= base + chosen.size()) return false;
    }
    return true;
  };
  auto claim = [&](std::size_t p, std::uint32_t value) {
    for (std::uint32_t i = 0; i < inner; ++i) s.stamp[flat[p * inner + i]] = value;
  };
  auto search = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == k) return true;
    if (++nodes > kPackingBudget) throw BudgetExceeded("theta path packing exceeded its budget");
    for (std::size_t p = from; p + (k - chosen.size()) <= paths; ++p) {
      if (!free_path(p)) continue;
      chosen.push_back(p);
      claim(p, base + static_cast<std::uint32_t>(chosen.size()));
      if (self(self, p + 1)) return true;
      claim(p, 0);
      chosen.pop_back();
    }
    return false;
  };
  const bool ok = search(search, 0);
  for (std::size_t p : chosen) claim(p, 0);
  if (!ok) return std::nullopt;
  return chosen;
}

}  // namespace

std::optional<Witness> contains_theta(const Graph& g, std::uint32_t k, std::uint32_t l,
                                      unsigned threads) {
  const ForbiddenPattern pat = ForbiddenPattern::theta(k, l);
  if (k == 2) {
    auto cyc = contains_cycle(g, 2 * l, threads);
    if (!cyc) return std::nullopt;
    const auto& c = cyc->vertices;
    Witness w;
    w.pattern = pat.name();
    w.vertices = {c[0], c[l]};
    for (std::uint32_t i = 1; i < l; ++i) w.vertices.push_back(c[i]);
    for (std::uint32_t i = 2 * l - 1; i > l; --i) w.vertices.push_back(c[i]);
    for (const auto& [a, b] : pattern_graph(pat).second) {
      w.edges.push_back({w.vertices[a], w.vertices[b]});
    }
    return w;
  }

  const std::size_t n = g.num_vertices();
  const std::uint32_t inner = l - 1;
  return first_hit<Witness>(n, threads, [&](std::size_t ui) -> std::optional<Witness> {
    thread_local ThetaScratch s;
    const auto u = static_cast<VertexId>(ui);
    if (g.degree(u) < k) return std::nullopt;
    if (s.on_path.size() != n) {
      s.on_path.assign(n, 0);
      s.bucket.assign(n, {});
      s.stamp.assign(n, 0);
      s.epoch = 0;
    }
    if (s.epoch > UINT32_MAX / 2) {
      std::fill(s.stamp.begin(), s.stamp.end(), 0);
      s.epoch = 0;
    }
    s.endpoints.clear();

    std::vector<VertexId> path{u};
    std::vector<std::size_t> cursor{0};
    s.on_path[u] = 1;
    while (!cursor.empty()) {
      const VertexId x = path.back();
      if (path.size() == l + 1) {
        if (x > u) {
          auto& b = s.bucket[x];
          if (b.empty()) s.endpoints.push_back(x);
          b.insert(b.end(), path.begin() + 1, path.end() - 1);
        }
        s.on_path[x] = 0;
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      const auto nb = g.neighbors(x);
      bool advanced = false;
      while (cursor.back() < nb.size()) {
        const VertexId y = nb[cursor.back()++];
        if (s.on_path[y]) continue;
        // The final vertex must exceed the root; interior ones are free.
        if (path.size() == l && y <= u) continue;
        path.push_back(y);
        s.on_path[y] = 1;
        cursor.push_back(0);
        advanced = true;
        break;
      }
      if (!advanced) {
        s.on_path[x] = 0;
        path.pop_back();
        cursor.pop_back();
      }
    }

    std::sort(s.endpoints.begin(), s.endpoints.end());
    std::optional<Witness> found;
    for (VertexId v : s.endpoints) {
      auto& flat = s.bucket[v];
      if (!found && flat.size() / inner >= k && g.degree(v) >= k) {
        const bool plausible = flat.size() / inner <= kFlowFilterThreshold ||
                               disjoint_path_bound(u, v, flat, inner, k) >= k;
        if (plausible) {
          if (auto chosen = pack(flat, inner, k, s)) {
            std::vector<VertexId> verts{u, v};
            for (std::size_t p : *chosen) {
              verts.insert(verts.end(), flat.begin() + static_cast<std::ptrdiff_t>(p * inner),
                           flat.begin() + static_cast<std::ptrdiff_t>((p + 1) * inner));
            }
            Witness w;
            w.pattern = pat.name();
            for (const auto& [a, b] : pattern_graph(pat).second) {
              w.edges.push_back({verts[a], verts[b]});
            }
            w.vertices = std::move(verts);
            found = std::move(w);
          }
        }
      }
      flat.clear();
    }
    return found;
  });
}

}  // namespace splitforge
