#include "splitforge/forbidden.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <stdexcept>

#include "cycle_enum.hpp"
#include "splitforge/bitset.hpp"
#include "splitforge/errors.hpp"
#include "splitforge/parallel.hpp"

namespace splitforge {

ForbiddenPattern ForbiddenPattern::complete_bipartite(std::uint32_t s, std::uint32_t t) {
  if (s == 0 || t == 0) throw ParameterError("K_{s,t} needs s, t >= 1");
  ForbiddenPattern p;
  p.kind = Kind::kCompleteBipartite;
  p.a = std::min(s, t);
  p.b = std::max(s, t);
  return p;
}

ForbiddenPattern ForbiddenPattern::cycle(std::uint32_t length) {
  if (length < 3) throw ParameterError("cycle length must be at least 3");
  ForbiddenPattern p;
  p.kind = Kind::kCycle;
  p.a = length;
  return p;
}

ForbiddenPattern ForbiddenPattern::theta(std::uint32_t k, std::uint32_t l) {
  if (k < 2 || l < 2) throw ParameterError("theta_{K,l} needs K >= 2 and l >= 2");
  ForbiddenPattern p;
  p.kind = Kind::kTheta;
  p.a = k;
  p.b = l;
  return p;
}

ForbiddenPattern ForbiddenPattern::berge_cycle(std::uint32_t l) {
  if (l < 2) throw ParameterError("Berge cycle length must be at least 2");
  ForbiddenPattern p;
  p.kind = Kind::kBergeCycle;
  p.a = l;
  return p;
}

ForbiddenPattern ForbiddenPattern::explicit_graph(
    std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  if (n == 0 || n > kMaxExplicitVertices) {
    throw ParameterError("explicit patterns need 1.." + std::to_string(kMaxExplicitVertices) +
                         " vertices");
  }
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw ParameterError("bad explicit pattern edge");
  }
  ForbiddenPattern p;
  p.kind = Kind::kExplicit;
  p.pattern_vertices = n;
  p.pattern_edges = std::move(edges);
  return p;
}

namespace {

// Parses the integers in a body such as "{2,3}", "6" or "{6}".
std::vector<std::uint32_t> parse_ints(std::string_view body) {
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::uint32_t> out;
  while (true) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr == body.data()) throw ParameterError("bad pattern parameters");
    out.push_back(v);
    body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
    if (body.empty()) return out;
    if (body.front() != ',') throw ParameterError("bad pattern parameters");
    body.remove_prefix(1);
  }
}

}  // namespace

ForbiddenPattern ForbiddenPattern::parse(std::string_view text) {
  auto starts = [&](std::string_view prefix) {
    if (text.substr(0, prefix.size()) != prefix) return false;
    text.remove_prefix(prefix.size());
    return true;
  };
  const std::string original(text);
  try {
    if (starts("K_")) {
      const auto v = parse_ints(text);
      if (v.size() == 2) return complete_bipartite(v[0], v[1]);
    } else if (starts("C_")) {
      const auto v = parse_ints(text);
      if (v.size() == 1) return cycle(v[0]);
    } else if (starts("theta_")) {
      const auto v = parse_ints(text);
      if (v.size() == 2) return theta(v[0], v[1]);
    } else if (starts("bergeC_")) {
      const auto v = parse_ints(text);
      if (v.size() == 1) return berge_cycle(v[0]);
    } else if (starts("graph:")) {
      const auto colon = text.find(':');
      const auto n = parse_ints(text.substr(0, colon));
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
          const auto comma = rest.find(',');
          const auto item = rest.substr(0, comma);
          const auto dash = item.find('-');
          if (dash == std::string_view::npos) throw ParameterError("bad explicit edge");
          const auto u = parse_ints(item.substr(0, dash));
          const auto w = parse_ints(item.substr(dash + 1));
          edges.emplace_back(u.at(0), w.at(0));
          if (comma == std::string_view::npos) break;
          rest.remove_prefix(comma + 1);
        }
      }
      if (n.size() == 1) return explicit_graph(n[0], std::move(edges));
    }
  } catch (const ParameterError&) {
  }
  throw ParameterError("unrecognised pattern '" + original + "'");
}

std::string ForbiddenPattern::name() const {
  switch (kind) {
    case Kind::kCompleteBipartite:
      return "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case Kind::kCycle:
      return "C_" + std::to_string(a);
    case Kind::kTheta:
      return "theta_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case Kind::kBergeCycle:
      return "bergeC_" + std::to_string(a);
    case Kind::kExplicit: {
      std::string s = "graph:" + std::to_string(pattern_vertices) + ":";
      for (std::size_t i = 0; i < pattern_edges.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(pattern_edges[i].first) + "-" + std::to_string(pattern_edges[i].second);
      }
      return s;
    }
  }
  return {};
}

std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> pattern_graph(
    const ForbiddenPattern& p) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  switch (p.kind) {
    case ForbiddenPattern::Kind::kCompleteBipartite:
      for (std::uint32_t i = 0; i < p.a; ++i) {
        for (std::uint32_t j = 0; j < p.b; ++j) edges.emplace_back(i, p.a + j);
      }
      return {p.a + p.b, edges};
    case ForbiddenPattern::Kind::kCycle:
      for (std::uint32_t i = 0; i < p.a; ++i) edges.emplace_back(i, (i + 1) % p.a);
      return {p.a, edges};
    case ForbiddenPattern::Kind::kTheta: {
      const std::uint32_t inner = p.b - 1;
      for (std::uint32_t j = 0; j < p.a; ++j) {
        const std::uint32_t base = 2 + j * inner;
        if (inner == 0) {
          edges.emplace_back(0, 1);
          continue;
        }
        edges.emplace_back(0, base);
        for (std::uint32_t i = 0; i + 1 < inner; ++i) edges.emplace_back(base + i, base + i + 1);
        edges.emplace_back(base + inner - 1, 1);
      }
      return {2 + p.a * inner, edges};
    }
    case ForbiddenPattern::Kind::kExplicit:
      return {p.pattern_vertices, p.pattern_edges};
    case ForbiddenPattern::Kind::kBergeCycle:
      break;
  }
  throw ParameterError("Berge cycles have no single pattern graph");
}

namespace {

Witness graph_witness(const ForbiddenPattern& p, std::vector<VertexId> vertices) {
  Witness w;
  w.pattern = p.name();
  for (const auto& [a, b] : pattern_graph(p).second) {
    w.edges.push_back({vertices[a], vertices[b]});
  }
  w.vertices = std::move(vertices);
  return w;
}

std::vector<VertexId> first_common(std::span<const VertexId> a, std::span<const VertexId> b,
                                   std::size_t limit) {
  std::vector<VertexId> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size() && out.size() < limit) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

Bitset neighbour_bits(const Graph& g, VertexId v) {
  Bitset b(g.num_vertices());
  for (VertexId w : g.neighbors(v)) b.set(w);
  return b;
}

struct CodegreeScratch {
  std::vector<std::uint32_t> count;
  std::vector<VertexId> touched;
};

}  // namespace

std::optional<Witness> contains_kst(const Graph& g, std::uint32_t s, std::uint32_t t,
                                    unsigned threads) {
  const ForbiddenPattern pat = ForbiddenPattern::complete_bipartite(s, t);
  s = pat.a;
  t = pat.b;
  const std::size_t n = g.num_vertices();

  if (s == 1) {
    for (VertexId v = 0; v < n; ++v) {
      if (g.degree(v) >= t) {
        std::vector<VertexId> verts{v};
        const auto nb = g.neighbors(v);
        verts.insert(verts.end(), nb.begin(), nb.begin() + t);
        return graph_witness(pat, verts);
      }
    }
    return std::nullopt;
  }

  // Candidates for the other members of the s side are the vertices w > u
  // that already share t neighbours with the root u.
  return first_hit<Witness>(n, threads, [&](std::size_t ui) -> std::optional<Witness> {
    thread_local CodegreeScratch scratch;
    const auto u = static_cast<VertexId>(ui);
    if (g.degree(u) < t) return std::nullopt;
    scratch.count.resize(n, 0);
    scratch.touched.clear();
    std::vector<VertexId> hubs;
    for (VertexId x : g.neighbors(u)) {
      for (VertexId w : g.neighbors(x)) {
        if (w <= u) continue;
        if (scratch.count[w]++ == 0) scratch.touched.push_back(w);
        if (scratch.count[w] == t) hubs.push_back(w);
      }
    }
    for (VertexId w : scratch.touched) scratch.count[w] = 0;
    if (hubs.size() + 1 < s) return std::nullopt;

    if (s == 2) {
      const VertexId w = hubs.front();
      std::vector<VertexId> verts{u, w};
      const auto common = first_common(g.neighbors(u), g.neighbors(w), t);
      verts.insert(verts.end(), common.begin(), common.end());
      return graph_witness(pat, verts);
    }

    std::sort(hubs.begin(), hubs.end());
    std::vector<Bitset> level(s);
    level[0] = neighbour_bits(g, u);
    std::vector<VertexId> chosen{u};
    std::optional<Witness> found;
    auto extend = [&](auto&& self, std::size_t from) -> bool {
      if (chosen.size() == s) {
        std::vector<VertexId> verts = chosen;
        std::size_t taken = 0;
        level[s - 1].for_each([&](std::size_t v) {
          if (taken++ < t) verts.push_back(static_cast<VertexId>(v));
        });
        found = graph_witness(pat, verts);
        return true;
      }
      const std::size_t d = chosen.size();
      for (std::size_t i = from; i + (s - d) <= hubs.size(); ++i) {
        level[d] = level[d - 1];
        if (level[d].intersect_with(neighbour_bits(g, hubs[i])) < t) continue;
        chosen.push_back(hubs[i]);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    extend(extend, 0);
    return found;
  });
}

std::optional<Witness> contains_cycle(const Graph& g, std::uint32_t length, unsigned threads) {
  const ForbiddenPattern pat = ForbiddenPattern::cycle(length);
  const std::size_t n = g.num_vertices();
  if (length > n) return std::nullopt;
  return first_hit<Witness>(n, threads, [&](std::size_t root) -> std::optional<Witness> {
    thread_local detail::CycleScratch scratch;
    std::optional<Witness> found;
    detail::cycles_from(g, static_cast<VertexId>(root), length, scratch,
                        [&](const std::vector<VertexId>& cyc) {
                          found = graph_witness(pat, cyc);
                          return true;
                        });
    return found;
  });
}

std::optional<std::uint32_t> girth(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::uint32_t best = UINT32_MAX;
  std::vector<std::uint32_t> dist(n, UINT32_MAX);
  std::vector<VertexId> parent(n), order;
  for (VertexId s = 0; s < n; ++s) {
    order.clear();
    dist[s] = 0;
    parent[s] = s;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const VertexId x = order[head];
      if (2 * dist[x] + 1 >= best) break;
      for (VertexId y : g.neighbors(x)) {
        if (dist[y] == UINT32_MAX) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          order.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
    for (VertexId v : order) dist[v] = UINT32_MAX;
  }
  if (best == UINT32_MAX) return std::nullopt;
  return best;
}

std::optional<Witness> contains_explicit(
    const Graph& g, std::uint32_t pattern_vertices,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges, std::uint64_t node_budget) {
  const ForbiddenPattern pat = ForbiddenPattern::explicit_graph(
      pattern_vertices, std::vector<std::pair<std::uint32_t, std::uint32_t>>(edges.begin(), edges.end()));
  const std::uint32_t k = pattern_vertices;
  std::vector<std::vector<std::uint32_t>> padj(k);
  for (const auto& [a, b] : edges) {
    padj[a].push_back(b);
    padj[b].push_back(a);
  }
  // Placement order: repeatedly the unplaced vertex with the most placed
  // neighbours, ties to higher degree, so candidates come from a neighbour
  // list whenever possible.
  std::vector<std::uint32_t> order;
  std::vector<bool> placed(k, false);
  for (std::uint32_t step = 0; step < k; ++step) {
    std::uint32_t best = UINT32_MAX;
    std::pair<std::size_t, std::size_t> best_key{0, 0};
    for (std::uint32_t v = 0; v < k; ++v) {
      if (placed[v]) continue;
      std::size_t back = 0;
      for (std::uint32_t w : padj[v]) back += placed[w];
      const std::pair<std::size_t, std::size_t> key{back, padj[v].size()};
      if (best == UINT32_MAX || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  std::vector<std::int64_t> position(k);
  for (std::uint32_t i = 0; i < k; ++i) position[order[i]] = i;

  const std::size_t n = g.num_vertices();
  std::vector<VertexId> image(k, 0);
  std::vector<std::uint8_t> used(n, 0);
  std::uint64_t nodes = 0;
  auto place = [&](auto&& self, std::uint32_t i) -> bool {
    if (i == k) return true;
    if (++nodes > node_budget) throw BudgetExceeded("explicit pattern search exceeded its node budget");
    const std::uint32_t pv = order[i];
    std::int64_t anchor = -1;
    for (std::uint32_t w : padj[pv]) {
      if (position[w] < i) anchor = w;
    }
    auto try_vertex = [&](VertexId hv) -> bool {
      if (used[hv] || g.degree(hv) < padj[pv].size()) return false;
      for (std::uint32_t w : padj[pv]) {
        if (position[w] < i && !g.has_edge(hv, image[w])) return false;
      }
      image[pv] = hv;
      used[hv] = 1;
      if (self(self, i + 1)) return true;
      used[hv] = 0;
      return false;
    };
    if (anchor >= 0) {
      for (VertexId hv : g.neighbors(image[static_cast<std::size_t>(anchor)])) {
        if (try_vertex(hv)) return true;
      }
    } else {
      for (VertexId hv = 0; hv < n; ++hv) {
        if (try_vertex(hv)) return true;
      }
    }
    return false;
  };
  if (k > n || !place(place, 0)) return std::nullopt;
  return graph_witness(pat, image);
}

bool check_witness(const Hypergraph& h, const ForbiddenPattern& p, const Witness& w) {
  const std::size_t n = h.num_vertices();
  auto distinct_in_range = [&](const std::vector<VertexId>& vs) {
    std::vector<VertexId> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    return sorted.empty() || sorted.back() < n;
  };
  if (!distinct_in_range(w.vertices)) return false;

  if (p.kind == ForbiddenPattern::Kind::kBergeCycle) {
    const std::uint32_t l = p.a;
    if (w.vertices.size() != l || w.edges.size() != l) return false;
    std::vector<std::vector<VertexId>> seen;
    for (std::uint32_t i = 0; i < l; ++i) {
      std::vector<VertexId> e = w.edges[i];
      std::sort(e.begin(), e.end());
      if (!h.has_edge(e)) return false;
      if (std::find(seen.begin(), seen.end(), e) != seen.end()) return false;
      const VertexId a = w.vertices[i], b = w.vertices[(i + 1) % l];
      if (!std::binary_search(e.begin(), e.end(), a) || !std::binary_search(e.begin(), e.end(), b)) {
        return false;
      }
      seen.push_back(std::move(e));
    }
    return true;
  }

  if (h.uniformity() != 2) return false;
  const auto [k, edges] = pattern_graph(p);
  if (w.vertices.size() != k) return false;
  for (const auto& [a, b] : edges) {
    const VertexId pair[2] = {w.vertices[a], w.vertices[b]};
    if (!h.has_edge(pair)) return false;
  }
  return true;
}

std::optional<Witness> find_forbidden(const Hypergraph& h, const ForbiddenPattern& p,
                                      unsigned threads) {
  std::optional<Witness> w;
  if (p.kind == ForbiddenPattern::Kind::kBergeCycle) {
    w = contains_berge_cycle(h, p.a, threads);
  } else {
    if (h.uniformity() != 2) throw ParameterError(p.name() + " is a graph pattern; input is " +
                                                  std::to_string(h.uniformity()) + "-uniform");
    const Graph g = Graph::from(h);
    switch (p.kind) {
      case ForbiddenPattern::Kind::kCompleteBipartite:
        w = contains_kst(g, p.a, p.b, threads);
        break;
      case ForbiddenPattern::Kind::kCycle:
        w = contains_cycle(g, p.a, threads);
        break;
      case ForbiddenPattern::Kind::kTheta:
        w = contains_theta(g, p.a, p.b, threads);
        break;
      case ForbiddenPattern::Kind::kExplicit:
        w = contains_explicit(g, p.pattern_vertices, p.pattern_edges);
        break;
      case ForbiddenPattern::Kind::kBergeCycle:
        break;
    }
  }
  if (w && !check_witness(h, p, *w)) {
    throw std::logic_error("internal error: " + p.name() + " witness failed re-verification");
  }
  return w;
}

}  // namespace splitforge
