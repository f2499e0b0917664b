#include "splitforge/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "splitforge/errors.hpp"

namespace splitforge {

Hypergraph::Hypergraph(std::uint32_t m) : m_(m) {
  if (m < 2) throw ParameterError("uniformity must be at least 2");
}

VertexId Hypergraph::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<VertexId>(labels_.size() - 1);
}

std::vector<VertexId> Hypergraph::normalize(std::span<const VertexId> vertices) const {
  if (vertices.size() != m_) {
    throw std::invalid_argument("edge has " + std::to_string(vertices.size()) +
                                " vertices, expected " + std::to_string(m_));
  }
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= labels_.size()) {
      throw std::invalid_argument("edge references unknown vertex " + std::to_string(sorted[i]));
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw std::invalid_argument("edge repeats vertex " + std::to_string(sorted[i]));
    }
  }
  return sorted;
}

std::uint64_t Hypergraph::hash(std::span<const VertexId> sorted) {
  std::uint64_t h = 1469598103934665603ull;
  for (VertexId v : sorted) {
    h ^= v;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

std::optional<std::size_t> Hypergraph::find(std::span<const VertexId> sorted) const {
  const auto [lo, hi] = index_.equal_range(hash(sorted));
  for (auto it = lo; it != hi; ++it) {
    const auto e = edge(it->second);
    if (std::equal(e.begin(), e.end(), sorted.begin())) return it->second;
  }
  return std::nullopt;
}

bool Hypergraph::add_edge_if_new(std::span<const VertexId> vertices) {
  const auto sorted = normalize(vertices);
  if (find(sorted)) return false;
  const auto id = static_cast<std::uint32_t>(num_edges());
  flat_.insert(flat_.end(), sorted.begin(), sorted.end());
  index_.emplace(hash(sorted), id);
  return true;
}

void Hypergraph::add_edge(std::span<const VertexId> vertices) {
  if (!add_edge_if_new(vertices)) throw std::invalid_argument("duplicate edge");
}

bool Hypergraph::has_edge(std::span<const VertexId> vertices) const {
  if (vertices.size() != m_) return false;
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  return find(sorted).has_value();
}

Hypergraph Hypergraph::induced(std::span<const VertexId> keep) const {
  Hypergraph out(m_);
  std::vector<VertexId> remap(num_vertices(), UINT32_MAX);
  for (VertexId v : keep) {
    if (remap[v] != UINT32_MAX) throw std::invalid_argument("repeated vertex in induced()");
    remap[v] = out.add_vertex(labels_[v]);
  }
  std::vector<VertexId> mapped(m_);
  for (std::size_t e = 0; e < num_edges(); ++e) {
    bool inside = true;
    const auto ed = edge(e);
    for (std::uint32_t i = 0; i < m_ && inside; ++i) {
      mapped[i] = remap[ed[i]];
      inside = mapped[i] != UINT32_MAX;
    }
    if (inside) out.add_edge(mapped);
  }
  return out;
}

Graph::Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
  offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw std::invalid_argument("invalid graph edge");
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adj_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

Graph Graph::from(const Hypergraph& h) {
  if (h.uniformity() != 2) throw std::invalid_argument("graph view needs a 2-uniform hypergraph");
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(h.num_edges());
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto ed = h.edge(e);
    edges.emplace_back(ed[0], ed[1]);
  }
  return Graph(h.num_vertices(), edges);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t SplitPartition::max_part_size() const {
  std::size_t k = 0;
  for (const auto& p : parts) k = std::max(k, p.size());
  return k;
}

void SplitPartition::validate(std::size_t n) const {
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() > declared_k) {
      throw std::invalid_argument("part " + std::to_string(i) + " has " +
                                  std::to_string(parts[i].size()) + " vertices, declared k is " +
                                  std::to_string(declared_k));
    }
    for (VertexId v : parts[i]) {
      if (v >= n) throw std::invalid_argument("part " + std::to_string(i) + " references vertex " +
                                              std::to_string(v) + " outside the graph");
      if (seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " lies in two parts");
      seen[v] = true;
    }
  }
}

std::vector<std::uint32_t> SplitPartition::part_index(std::size_t n) const {
  std::vector<std::uint32_t> out(n, UINT32_MAX);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (VertexId v : parts[i]) out[v] = static_cast<std::uint32_t>(i);
  }
  return out;
}

std::vector<std::vector<VertexId>> components(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto ed = h.edge(e);
    for (std::size_t i = 1; i < ed.size(); ++i) {
      VertexId a = root(ed[0]), b = root(ed[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId r = root(v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

std::size_t max_component_size(const Hypergraph& h) {
  std::size_t best = 0;
  for (const auto& c : components(h)) best = std::max(best, c.size());
  return best;
}

std::vector<std::uint8_t> bipartition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> side(n, 2);
  std::queue<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (side[s] != 2) continue;
    side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop();
      for (VertexId w : g.neighbors(u)) {
        if (side[w] == 2) {
          side[w] = static_cast<std::uint8_t>(1 - side[u]);
          queue.push(w);
        } else if (side[w] == side[u]) {
          return {};
        }
      }
    }
  }
  return side;
}

PropertyBResult property_B_check(const Hypergraph& h, std::span<const std::uint32_t> c,
                                 std::uint64_t node_budget) {
  PropertyBResult result;
  const std::uint32_t m = h.uniformity();
  if (c.empty() || std::accumulate(c.begin(), c.end(), std::uint64_t{0}) != m ||
      std::any_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; })) {
    throw ParameterError("colour profile must be positive and sum to the uniformity");
  }
  const std::size_t n = h.num_vertices();
  if (n > kPropertyBMaxVertices) return result;

  const std::size_t colours = c.size();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (VertexId v : h.edge(e)) incident[v].push_back(e);
  }
  std::vector<std::uint32_t> counts(h.num_edges() * colours, 0);
  std::vector<std::uint32_t> colour(n, 0);

  bool exhausted = false;
  auto search = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    if (++result.nodes > node_budget) {
      exhausted = true;
      return false;
    }
    if (incident[v].empty()) {
      colour[v] = 0;
      return self(self, v + 1);
    }
    for (std::uint32_t col = 0; col < colours; ++col) {
      bool ok = true;
      for (std::size_t e : incident[v]) {
        if (counts[e * colours + col] + 1 > c[col]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t e : incident[v]) ++counts[e * colours + col];
      colour[v] = col;
      if (self(self, v + 1)) return true;
      for (std::size_t e : incident[v]) --counts[e * colours + col];
      if (exhausted) return false;
    }
    return false;
  };

  if (search(search, 0)) {
    result.decision = Decision::kYes;
    result.coloring = colour;
  } else {
    result.decision = exhausted ? Decision::kUndecided : Decision::kNo;
  }
  return result;
}

}  // namespace splitforge
