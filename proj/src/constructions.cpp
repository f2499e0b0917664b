#include "splitforge/constructions.hpp"

#include <algorithm>

#include "construction_util.hpp"

namespace splitforge {

using detail::field_for;
using detail::join_ints;
using gf::FieldElement;

namespace {

// Coordinates of a tuple in GF(q)^len, first coordinate most significant.
std::vector<std::uint32_t> decode(std::uint64_t idx, std::uint32_t q, std::uint32_t len) {
  std::vector<std::uint32_t> c(len);
  for (std::uint32_t i = len; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
  return c;
}

std::uint64_t encode(const std::vector<std::uint32_t>& c, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (std::uint32_t x : c) idx = idx * q + x;
  return idx;
}

// Enumerates the tuples whose coordinates at `fixed` positions equal `values`
// and whose other coordinates range freely, as indices.
std::vector<VertexId> fibre(std::uint32_t q, std::uint32_t len, const std::vector<std::uint32_t>& fixed,
                            const std::vector<std::uint32_t>& values, VertexId offset) {
  std::vector<std::uint32_t> free_pos;
  for (std::uint32_t i = 0; i < len; ++i) {
    if (std::find(fixed.begin(), fixed.end(), i) == fixed.end()) free_pos.push_back(i);
  }
  std::vector<VertexId> out;
  std::vector<std::uint32_t> c(len);
  for (std::size_t i = 0; i < fixed.size(); ++i) c[fixed[i]] = values[i];
  const std::uint64_t count = nt::ipow(q, static_cast<std::uint32_t>(free_pos.size()));
  for (std::uint64_t k = 0; k < count; ++k) {
    const auto f = decode(k, q, static_cast<std::uint32_t>(free_pos.size()));
    for (std::size_t i = 0; i < free_pos.size(); ++i) c[free_pos[i]] = f[i];
    out.push_back(offset + static_cast<VertexId>(encode(c, q)));
  }
  return out;
}

// Parts P_i + L_{perm[i]} with the internal edges removed.
Construction merge_sides(const Hypergraph& g, const std::vector<std::vector<VertexId>>& p_parts,
                         const std::vector<std::vector<VertexId>>& l_parts,
                         const std::vector<std::uint32_t>& perm) {
  Construction out;
  out.partition.parts.resize(p_parts.size());
  for (std::size_t i = 0; i < p_parts.size(); ++i) {
    auto& part = out.partition.parts[i];
    part = p_parts[i];
    part.insert(part.end(), l_parts[perm[i]].begin(), l_parts[perm[i]].end());
  }
  out.partition.declared_k = static_cast<std::uint32_t>(out.partition.max_part_size());
  out.graph = detail::strip_internal(g, out.partition, out.internal_edges_removed);
  return out;
}

}  // namespace

Hypergraph build_wenger(std::uint32_t m_eqs, std::uint32_t q) {
  if (m_eqs < 1) throw ParameterError("Wenger graphs need M >= 1");
  const auto f = field_for(q);
  const std::uint32_t len = m_eqs + 1;
  const std::uint64_t side = nt::ipow(q, len);
  if (side > (1u << 22)) throw ParameterError("Wenger graph too large");
  Hypergraph g(2);
  for (std::uint64_t i = 0; i < side; ++i) g.add_vertex("P:" + join_ints(decode(i, q, len)));
  for (std::uint64_t i = 0; i < side; ++i) g.add_vertex("L:" + join_ints(decode(i, q, len)));
  std::vector<std::uint32_t> l(len);
  for (std::uint64_t i = 0; i < side; ++i) {
    const auto p = decode(i, q, len);
    for (std::uint32_t l1 = 0; l1 < q; ++l1) {
      l[0] = l1;
      for (std::uint32_t j = 0; j < m_eqs; ++j) {
        l[j + 1] = f.sub(f.mul({l[j]}, {p[0]}), {p[j + 1]}).value;
      }
      g.add_edge({static_cast<VertexId>(i), static_cast<VertexId>(side + encode(l, q))});
    }
  }
  return g;
}

Construction partition_wenger(std::uint32_t m_eqs, std::uint32_t q, std::optional<std::uint64_t> seed) {
  if (m_eqs != 2 && m_eqs != 4) throw ParameterError("Wenger partitions exist for M = 2 and M = 4");
  const Hypergraph g = build_wenger(m_eqs, q);
  const std::uint32_t len = m_eqs + 1;
  const auto side = static_cast<VertexId>(nt::ipow(q, len));
  // Fixed coordinates (0-based): points (p1, p3[, p5]), lines (l1, l2[, l4]).
  const std::vector<std::uint32_t> p_fixed = m_eqs == 2 ? std::vector<std::uint32_t>{0, 2}
                                                        : std::vector<std::uint32_t>{0, 2, 4};
  const std::vector<std::uint32_t> l_fixed = m_eqs == 2 ? std::vector<std::uint32_t>{0, 1}
                                                        : std::vector<std::uint32_t>{0, 1, 3};
  const auto fixed_count = static_cast<std::uint32_t>(p_fixed.size());
  const std::uint64_t parts = nt::ipow(q, fixed_count);
  std::vector<std::vector<VertexId>> p_parts, l_parts;
  for (std::uint64_t k = 0; k < parts; ++k) {
    const auto values = decode(k, q, fixed_count);
    p_parts.push_back(fibre(q, len, p_fixed, values, 0));
    l_parts.push_back(fibre(q, len, l_fixed, values, side));
  }
  return merge_sides(g, p_parts, l_parts, detail::pairing(parts, seed));
}

Construction build_theta(std::uint32_t q, std::optional<std::uint64_t> seed) {
  const auto pp = nt::prime_power(q);
  if (!pp || pp->first == 2 || pp->second % 2 != 0) {
    throw ParameterError("theta construction needs q an even power of an odd prime, got " +
                         std::to_string(q));
  }
  const gf::FieldTower tower(pp->first, pp->second / 2, 2);
  const gf::QuadraticSplit split(tower);
  const auto& f = tower.extension();
  const std::uint32_t s = tower.base().order();
  const std::uint64_t side64 = nt::ipow(q, 4);
  if (side64 > (1u << 22)) throw ParameterError("theta graph too large");
  const auto side = static_cast<VertexId>(side64);

  Hypergraph g(2);
  for (VertexId i = 0; i < side; ++i) g.add_vertex("P:" + join_ints(decode(i, q, 4)));
  for (VertexId i = 0; i < side; ++i) g.add_vertex("L:" + join_ints(decode(i, q, 4)));
  for (VertexId i = 0; i < side; ++i) {
    const auto v = decode(i, q, 4);
    const FieldElement v1{v[0]}, v2{v[1]}, v3{v[2]}, v4{v[3]};
    for (std::uint32_t x = 0; x < q; ++x) {
      const FieldElement w1{x};
      const FieldElement w2 = f.sub(f.mul(v1, w1), v2);
      const FieldElement w3 = f.sub(f.mul(f.mul(v1, v1), w1), v4);
      const FieldElement w4 = f.sub(f.mul(v1, f.mul(w1, w1)), v3);
      g.add_edge({i, side + static_cast<VertexId>(encode({w1.value, w2.value, w3.value, w4.value}, q))});
    }
  }

  // P_{v1, v3_2, v4}: v2 and v3_1 free. L_{w1, w2, w4_1}: w3 and w4_2 free.
  const std::uint64_t parts = std::uint64_t{q} * s * q;
  std::vector<std::vector<VertexId>> p_parts(parts), l_parts(parts);
  for (std::uint32_t v1 = 0; v1 < q; ++v1) {
    for (std::uint32_t v32 = 0; v32 < s; ++v32) {
      for (std::uint32_t v4 = 0; v4 < q; ++v4) {
        auto& part = p_parts[(std::uint64_t{v1} * s + v32) * q + v4];
        for (std::uint32_t v2 = 0; v2 < q; ++v2) {
          for (std::uint32_t v31 = 0; v31 < s; ++v31) {
            const auto v3 = split.join({v31}, {v32});
            part.push_back(static_cast<VertexId>(encode({v1, v2, v3.value, v4}, q)));
          }
        }
        std::sort(part.begin(), part.end());
      }
    }
  }
  for (std::uint32_t w1 = 0; w1 < q; ++w1) {
    for (std::uint32_t w2 = 0; w2 < q; ++w2) {
      for (std::uint32_t w41 = 0; w41 < s; ++w41) {
        auto& part = l_parts[(std::uint64_t{w1} * q + w2) * s + w41];
        for (std::uint32_t w3 = 0; w3 < q; ++w3) {
          for (std::uint32_t w42 = 0; w42 < s; ++w42) {
            const auto w4 = split.join({w41}, {w42});
            part.push_back(side + static_cast<VertexId>(encode({w1, w2, w3, w4.value}, q)));
          }
        }
        std::sort(part.begin(), part.end());
      }
    }
  }
  return merge_sides(g, p_parts, l_parts, detail::pairing(parts, seed));
}

Construction build_berge3(std::uint32_t q) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw ParameterError("q=" + std::to_string(q) + " is not a prime power");
  if (pp->first == 2) throw ParameterError("berge3 needs odd characteristic (2 must be invertible)");
  const auto f = field_for(q);
  const FieldElement half = f.inv(f.from_int(2));

  Construction out;
  out.graph = Hypergraph(3);
  std::vector<VertexId> id(std::uint64_t{q} * q, UINT32_MAX);
  out.partition.parts.resize(q);
  for (std::uint32_t x1 = 0; x1 < q; ++x1) {
    const FieldElement on_parabola = f.mul(half, f.mul({x1}, {x1}));
    for (std::uint32_t x2 = 0; x2 < q; ++x2) {
      if (x2 == on_parabola.value) continue;
      const VertexId v = out.graph.add_vertex(join_ints({x1, x2}));
      id[std::uint64_t{x1} * q + x2] = v;
      out.partition.parts[x1].push_back(v);
    }
  }
  out.partition.declared_k = q - 1;
  for (std::uint32_t a1 = 0; a1 < q; ++a1) {
    for (std::uint32_t b1 = a1 + 1; b1 < q; ++b1) {
      for (std::uint32_t c1 = b1 + 1; c1 < q; ++c1) {
        const FieldElement ab = f.mul({a1}, {b1}), bc = f.mul({b1}, {c1}), ca = f.mul({c1}, {a1});
        const FieldElement a2 = f.mul(half, f.add(f.sub(ab, bc), ca));
        const FieldElement b2 = f.mul(half, f.add(f.sub(bc, ca), ab));
        const FieldElement c2 = f.mul(half, f.add(f.sub(ca, ab), bc));
        const VertexId e[3] = {id[std::uint64_t{a1} * q + a2.value], id[std::uint64_t{b1} * q + b2.value],
                               id[std::uint64_t{c1} * q + c2.value]};
        out.graph.add_edge(e);
      }
    }
  }
  if (pp->second % 2 != 0) {
    out.notes.push_back("q=" + std::to_string(q) +
                        " is not an even power of an odd prime; Berge-cycle freeness is checked, not implied");
  }
  return out;
}

Construction build_design_split(const DesignInstance& design, std::uint32_t m) {
  if (m != design.strength) {
    throw ParameterError("design " + design.id + " has strength " + std::to_string(design.strength) +
                         ", requested m=" + std::to_string(m));
  }
  validate_design(design);
  Construction out;
  out.graph = Hypergraph(m);
  out.partition.parts.resize(design.points);
  std::vector<VertexId> copy;
  std::vector<std::uint32_t> idx(m);
  for (std::uint32_t j = 0; j < design.blocks.size(); ++j) {
    const auto& block = design.blocks[j];
    copy.clear();
    for (std::uint32_t p : block) {
      const VertexId v = out.graph.add_vertex(join_ints({p, j}));
      copy.push_back(v);
      out.partition.parts[p].push_back(v);
    }
    // Complete m-graph on the copy.
    const auto t = static_cast<std::uint32_t>(copy.size());
    for (std::uint32_t i = 0; i < m; ++i) idx[i] = i;
    std::vector<VertexId> e(m);
    while (true) {
      for (std::uint32_t i = 0; i < m; ++i) e[i] = copy[idx[i]];
      out.graph.add_edge(e);
      int i = static_cast<int>(m) - 1;
      while (i >= 0 && idx[i] == t - m + static_cast<std::uint32_t>(i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::uint32_t k = static_cast<std::uint32_t>(i) + 1; k < m; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  out.partition.declared_k = static_cast<std::uint32_t>(design.replication());
  return out;
}

Construction build_property_B(std::uint32_t m, const std::vector<std::uint32_t>& c, std::uint32_t r) {
  std::uint64_t total = 0;
  for (std::uint32_t x : c) {
    if (x == 0) throw ParameterError("colour counts must be positive");
    total += x;
  }
  if (c.empty() || total != m) throw ParameterError("colour counts must sum to m");
  if (m < 2 || r < m) throw ParameterError("property-B construction needs 2 <= m <= r");
  if (nt::binomial(r, m) > 5'000'000) throw ParameterError("too many part tuples");
  const auto k = static_cast<std::uint32_t>(c.size());

  Construction out;
  out.graph = Hypergraph(m);
  out.partition.declared_k = k;
  out.partition.parts.resize(r);
  for (std::uint32_t i = 0; i < r; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      out.partition.parts[i].push_back(out.graph.add_vertex(join_ints({i, j})));
    }
  }
  // Colours in nondecreasing order, c[0] copies of 0 first.
  std::vector<std::uint32_t> colours;
  for (std::uint32_t j = 0; j < k; ++j) colours.insert(colours.end(), c[j], j);
  std::vector<std::uint32_t> idx(m);
  for (std::uint32_t i = 0; i < m; ++i) idx[i] = i;
  std::vector<VertexId> e(m);
  while (true) {
    for (std::uint32_t i = 0; i < m; ++i) e[i] = out.partition.parts[idx[i]][colours[i]];
    out.graph.add_edge(e);
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && idx[i] == r - m + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace splitforge
