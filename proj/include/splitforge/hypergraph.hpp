#pragma once
// Labelled m-uniform hypergraphs, the m = 2 adjacency view, and vertex
// partitions into parts.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace splitforge {

using VertexId = std::uint32_t;

// Edges are stored sorted, back to back, m ids per edge. Edge ids are
// insertion order.
class Hypergraph {
 public:
  explicit Hypergraph(std::uint32_t m = 2);

  std::uint32_t uniformity() const { return m_; }
  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return flat_.size() / m_; }

  VertexId add_vertex(std::string label);
  // Throws std::invalid_argument on wrong arity, repeated or unknown
  // vertices, or a duplicate edge.
  void add_edge(std::span<const VertexId> vertices);
  void add_edge(std::initializer_list<VertexId> vertices) {
    add_edge(std::span<const VertexId>(vertices.begin(), vertices.size()));
  }
  // Returns false instead of throwing when the edge already exists.
  bool add_edge_if_new(std::span<const VertexId> vertices);
  bool has_edge(std::span<const VertexId> vertices) const;

  std::span<const VertexId> edge(std::size_t e) const {
    return {flat_.data() + e * m_, m_};
  }
  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Induced sub-hypergraph on the given vertices, in the given order.
  Hypergraph induced(std::span<const VertexId> keep) const;

 private:
  std::vector<VertexId> normalize(std::span<const VertexId> vertices) const;
  std::optional<std::size_t> find(std::span<const VertexId> sorted) const;
  static std::uint64_t hash(std::span<const VertexId> sorted);

  std::uint32_t m_;
  std::vector<std::string> labels_;
  std::vector<VertexId> flat_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;  // hash -> edge id
};

// Sorted adjacency lists of a simple graph (compressed rows).
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);
  // Requires uniformity 2.
  static Graph from(const Hypergraph& h);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return adj_.size() / 2; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adj_;
};

struct SplitPartition {
  std::uint32_t declared_k = 0;
  std::vector<std::vector<VertexId>> parts;

  std::size_t r() const { return parts.size(); }
  std::size_t max_part_size() const;
  // Throws std::invalid_argument if parts overlap, reference vertices outside
  // [0, n), or exceed declared_k.
  void validate(std::size_t n) const;
  // part_of[v] or UINT32_MAX for vertices outside every part.
  std::vector<std::uint32_t> part_index(std::size_t n) const;
};

// Connected components, vertices joined when they share an edge. Components
// are listed by smallest vertex; vertices within a component ascend.
std::vector<std::vector<VertexId>> components(const Hypergraph& h);
std::size_t max_component_size(const Hypergraph& h);

// Two-colouring by BFS; empty when the graph has an odd cycle. side[v] is 0
// or 1 and the smallest vertex of each component gets side 0.
std::vector<std::uint8_t> bipartition(const Graph& g);

enum class Decision { kYes, kNo, kUndecided };

struct PropertyBResult {
  Decision decision = Decision::kUndecided;
  std::vector<std::uint32_t> coloring;  // colour per vertex when kYes
  std::uint64_t nodes = 0;
};

// Decides whether some colouring with colours 0..c.size()-1 gives every edge
// exactly c[i] vertices of colour i. Exhaustive up to kPropertyBMaxVertices
// vertices and node_budget search nodes; beyond either the answer is
// kUndecided.
inline constexpr std::size_t kPropertyBMaxVertices = 24;
PropertyBResult property_B_check(const Hypergraph& h, std::span<const std::uint32_t> c,
                                 std::uint64_t node_budget = 50'000'000);

}  // namespace splitforge
