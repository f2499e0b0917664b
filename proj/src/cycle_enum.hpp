#pragma once
// Canonical enumeration of simple cycles through a fixed root: the root is
// the least vertex of the cycle and the second vertex is smaller than the
// last, so every cycle of the requested length is visited exactly once over
// all roots.

#include <cstdint>
#include <queue>
#include <vector>

#include "splitforge/hypergraph.hpp"

namespace splitforge::detail {

struct CycleScratch {
  std::vector<std::uint32_t> dist;
  std::vector<std::uint8_t> on_path;
  std::vector<VertexId> path;
  std::vector<VertexId> touched;

  void prepare(std::size_t n) {
    if (dist.size() != n) {
      dist.assign(n, UINT32_MAX);
      on_path.assign(n, 0);
    }
  }
};

// Calls fn(path) for every cycle of exactly `length` vertices rooted at
// `root`; stops early and returns true when fn returns true.
template <class Fn>
bool cycles_from(const Graph& g, VertexId root, std::uint32_t length, CycleScratch& s, Fn&& fn) {
  s.prepare(g.num_vertices());
  // Distances from the root inside the subgraph on vertices >= root, capped
  // at half the cycle length; a vertex farther than that cannot lie on a
  // qualifying cycle.
  const std::uint32_t cap = length / 2;
  s.touched.clear();
  std::queue<VertexId> bfs;
  s.dist[root] = 0;
  s.touched.push_back(root);
  bfs.push(root);
  while (!bfs.empty()) {
    const VertexId x = bfs.front();
    bfs.pop();
    if (s.dist[x] == cap) continue;
    for (VertexId y : g.neighbors(x)) {
      if (y > root && s.dist[y] == UINT32_MAX) {
        s.dist[y] = s.dist[x] + 1;
        s.touched.push_back(y);
        bfs.push(y);
      }
    }
  }

  bool stop = false;
  s.path.assign(1, root);
  s.on_path[root] = 1;
  // Explicit stack of neighbour cursors keeps deep searches off the call stack.
  std::vector<std::size_t> cursor(1, 0);
  while (!cursor.empty() && !stop) {
    const VertexId x = s.path.back();
    const auto nb = g.neighbors(x);
    const std::uint32_t depth = static_cast<std::uint32_t>(s.path.size()) - 1;
    if (s.path.size() == length) {
      if (s.path[1] < s.path.back() && g.has_edge(x, root)) stop = fn(s.path);
      s.on_path[x] = 0;
      s.path.pop_back();
      cursor.pop_back();
      continue;
    }
    bool advanced = false;
    while (cursor.back() < nb.size()) {
      const VertexId y = nb[cursor.back()++];
      if (y <= root || s.on_path[y] || s.dist[y] == UINT32_MAX) continue;
      // After stepping to y, length - depth - 1 edges remain to close.
      if (s.dist[y] > length - depth - 1) continue;
      s.path.push_back(y);
      s.on_path[y] = 1;
      cursor.push_back(0);
      advanced = true;
      break;
    }
    if (!advanced) {
      s.on_path[x] = 0;
      s.path.pop_back();
      cursor.pop_back();
    }
  }
  for (VertexId v : s.path) s.on_path[v] = 0;
  for (VertexId v : s.touched) s.dist[v] = UINT32_MAX;
  return stop;
}

}  // namespace splitforge::detail
