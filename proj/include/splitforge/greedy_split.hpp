#pragma once
// Greedy partitioning of a regular H-free graph into an (m,k)-graph:
//   1. start from m empty parts;
//   2. seed each part with vertices pairwise at distance >= 3 (from side X
//      of a bipartite graph);
//   3. while some part misses target_s or more parts, add to each part the
//      vertex at distance >= 3 from it that reaches the most missing parts;
//   4. give every remaining missing pair a fresh degree-1 vertex.
// The output is the subgraph induced on the parts plus the fresh vertices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitforge/forbidden.hpp"
#include "splitforge/hypergraph.hpp"

namespace splitforge {

struct GreedySplitOptions {
  std::uint32_t parts = 0;  // m
  // Defaults: seed_size = ceil(sqrt(n/m)), target_s = seed_size,
  // max_iters = 4 * seed_size.
  std::optional<std::uint32_t> seed_size;
  std::optional<std::uint32_t> target_s;
  std::optional<std::uint32_t> max_iters;
  // Seeded shuffle of step-3 ties; ties otherwise go to the least vertex id.
  std::optional<std::uint64_t> seed;
  // Compute the spectrum to report the advisory hypothesis flags.
  bool check_hypotheses = true;
  std::uint64_t seeding_budget = 50'000'000;
};

struct GreedyIteration {
  std::uint32_t iter = 0;
  std::size_t max_s = 0;                 // before the iteration
  std::vector<std::size_t> s_values;     // per part, before the iteration
  std::vector<std::pair<std::uint32_t, VertexId>> added;  // (part, output vertex)
};

struct GreedySplitTrace {
  std::uint32_t seed_size = 0, target_s = 0, max_iters = 0;
  std::vector<GreedyIteration> iterations;
  bool stagnated = false;         // step 3 stopped because nothing could be added
  bool reached_target = false;
  bool seeds_distance_ok = false; // post-hoc check of step 2
  std::size_t max_s_after_step3 = 0;
  std::vector<VertexId> patch_vertices;  // output ids of step-4 vertices
  std::vector<std::size_t> final_part_sizes;
  std::vector<std::string> advisories;
};

struct GreedySplitResult {
  Hypergraph graph;
  SplitPartition partition;
  GreedySplitTrace trace;
  std::vector<VertexId> source;  // output vertex -> input vertex, UINT32_MAX if new
};

// Throws ParameterError when preconditions fail or seeding is infeasible
// (the message carries the diagnostics).
GreedySplitResult greedy_split(const Hypergraph& g, const ForbiddenPattern& h,
                               const GreedySplitOptions& options);

}  // namespace splitforge
