#pragma once
// Certification that a partitioned hypergraph is an (r,k)-hypergraph.

#include <cstdint>
#include <optional>
#include <vector>

#include "splitforge/forbidden.hpp"
#include "splitforge/hypergraph.hpp"

namespace splitforge {

inline constexpr std::size_t kMaxListedMissing = 1000;

struct VerificationReport {
  std::size_t r = 0;
  std::size_t k_effective = 0;
  bool completeness_ok = false;
  // First kMaxListedMissing uncovered part tuples in lexicographic order;
  // missing_count is the full count.
  std::vector<std::vector<std::uint32_t>> missing_tuples;
  std::uint64_t missing_count = 0;
  bool independence_ok = false;
  std::vector<std::uint32_t> dependent_parts;  // parts containing a whole edge
  std::optional<Witness> forbidden_witness;
  double wall_seconds = 0.0;
};

// Throws std::invalid_argument when the partition does not fit the graph.
VerificationReport verify_rk(const Hypergraph& h, const SplitPartition& p);

}  // namespace splitforge
