#pragma once
// Exact f_m(r, H) for tiny instances by exhaustive search.

#include <cstdint>
#include <optional>
#include <vector>

#include "splitforge/forbidden.hpp"
#include "splitforge/hypergraph.hpp"

namespace splitforge {

inline constexpr std::uint32_t kOracleMaxR = 6;
inline constexpr std::uint32_t kOracleMaxK = 3;

struct OracleQuery {
  std::uint32_t r = 0;
  std::uint32_t m = 2;
  std::uint32_t k_max = kOracleMaxK;
  std::vector<ForbiddenPattern> patterns;  // free of all of them
  std::uint64_t budget = 20'000'000;       // search nodes per k
};

enum class OracleStatus {
  kValue,     // value is exact
  kAboveMax,  // every k <= k_max was refuted
  kUnknown,   // a budget ran out before a k was decided
};

struct OracleAttempt {
  std::uint32_t k = 0;
  Decision decision = Decision::kUndecided;  // kYes: feasible
  std::uint64_t nodes = 0;
};

struct OracleResult {
  OracleStatus status = OracleStatus::kUnknown;
  std::uint32_t value = 0;
  std::vector<OracleAttempt> attempts;
  // Certificate for value: vertex "i,j" is slot j of part i.
  std::optional<Hypergraph> graph;
  std::optional<SplitPartition> partition;
};

// Tries k = 1..k_max. Each try picks exactly one edge per m-set of parts,
// keeping only H-free partial graphs; within a part, a new edge may use the
// slots already used plus the first unused one. Throws ParameterError outside
// r <= 6, k_max <= 3, m in {2,3}.
OracleResult exact_f(const OracleQuery& query);

}  // namespace splitforge
