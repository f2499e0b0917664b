#pragma once
// Explicit m-(r,t,1) designs: every m-set of points lies in exactly one block.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace splitforge {

struct DesignInstance {
  std::string id;
  std::uint32_t points = 0;  // r
  std::uint32_t block_size = 0;  // t
  std::uint32_t strength = 0;  // m
  std::vector<std::vector<std::uint32_t>> blocks;  // sorted point lists

  // C(r-1, m-1) / C(t-1, m-1); exact for a valid design.
  std::uint64_t replication() const;
};

// Ids: "fano", "PG(2,q)", "AG(2,q)" (prime power q <= 32), "STS(9)",
// "all-m-subsets(r,m)". Throws ParameterError for unknown ids or bad q.
DesignInstance design_catalog(std::string_view id);

// Throws ParameterError naming an m-set that is covered zero or several
// times.
void validate_design(const DesignInstance& d);

}  // namespace splitforge
