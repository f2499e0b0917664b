#include "splitforge/oracle.hpp"

#include <stdexcept>

#include "splitforge/errors.hpp"
#include "splitforge/verify.hpp"

namespace splitforge {

namespace {

struct Search {
  const OracleQuery& q;
  std::uint32_t k;
  std::vector<std::vector<std::uint32_t>> tuples;  // m-sets of parts, lexicographic
  std::vector<std::uint32_t> used;                 // slots used per part
  Hypergraph h;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  Search(const OracleQuery& query, std::uint32_t kk) : q(query), k(kk), used(query.r, 0), h(query.m) {
    for (std::uint32_t i = 0; i < q.r; ++i) {
      for (std::uint32_t j = 0; j < k; ++j) h.add_vertex(std::to_string(i) + "," + std::to_string(j));
    }
    std::vector<std::uint32_t> t(q.m);
    auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t from) -> void {
      if (pos == q.m) {
        tuples.push_back(t);
        return;
      }
      for (std::uint32_t i = from; i < q.r; ++i) {
        t[pos] = i;
        self(self, pos + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }

  bool h_free() {
    for (const auto& p : q.patterns) {
      if (find_forbidden(h, p, 1)) return false;
    }
    return true;
  }

  bool run(std::size_t idx) {
    if (idx == tuples.size()) return true;
    const auto& t = tuples[idx];
    std::vector<VertexId> edge(q.m);
    auto choose = [&](auto&& self, std::uint32_t pos) -> bool {
      if (pos == q.m) {
        if (++nodes > q.budget) {
          exhausted = true;
          return false;
        }
        Hypergraph saved = h;
        h.add_edge(edge);
        if (h_free() && run(idx + 1)) return true;
        h = std::move(saved);
        return false;
      }
      const std::uint32_t part = t[pos];
      const std::uint32_t limit = std::min(k, used[part] + 1);
      for (std::uint32_t j = 0; j < limit && !exhausted; ++j) {
        edge[pos] = part * k + j;
        const std::uint32_t before = used[part];
        used[part] = std::max(used[part], j + 1);
        if (self(self, pos + 1)) return true;
        used[part] = before;
      }
      return false;
    };
    return choose(choose, 0);
  }
};

}  // namespace

OracleResult exact_f(const OracleQuery& query) {
  if (query.m != 2 && query.m != 3) throw ParameterError("oracle supports m in {2,3}");
  if (query.r <= query.m || query.r > kOracleMaxR) {
    throw ParameterError("oracle supports m < r <= " + std::to_string(kOracleMaxR));
  }
  if (query.k_max < 1 || query.k_max > kOracleMaxK) {
    throw ParameterError("oracle supports 1 <= k_max <= " + std::to_string(kOracleMaxK));
  }
  if (query.patterns.empty()) throw ParameterError("oracle needs at least one forbidden pattern");
  OracleResult res;
  for (std::uint32_t k = 1; k <= query.k_max; ++k) {
    Search s(query, k);
    const bool found = s.run(0);
    OracleAttempt at{k, found ? Decision::kYes : (s.exhausted ? Decision::kUndecided : Decision::kNo), s.nodes};
    res.attempts.push_back(at);
    if (at.decision == Decision::kUndecided) {
      res.status = OracleStatus::kUnknown;
      return res;
    }
    if (!found) continue;
    SplitPartition p;
    p.declared_k = k;
    p.parts.resize(query.r);
    for (std::uint32_t i = 0; i < query.r; ++i) {
      for (std::uint32_t j = 0; j < k; ++j) p.parts[i].push_back(i * k + j);
    }
    if (!verify_rk(s.h, p).completeness_ok) throw std::logic_error("oracle certificate is incomplete");
    for (const auto& pat : query.patterns) {
      if (find_forbidden(s.h, pat, 1)) throw std::logic_error("oracle certificate contains " + pat.name());
    }
    res.status = OracleStatus::kValue;
    res.value = k;
    res.graph = std::move(s.h);
    res.partition = std::move(p);
    return res;
  }
  res.status = OracleStatus::kAboveMax;
  return res;
}

}  // namespace splitforge
