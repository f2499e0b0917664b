#include "splitforge/greedy_split.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "splitforge/errors.hpp"
#include "splitforge/rng.hpp"
#include "splitforge/spectral.hpp"
#include "splitforge/verify.hpp"

namespace splitforge {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

// Vertices within distance 2 of v, v included (may repeat).
template <class Fn>
void ball2(const Graph& g, VertexId v, Fn&& fn) {
  fn(v);
  for (VertexId x : g.neighbors(v)) {
    fn(x);
    for (VertexId z : g.neighbors(x)) fn(z);
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

}  // namespace

GreedySplitResult greedy_split(const Hypergraph& input, const ForbiddenPattern& pattern,
                               const GreedySplitOptions& options) {
  if (input.uniformity() != 2) throw ParameterError("greedy split works on graphs");
  const Graph g = Graph::from(input);
  const std::size_t n = g.num_vertices();
  if (n == 0) throw ParameterError("empty input graph");
  const std::size_t d = g.degree(0);
  for (VertexId v = 1; v < n; ++v) {
    if (g.degree(v) != d) throw ParameterError("input graph is not regular");
  }
  const auto [pn, pedges] = pattern_graph(pattern);
  {
    std::vector<std::uint32_t> deg(pn, 0);
    for (const auto& [a, b] : pedges) ++deg[a], ++deg[b];
    if (std::any_of(deg.begin(), deg.end(), [](std::uint32_t x) { return x == 1; })) {
      throw ParameterError(pattern.name() + " has a vertex of degree 1");
    }
  }
  const std::uint32_t m = options.parts;
  if (m < 2) throw ParameterError("need at least 2 parts");

  GreedySplitResult res;
  GreedySplitTrace& tr = res.trace;
  tr.seed_size = options.seed_size.value_or(
      static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(n) / m) - 1e-12)));
  if (tr.seed_size == 0) throw ParameterError("seed size must be positive");
  tr.target_s = options.target_s.value_or(tr.seed_size);
  tr.max_iters = options.max_iters.value_or(4 * tr.seed_size);
  if (std::uint64_t{m} * tr.seed_size * 2 > n) {
    throw ParameterError("m * seed_size = " + std::to_string(std::uint64_t{m} * tr.seed_size) +
                         " exceeds n/2 = " + std::to_string(n / 2));
  }

  const auto side = bipartition(g);
  const bool bip = !side.empty();
  std::vector<VertexId> pool_a, pool_b;
  for (VertexId v = 0; v < n; ++v) {
    if (!bip || side[v] == 0) pool_a.push_back(v);
    if (!bip || side[v] == 1) pool_b.push_back(v);
  }

  std::vector<std::uint32_t> part_of(n, kNone);
  std::vector<std::vector<VertexId>> parts(m);

  // Step 2: lexicographically least seed set per part, by backtracking.
  std::vector<std::uint32_t> near(n, 0);
  std::uint64_t nodes = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    std::vector<VertexId> chosen;
    auto search = [&](auto&& self, std::size_t from) -> bool {
      if (chosen.size() == tr.seed_size) return true;
      if (++nodes > options.seeding_budget) return false;
      for (std::size_t k = from; k < pool_a.size(); ++k) {
        const VertexId v = pool_a[k];
        if (part_of[v] != kNone || near[v] != 0) continue;
        chosen.push_back(v);
        ball2(g, v, [&](VertexId x) { ++near[x]; });
        if (self(self, k + 1)) return true;
        ball2(g, v, [&](VertexId x) { --near[x]; });
        chosen.pop_back();
      }
      return false;
    };
    if (!search(search, 0)) {
      std::size_t free_left = 0;
      for (VertexId v : pool_a) free_left += part_of[v] == kNone;
      throw ParameterError("seeding infeasible at part " + std::to_string(i) + ": " +
                           std::to_string(free_left) + " unused candidates, seed_size " +
                           std::to_string(tr.seed_size) +
                           (nodes > options.seeding_budget ? ", search budget exhausted" : ""));
    }
    for (VertexId v : chosen) {
      ball2(g, v, [&](VertexId x) { --near[x]; });
      part_of[v] = i;
      parts[i].push_back(v);
    }
  }
  const std::vector<std::vector<VertexId>> seeds = parts;

  std::vector<std::uint8_t> hit(std::size_t{m} * m, 0);
  auto mark_vertex = [&](VertexId y) {
    const std::uint32_t i = part_of[y];
    for (VertexId x : g.neighbors(y)) {
      const std::uint32_t j = part_of[x];
      if (j != kNone && j != i) hit[std::size_t{i} * m + j] = hit[std::size_t{j} * m + i] = 1;
    }
  };
  for (std::uint32_t i = 0; i < m; ++i) {
    for (VertexId v : parts[i]) mark_vertex(v);
  }
  auto s_value = [&](std::uint32_t i) {
    std::size_t s = 0;
    for (std::uint32_t j = 0; j < m; ++j) s += j != i && !hit[std::size_t{i} * m + j];
    return s;
  };

  // Step 3.
  std::optional<Rng> rng;
  if (options.seed) rng.emplace(*options.seed);
  std::vector<std::pair<std::uint32_t, VertexId>> added_input;  // per iteration, input ids
  std::vector<std::vector<std::pair<std::uint32_t, VertexId>>> added_per_iter;
  for (std::uint32_t it = 0;; ++it) {
    std::vector<std::size_t> svals(m);
    for (std::uint32_t i = 0; i < m; ++i) svals[i] = s_value(i);
    const std::size_t max_s = *std::max_element(svals.begin(), svals.end());
    if (max_s < tr.target_s) {
      tr.reached_target = true;
      break;
    }
    if (it >= tr.max_iters) break;
    GreedyIteration rec;
    rec.iter = it;
    rec.max_s = max_s;
    rec.s_values = svals;
    added_input.clear();
    for (std::uint32_t i = 0; i < m; ++i) {
      if (s_value(i) == 0) continue;
      std::size_t best = 0;
      std::vector<VertexId> ties;
      for (VertexId y : pool_b) {
        if (part_of[y] != kNone) continue;
        bool close = false;
        ball2(g, y, [&](VertexId x) { close = close || part_of[x] == i; });
        if (close) continue;
        std::vector<std::uint32_t> reached;
        for (VertexId x : g.neighbors(y)) {
          const std::uint32_t j = part_of[x];
          if (j != kNone && !hit[std::size_t{i} * m + j]) reached.push_back(j);
        }
        std::sort(reached.begin(), reached.end());
        const auto score = static_cast<std::size_t>(std::unique(reached.begin(), reached.end()) - reached.begin());
        if (score == 0 || score < best) continue;
        if (score > best) {
          best = score;
          ties.clear();
        }
        ties.push_back(y);
      }
      if (ties.empty()) continue;
      const VertexId y = rng ? ties[rng->below(ties.size())] : ties.front();
      part_of[y] = i;
      parts[i].push_back(y);
      mark_vertex(y);
      added_input.emplace_back(i, y);
    }
    tr.iterations.push_back(std::move(rec));
    added_per_iter.push_back(added_input);
    if (added_input.empty()) {
      tr.stagnated = true;
      break;
    }
  }
  for (std::uint32_t i = 0; i < m; ++i) tr.max_s_after_step3 = std::max(tr.max_s_after_step3, s_value(i));

  // Output vertex ids: original vertices in the parts ascending, then the
  // step-4 vertices.
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < n; ++v) {
    if (part_of[v] != kNone) keep.push_back(v);
  }
  std::vector<VertexId> out_id(n, kNone);
  for (std::size_t k = 0; k < keep.size(); ++k) out_id[keep[k]] = static_cast<VertexId>(k);
  res.graph = input.induced(keep);
  res.source = keep;
  res.partition.parts.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (VertexId v : parts[i]) res.partition.parts[i].push_back(out_id[v]);
    std::sort(res.partition.parts[i].begin(), res.partition.parts[i].end());
  }

  // Step 4: a fresh vertex in V_i joined to the least original vertex of V_j.
  std::size_t fresh = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) {
      if (i == j || hit[std::size_t{i} * m + j]) continue;
      const VertexId anchor = out_id[*std::min_element(parts[j].begin(), parts[j].end())];
      const std::string& al = res.graph.label(anchor);
      std::string tag;
      if (al.rfind("P:", 0) == 0) tag = "L:";
      if (al.rfind("L:", 0) == 0) tag = "P:";
      const VertexId v = res.graph.add_vertex(tag + "new" + std::to_string(fresh++));
      res.graph.add_edge({v, anchor});
      res.partition.parts[i].push_back(v);
      res.source.push_back(kNone);
      tr.patch_vertices.push_back(v);
      hit[std::size_t{i} * m + j] = hit[std::size_t{j} * m + i] = 1;
    }
  }
  res.partition.declared_k = static_cast<std::uint32_t>(res.partition.max_part_size());
  for (const auto& p : res.partition.parts) tr.final_part_sizes.push_back(p.size());
  for (std::size_t k = 0; k < tr.iterations.size(); ++k) {
    for (const auto& [i, y] : added_per_iter[k]) tr.iterations[k].added.emplace_back(i, out_id[y]);
  }

  tr.seeds_distance_ok = true;
  for (const auto& s : seeds) {
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        ball2(g, s[a], [&](VertexId x) { tr.seeds_distance_ok = tr.seeds_distance_ok && x != s[b]; });
      }
    }
  }

  const double a = std::log(static_cast<double>(std::max<std::size_t>(d, 1))) / std::log(static_cast<double>(n));
  if (a >= 1.0 / 3.0) tr.advisories.push_back("degree exponent a = " + fmt(a) + " is not below 1/3");
  if (options.check_hypotheses && d > 0) {
    const auto spec = spectrum(g);
    tr.advisories.push_back("rho / sqrt(d) = " + fmt(spec.rho / std::sqrt(static_cast<double>(d))));
  }
  {
    const Graph pg(pn, pedges);
    if (bipartition(pg).empty()) tr.advisories.push_back(pattern.name() + " is not bipartite");
  }
  tr.advisories.push_back("seed_size, target_s and max_iters are finite-n parameters; the asymptotic step counts do not apply");

  const auto rep = verify_rk(res.graph, res.partition);
  if (!rep.completeness_ok) throw std::logic_error("internal error: greedy split output is not complete");
  return res;
}

}  // namespace splitforge
