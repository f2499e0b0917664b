#include <gtest/gtest.h>

#include <random>

#include "splitforge/constructions.hpp"
#include "splitforge/errors.hpp"
#include "splitforge/forbidden.hpp"
#include "test_util.hpp"

using namespace splitforge;
using testutil::Edges;

namespace {

struct Case {
  ForbiddenPattern pattern;
  std::uint32_t pn;
  Edges pe;
};

std::vector<Case> graph_cases() {
  std::vector<Case> out;
  for (auto [s, t] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 3}, {2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    out.push_back({ForbiddenPattern::complete_bipartite(s, t), s + t, testutil::kst_pattern(s, t)});
  }
  for (std::uint32_t len = 3; len <= 8; ++len) {
    out.push_back({ForbiddenPattern::cycle(len), len, testutil::cycle_pattern(len)});
  }
  for (auto [k, l] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}, {3, 3}, {4, 2}, {3, 4}}) {
    auto [pn, pe] = testutil::theta_pattern(k, l);
    out.push_back({ForbiddenPattern::theta(k, l), pn, pe});
  }
  Edges paw = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  out.push_back({ForbiddenPattern::explicit_graph(4, paw), 4, paw});
  return out;
}

}  // namespace

TEST(Forbidden, DecidersAgreeWithBruteForce) {
  std::mt19937_64 rng(2024);
  const auto cases = graph_cases();
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 5 + trial % 8;
    const double density = 0.15 + 0.05 * (trial % 7);
    const auto edges = testutil::random_edges(n, density, rng);
    const auto h = testutil::graph_from_edges(n, edges);
    for (const auto& c : cases) {
      const bool expect = testutil::brute_embeds(n, edges, c.pn, c.pe);
      const auto w = find_forbidden(h, c.pattern, 1);
      ASSERT_EQ(w.has_value(), expect) << c.pattern.name() << " trial " << trial;
      if (w) {
        EXPECT_TRUE(check_witness(h, c.pattern, *w));
      }
    }
  }
}

TEST(Forbidden, BergeCyclesAgreeWithBruteForce) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 5 + trial % 4;
    Hypergraph h(3);
    for (std::size_t v = 0; v < n; ++v) h.add_vertex(std::to_string(v));
    std::vector<std::vector<std::uint32_t>> edges;
    const int m = 2 + trial % 5;
    for (int i = 0; i < m; ++i) {
      std::vector<VertexId> e;
      while (e.size() < 3) {
        const auto v = static_cast<VertexId>(rng() % n);
        if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
      }
      if (h.add_edge_if_new(e)) {
        std::sort(e.begin(), e.end());
        edges.push_back({e.begin(), e.end()});
      }
    }
    for (std::uint32_t l = 2; l <= 4; ++l) {
      const bool expect = testutil::brute_berge(edges, n, l);
      const auto w = contains_berge_cycle(h, l, 1);
      ASSERT_EQ(w.has_value(), expect) << "l=" << l << " trial " << trial;
      if (w) {
        EXPECT_TRUE(check_witness(h, ForbiddenPattern::berge_cycle(l), *w));
      }
    }
  }
}

TEST(Forbidden, ResultsDoNotDependOnThreads) {
  std::mt19937_64 rng(17);
  const auto edges = testutil::random_edges(60, 0.08, rng);
  const Graph g(60, edges);
  for (std::uint32_t len : {4, 5, 6, 8}) {
    const auto a = contains_cycle(g, len, 1), b = contains_cycle(g, len, 4);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->vertices, b->vertices);
    }
  }
  const auto a = contains_kst(g, 2, 2, 1), b = contains_kst(g, 2, 2, 4);
  ASSERT_EQ(a.has_value(), b.has_value());
  if (a) {
    EXPECT_EQ(a->vertices, b->vertices);
  }
}

TEST(Forbidden, WengerW2q3IsC6FreeWithGirth8) {
  const auto h = build_wenger(2, 3);
  const auto g = Graph::from(h);
  EXPECT_FALSE(contains_cycle(g, 4).has_value());
  EXPECT_FALSE(contains_cycle(g, 6).has_value());
  EXPECT_TRUE(contains_cycle(g, 8).has_value());
  EXPECT_EQ(girth(g), 8u);
  EXPECT_EQ(girth(Graph(10, testutil::petersen_edges())), 5u);
  EXPECT_FALSE(girth(Graph(4, testutil::Edges{{0, 1}, {1, 2}, {2, 3}})).has_value());
}

TEST(Forbidden, ParseAndName) {
  EXPECT_EQ(ForbiddenPattern::parse("K_{3,2}").name(), "K_{2,3}");
  EXPECT_EQ(ForbiddenPattern::parse("C_6").name(), ForbiddenPattern::parse("C_{6}").name());
  EXPECT_EQ(ForbiddenPattern::parse("theta_{3,4}").kind, ForbiddenPattern::Kind::kTheta);
  EXPECT_EQ(ForbiddenPattern::parse("bergeC_{3}").a, 3u);
  const auto ex = ForbiddenPattern::parse("graph:3:0-1,1-2");
  EXPECT_EQ(ex.kind, ForbiddenPattern::Kind::kExplicit);
  EXPECT_EQ(ex.pattern_edges.size(), 2u);
  for (const char* bad : {"", "K_{0,2}", "C_2", "theta_{1,3}", "foo", "graph:2:0-5", "C_{x}"}) {
    EXPECT_THROW(ForbiddenPattern::parse(bad), ParameterError) << bad;
  }
}

TEST(Forbidden, CompleteBipartiteFindsItself) {
  const auto h = testutil::graph_from_edges(4, testutil::complete_bipartite_edges(2, 2));
  const auto w = find_forbidden(h, ForbiddenPattern::complete_bipartite(2, 2));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(check_witness(h, ForbiddenPattern::complete_bipartite(2, 2), *w));
  Witness fake = *w;
  fake.vertices[0] = fake.vertices[1];
  EXPECT_FALSE(check_witness(h, ForbiddenPattern::complete_bipartite(2, 2), fake));
}
