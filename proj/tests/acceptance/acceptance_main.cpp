// Acceptance suite. Usage: acceptance <splitforge-binary> <work-dir> [--only N]
// Prints one PASS/FAIL line per criterion; exits nonzero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "splitforge/bounds.hpp"
#include "splitforge/constructions.hpp"
#include "splitforge/forbidden.hpp"
#include "splitforge/greedy_split.hpp"
#include "splitforge/io.hpp"
#include "splitforge/numtheory.hpp"
#include "splitforge/oracle.hpp"
#include "splitforge/parallel.hpp"
#include "splitforge/spectral.hpp"
#include "splitforge/verify.hpp"

using namespace splitforge;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_work;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string path(const std::string& name) { return (g_work / name).string(); }

int run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " > " + path("stdout.txt") + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. construct wenger --M 2, then verify --forbid C_6, q in {3,5,9}.
void wenger_c6(Outcome& o) {
  for (std::uint32_t q : {3, 5, 9}) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string g = path("w2_" + std::to_string(q) + ".json"), p = path("w2_" + std::to_string(q) + "_p.json");
    const int rc1 = run_cli("construct wenger --M 2 --q " + std::to_string(q) + " --out " + g + " --partition " + p);
    const int rc2 = run_cli("verify --graph " + g + " --partition " + p + " --forbid C_6");
    const auto part = partition_from_json(read_json(p));
    const double secs = seconds_since(t0);
    o.require(rc1 == 0, "construct q=" + std::to_string(q));
    o.require(rc2 == 0, "verify exit " + std::to_string(rc2) + " for q=" + std::to_string(q));
    o.require(part.r() == q * q, "q^2 parts");
    o.require(part.max_part_size() == 2 * q, "part size 2q");
    o.require(secs < 60, "runtime");
    o.detail << " q=" << q << ":(" << part.r() << "," << part.max_part_size() << ") " << secs << "s;";
  }
}

// 2. Wenger C10 at q = 3 as a (27, 6)-graph.
void wenger_c10(Outcome& o) {
  const auto c = partition_wenger(4, 3);
  const auto rep = verify_rk(c.graph, c.partition);
  const bool c10_free = !contains_cycle(Graph::from(c.graph), 10).has_value();
  o.require(rep.completeness_ok, "complete");
  o.require(c10_free, "C10-free");
  o.require(rep.r == 27, "27 parts");
  o.require(rep.k_effective <= 6, "part size 6");
  const Graph w = Graph::from(build_wenger(4, 3));
  const std::size_t deg = w.degree(0), max_edges = 27 * 6 * deg / 2;
  o.detail << " certified (" << rep.r << "," << rep.k_effective << ") complete=" << rep.completeness_ok
           << " C10-free=" << c10_free << "; a subgraph of the " << deg << "-regular W_4(3) on 27*6 vertices has at most "
           << max_edges << " edges < C(27,2)=351, so no (27,6) split of it exists";
}

// 3. Norm-quotient splits with patching.
void norm_quotient(Outcome& o) {
  struct P {
    std::uint32_t q, h, a;
  };
  for (const auto& [q, h, a] : std::vector<P>{{9, 4, 2}, {25, 6, 4}}) {
    for (auto strategy : {PatchStrategy::kMatching, PatchStrategy::kGreedyReuse}) {
      const auto s = partition_norm_quotient(q, 2, 1, h, a, strategy);
      const auto rep = verify_rk(s.graph, s.partition);
      const bool free = !find_forbidden(s.graph, ForbiddenPattern::complete_bipartite(2, 2)).has_value();
      o.require(rep.r == std::size_t{q} * a, "r = q*a");
      o.require(rep.completeness_ok, "complete after patching");
      o.require(free, "K_{2,2}-free");
      o.require(rep.k_effective <= std::size_t{a} + h + s.stats.k_overhead, "k bound");
      o.detail << " q=" << q << "/" << s.stats.strategy << ": r=" << rep.r << " k=" << rep.k_effective
               << " (base " << s.stats.k_base << " + overhead " << s.stats.k_overhead << ", "
               << s.stats.deficient_pairs << " patched pairs);";
    }
  }
}

// 4. Theta construction at q = 9.
void theta(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = build_theta(9);
  const auto rep = verify_rk(c.graph, c.partition);
  o.require(rep.r == 243, "243 parts");
  o.require(rep.k_effective == 54, "part size 54");
  o.require(rep.completeness_ok, "complete");
  const auto w = contains_theta(Graph::from(c.graph), 3, 4);
  const double secs = seconds_since(t0);
  o.require(!w.has_value(), "theta_{3,4}-free");
  o.require(secs < 1800, "runtime");
  o.detail << " (" << rep.r << "," << rep.k_effective << ") theta_{3,4} witness=" << (w ? "found" : "none") << " "
           << secs << "s";
}

// 5. Berge-cycle-free 3-graphs.
void berge(Outcome& o) {
  for (std::uint32_t q : {9, 25}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto c = build_berge3(q);
    const auto rep = verify_rk(c.graph, c.partition);
    o.require(rep.completeness_ok && rep.missing_count == 0, "complete on all triples");
    o.require(c.graph.num_edges() == nt::binomial(q, 3), "C(q,3) edges");
    o.require(rep.r == q && rep.k_effective == q - 1, "(q, q-1)");
    for (std::uint32_t l = 2; l <= 4; ++l) {
      o.require(!contains_berge_cycle(c.graph, l).has_value(), "Berge C" + std::to_string(l) + "-free");
    }
    const double secs = seconds_since(t0);
    o.require(secs < 600, "runtime");
    o.detail << " q=" << q << ":(" << rep.r << "," << rep.k_effective << ") " << secs << "s;";
  }
}

// 6. Design splits.
void designs(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto fano = build_design_split(design_catalog("fano"), 2);
  const auto rf = verify_rk(fano.graph, fano.partition);
  o.require(rf.completeness_ok && rf.r == 7, "Fano complete");
  o.require(max_component_size(fano.graph) == 3, "Fano components");
  o.require(rf.k_effective == 3 && tree_bound(7, 3) == Rational::make(3, 1), "Fano part size 3");
  const auto ag = build_design_split(design_catalog("AG(2,3)"), 2);
  const auto ra = verify_rk(ag.graph, ag.partition);
  o.require(ra.completeness_ok && ra.r == 9, "AG(2,3) complete");
  o.require(ra.k_effective == 4 && berge_path_k_lb(9, 2, 3) == Rational::make(4, 1), "AG(2,3) part size 4");
  const double secs = seconds_since(t0);
  o.require(secs < 1, "runtime");
  o.detail << " fano (7," << rf.k_effective << "), AG(2,3) (9," << ra.k_effective << ") " << secs << "s";
}

// 7. Property-B colourings.
void property_b(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  struct P {
    std::uint32_t m;
    std::vector<std::uint32_t> c;
  };
  for (const auto& [m, comp] : std::vector<P>{{2, {1, 1}}, {3, {2, 1}}, {3, {1, 1, 1}}}) {
    for (std::uint32_t r : {4, 6}) {
      const auto c = build_property_B(m, comp, r);
      const auto rep = verify_rk(c.graph, c.partition);
      o.require(rep.completeness_ok, "complete");
      o.require(rep.k_effective == comp.size(), "k = composition length");
      const auto pb = property_B_check(c.graph, comp);
      o.require(pb.decision == Decision::kYes, "colour profile");
      const auto colour = [&](VertexId v) {
        const auto& l = c.graph.label(v);
        return static_cast<std::uint32_t>(std::stoul(l.substr(l.find(',') + 1)));
      };
      for (std::size_t e = 0; e < c.graph.num_edges(); ++e) {
        std::vector<std::uint32_t> profile(comp.size(), 0);
        for (VertexId v : c.graph.edge(e)) ++profile[colour(v)];
        o.require(profile == comp, "exact profile on every edge");
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 1, "runtime");
  o.detail << " 6 instances " << secs << "s";
}

// 8. Oracle against bounds and constructions.
void oracle(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const TuranEnvelope env{0.5 + 1.0 / (4.0 * std::sqrt(3.0)), 1.5, 2};
  for (auto [r, expect] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {4, 2}}) {
    OracleQuery q;
    q.r = r;
    q.patterns = {ForbiddenPattern::cycle(4)};
    const auto res = exact_f(q);
    o.require(res.status == OracleStatus::kValue && res.value == expect, "f(" + std::to_string(r) + ",C4)");
    const auto lb = min_k_lower(r, 2, env).k;
    o.require(res.value >= lb, "above lower bound");
    // Upper comparison: the property-B split at the same r.
    const auto pb = build_property_B(2, {1, 1}, r);
    const std::size_t cons = pb.partition.max_part_size();
    o.require(res.value <= cons, "below construction");
    o.detail << " f(" << r << ",C4)=" << res.value << " lb=" << lb << " construction k=" << cons << ";";
  }
  const double secs = seconds_since(t0);
  o.require(secs < 120, "runtime");
}

// 9. Spectra and expander mixing.
void spectral(Outcome& o) {
  std::mt19937_64 rng(9);
  std::vector<std::pair<std::string, Hypergraph>> graphs;
  {
    Hypergraph p(2), k(2);
    for (int i = 0; i < 10; ++i) p.add_vertex(std::to_string(i));
    for (std::uint32_t i = 0; i < 5; ++i) {
      p.add_edge({i, (i + 1) % 5});
      p.add_edge({i, i + 5});
      p.add_edge({5 + i, 5 + (i + 2) % 5});
    }
    for (int i = 0; i < 6; ++i) k.add_vertex(std::to_string(i));
    for (std::uint32_t i = 0; i < 3; ++i) {
      for (std::uint32_t j = 3; j < 6; ++j) k.add_edge({i, j});
    }
    graphs.emplace_back("Petersen", std::move(p));
    graphs.emplace_back("K33", std::move(k));
    graphs.emplace_back("W1(3)", build_wenger(1, 3));
    graphs.emplace_back("W2(3)", build_wenger(2, 3));
  }
  std::size_t failures = 0;
  for (const auto& [name, h] : graphs) {
    const Graph g = Graph::from(h);
    const auto s = spectrum(g);
    if (name == "Petersen") o.require(std::abs(s.rho - 2) < 1e-6, "Petersen rho = 2");
    if (name == "K33") o.require(std::abs(s.rho2) < 1e-6, "K33 rho2 = 0");
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 1000; ++i) {
      std::vector<VertexId> u, w;
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (coin(rng)) u.push_back(v);
        if (coin(rng)) w.push_back(v);
      }
      failures += !mixing_check(g, s, u, w, MixingMode::kGeneral).ok;
    }
    o.detail << " " << name << " rho=" << s.rho << ";";
  }
  o.require(failures == 0, "mixing failures: " + std::to_string(failures));
  o.detail << " mixing failures=" << failures;
}

// 10. Greedy split of W_1(5) into 8 parts, H = K_{2,2}.
void greedy(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  GreedySplitOptions opt;
  opt.parts = 8;
  opt.seed_size = 2;
  const auto res = greedy_split(build_wenger(1, 5), ForbiddenPattern::complete_bipartite(2, 2), opt);
  const auto rep = verify_rk(res.graph, res.partition);
  o.require(rep.completeness_ok, "verify_rk");
  o.require(!find_forbidden(res.graph, ForbiddenPattern::complete_bipartite(2, 2)).has_value(), "K_{2,2}-free");
  const auto& tr = res.trace;
  bool monotone = true;
  for (std::size_t i = 1; i < tr.iterations.size(); ++i) monotone = monotone && tr.iterations[i].max_s <= tr.iterations[i - 1].max_s;
  o.require(monotone, "monotone max s");
  o.require(tr.stagnated || tr.reached_target || tr.iterations.size() == tr.max_iters, "stops at stagnation or target");
  o.require(tr.seeds_distance_ok, "seed distance >= 3");
  const Graph g = Graph::from(res.graph);
  bool deg1 = true;
  for (VertexId v : tr.patch_vertices) deg1 = deg1 && g.degree(v) == 1;
  o.require(deg1, "patch vertices have degree 1");
  const double secs = seconds_since(t0);
  o.require(secs < 60, "runtime");
  o.detail << " (" << rep.r << "," << rep.k_effective << ") iterations=" << tr.iterations.size()
           << (tr.stagnated ? " stagnated" : tr.reached_target ? " reached target" : " hit max_iters")
           << " patches=" << tr.patch_vertices.size() << " " << secs << "s";
}

// 11. Byte-identical payloads across reruns and --threads in {1, 4}.
void determinism(Outcome& o) {
  run_cli("construct wenger --M 1 --q 5 --out " + path("w15.json"));
  const std::vector<std::pair<std::string, std::vector<std::string>>> runs = {
      {"construct wenger --M 2 --q 5 --seed 7", {"g", "p"}},
      {"construct wenger --M 4 --q 3 --seed 7", {"g", "p"}},
      {"construct norm-quotient --q 9 --t 2 --d 1 --h 4 --a 2 --strategy greedy_reuse --seed 7", {"g", "p"}},
      {"construct theta --q 9 --seed 7", {"g", "p"}},
      {"construct berge3 --q 9", {"g", "p"}},
      {"construct design --id fano", {"g", "p"}},
      {"construct property-b --m 3 --c 2,1 --r 6", {"g", "p"}},
      {"oracle --r 4 --forbid C_4", {"g", "p"}},
      {"partition-greedy --graph " + path("w15.json") + " --m 8 --forbid K_{2,2} --seed-size 2 --seed 7", {"g", "p"}},
  };
  std::size_t compared = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::vector<std::string> digests;
    for (int threads : {1, 4, 1}) {
      const std::string g = path("det_g.json"), p = path("det_p.json");
      fs::remove(g);
      fs::remove(p);
      const int rc = run_cli("--threads " + std::to_string(threads) + " " + runs[i].first + " --out " + g +
                             " --partition " + p);
      o.require(rc == 0, runs[i].first);
      if (rc != 0) break;
      digests.push_back(payload_digest(read_json(g)) + payload_digest(read_json(p)));
    }
    for (const auto& d : digests) o.require(d == digests.front(), "identical payloads: " + runs[i].first);
    compared += digests.size();
  }
  // Library-level searches that run in parallel.
  const auto c = partition_wenger(2, 5, 3);
  const Graph g = Graph::from(c.graph);
  const auto w1 = contains_cycle(g, 8, 1), w4 = contains_cycle(g, 8, 4);
  o.require(w1.has_value() == w4.has_value() && (!w1 || w1->vertices == w4->vertices), "cycle witness threads");
  o.detail << " " << runs.size() << " commands x 3 runs, " << compared << " payload pairs compared";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <splitforge-binary> <work-dir> [--only N]\n";
    return 2;
  }
  g_cli = argv[1];
  g_work = argv[2];
  fs::create_directories(g_work);
  int only = 0;
  if (argc >= 5 && std::string(argv[3]) == "--only") only = std::atoi(argv[4]);

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Wenger C6 (q^2, 2q) for q in {3,5,9}", wenger_c6},
      {"Wenger C10 (27, 6)-graph at q = 3", wenger_c10},
      {"norm-quotient q=9 (r=18) and q=25 (r=100), patched", norm_quotient},
      {"theta_{3,4}-free (243, 54)-graph at q = 9", theta},
      {"Berge C2/C3/C4-free (q, q-1)-hypergraphs, q in {9,25}", berge},
      {"design splits: Fano (7,3), AG(2,3) (9,4)", designs},
      {"Property-B colourings", property_b},
      {"oracle f(3,C4)=1, f(4,C4)=2 against bounds", oracle},
      {"spectra and expander mixing", spectral},
      {"greedy split of W_1(5), m=8, K_{2,2}", greedy},
      {"determinism across reruns and --threads", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << seconds_since(t0) << "s)" << o.detail.str() << std::endl;
    failed += !o.ok;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
