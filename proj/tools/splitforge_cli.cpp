// splitforge: construct, verify and analyse (r,k)-graphs and hypergraphs.
//
// Exit codes: 0 ok, 1 internal error or failed check, 2 bad parameters,
// 3 partition incomplete, 4 forbidden subgraph found, 5 budget exhausted.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "splitforge/bounds.hpp"
#include "splitforge/constructions.hpp"
#include "splitforge/errors.hpp"
#include "splitforge/greedy_split.hpp"
#include "splitforge/io.hpp"
#include "splitforge/oracle.hpp"
#include "splitforge/parallel.hpp"
#include "splitforge/spectral.hpp"
#include "splitforge/verify.hpp"

using namespace splitforge;

namespace {

enum Exit { kOk = 0, kFail = 1, kParam = 2, kIncomplete = 3, kForbidden = 4, kBudget = 5 };

std::vector<std::uint32_t> parse_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw ParameterError("not an integer list: " + s);
    }
  }
  return out;
}

std::vector<ForbiddenPattern> parse_patterns(const std::vector<std::string>& specs) {
  std::vector<ForbiddenPattern> out;
  for (const auto& s : specs) out.push_back(ForbiddenPattern::parse(s));
  return out;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

// construct ----------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::uint32_t M = 2, q = 0, t = 2, d = 1, h = 0, a = 0, m = 0, r = 0;
  std::string id, c, strategy = "matching";
  std::optional<std::uint64_t> seed;
  std::string out, partition;
};

int run_construct(const ConstructArgs& args) {
  Json params = {{"family", args.family}};
  Construction c;
  Json extra = Json::object();
  bool has_partition = true;
  if (args.family == "wenger") {
    params.update({{"M", args.M}, {"q", args.q}});
    if (args.M == 2 || args.M == 4) {
      c = partition_wenger(args.M, args.q, args.seed);
    } else {
      c.graph = build_wenger(args.M, args.q);
      has_partition = false;
    }
  } else if (args.family == "theta") {
    params["q"] = args.q;
    c = build_theta(args.q, args.seed);
  } else if (args.family == "berge3") {
    params["q"] = args.q;
    c = build_berge3(args.q);
  } else if (args.family == "design") {
    params["id"] = args.id;
    const auto design = design_catalog(args.id);
    const std::uint32_t m = args.m ? args.m : design.strength;
    params["m"] = m;
    c = build_design_split(design, m);
  } else if (args.family == "property-b") {
    const auto comp = parse_list(args.c);
    params.update({{"m", args.m}, {"c", comp}, {"r", args.r}});
    c = build_property_B(args.m, comp, args.r);
  } else if (args.family == "norm-quotient") {
    params.update({{"q", args.q}, {"t", args.t}, {"d", args.d}, {"h", args.h}, {"a", args.a},
                   {"strategy", args.strategy}});
    PatchStrategy st;
    if (args.strategy == "matching") st = PatchStrategy::kMatching;
    else if (args.strategy == "greedy_reuse") st = PatchStrategy::kGreedyReuse;
    else throw ParameterError("unknown patch strategy " + args.strategy);
    auto nq = partition_norm_quotient(args.q, args.t, args.d, args.h, args.a, st, args.seed);
    const auto& s = nq.stats;
    extra["patch"] = {{"strategy", s.strategy},         {"deficient_pairs", s.deficient_pairs},
                      {"patch_vertices", s.patch_vertices}, {"patch_edges", s.patch_edges},
                      {"reused_edges", s.reused_edges},     {"fresh_edges", s.fresh_edges},
                      {"k_base", s.k_base},                 {"k_overhead", s.k_overhead}};
    c = std::move(nq);
  } else {
    throw ParameterError("unknown family " + args.family);
  }
  if (args.seed) params["seed"] = *args.seed;
  Provenance prov("construct", params, args.seed);
  if (!args.out.empty()) write_json(args.out, prov.stamp(to_json(c.graph)));
  if (has_partition && !args.partition.empty()) write_json(args.partition, prov.stamp(to_json(c.partition)));
  Json summary = {{"family", args.family},
                  {"vertices", c.graph.num_vertices()},
                  {"edges", c.graph.num_edges()},
                  {"m", c.graph.uniformity()},
                  {"notes", c.notes}};
  if (has_partition) {
    summary["r"] = c.partition.r();
    summary["k"] = c.partition.max_part_size();
    summary["internal_edges_removed"] = c.internal_edges_removed;
  }
  summary.update(extra);
  print(summary);
  return kOk;
}

// verify ---------------------------------------------------------------------

int run_verify(const std::string& graph_path, const std::string& part_path,
               const std::vector<std::string>& forbid, const std::string& report_path) {
  const Hypergraph h = hypergraph_from_json(read_json(graph_path));
  const SplitPartition p = partition_from_json(read_json(part_path));
  const auto patterns = parse_patterns(forbid);
  auto rep = verify_rk(h, p);
  Json out = {{"r", rep.r},
              {"k_effective", rep.k_effective},
              {"completeness_ok", rep.completeness_ok},
              {"missing_count", rep.missing_count},
              {"missing_tuples", rep.missing_tuples},
              {"independence_ok", rep.independence_ok},
              {"dependent_parts", rep.dependent_parts}};
  Json checked = Json::array();
  std::optional<Witness> witness;
  for (const auto& pat : patterns) {
    witness = find_forbidden(h, pat);
    checked.push_back(pat.name());
    if (witness) break;
  }
  out["forbidden_checked"] = checked;
  out["forbidden_witness"] = witness ? to_json(*witness) : Json(nullptr);
  if (!report_path.empty()) {
    Provenance prov("verify", {{"graph", graph_path}, {"partition", part_path}, {"forbid", forbid}},
                    std::nullopt);
    prov.add_input(graph_path);
    prov.add_input(part_path);
    write_json(report_path, prov.stamp(out));
  }
  print(out);
  if (witness) return kForbidden;
  if (!rep.completeness_ok) return kIncomplete;
  return kOk;
}

// spectrum / mixing -----------------------------------------------------------

Json spectrum_json(const SpectrumSummary& s, bool all) {
  Json j = {{"n", s.n},       {"d", s.d},       {"bipartite", s.bipartite}, {"dense", s.dense},
            {"rho1", s.rho1}, {"rho2", s.rho2}, {"rho_n", s.rho_n},         {"rho", s.rho}};
  if (all) j["eigenvalues"] = s.eigenvalues;
  return j;
}

int run_spectrum(const std::string& graph_path, bool all) {
  const Graph g = Graph::from(hypergraph_from_json(read_json(graph_path)));
  print(spectrum_json(spectrum(g), all));
  return kOk;
}

int run_mixing(const std::string& graph_path, const std::string& u, const std::string& w,
               const std::string& mode) {
  const Graph g = Graph::from(hypergraph_from_json(read_json(graph_path)));
  MixingMode mm;
  if (mode == "general") mm = MixingMode::kGeneral;
  else if (mode == "bipartite") mm = MixingMode::kBipartite;
  else throw ParameterError("mode must be general or bipartite");
  const auto s = spectrum(g);
  const auto uu = parse_list(u), ww = parse_list(w);
  const auto r = mixing_check(g, s, uu, ww, mm);
  print({{"e_uw", r.e_uw}, {"lhs", r.lhs}, {"bound", r.bound}, {"ok", r.ok}});
  return r.ok ? kOk : kFail;
}

// bound -------------------------------------------------------------------------

struct BoundArgs {
  bool lower = false, berge_path = false, tree = false, admissible = false, k2d = false, table = false;
  std::uint64_t r = 0, t = 0, d = 0;
  std::uint32_t m = 2;
  double C = 1.0, e = 1.5;
  std::size_t count = 8;
};

int run_bound(const BoundArgs& a) {
  const int chosen = a.lower + a.berge_path + a.tree + a.admissible + a.k2d + a.table;
  if (chosen != 1) {
    throw ParameterError("choose one of --lower, --berge-path, --tree, --admissible, --k2d, --small-d-table");
  }
  if (a.lower) {
    const auto b = min_k_lower(a.r, a.m, {a.C, a.e, a.m});
    print({{"quantity", "min_k_lower"},
           {"value", b.k},
           {"relaxed_value", b.k_relaxed},
           {"formula_ref", "least k with C(r,m) <= C (rk)^e; relaxed uses (r-m)^m/m!"}});
  } else if (a.berge_path) {
    const auto v = berge_path_k_lb(a.r, a.m, a.t);
    print({{"quantity", "berge_path_k_lb"},
           {"value", v.str()},
           {"approx", v.value()},
           {"formula_ref", "C(r-1,m-1) / C(t-1,m-1)"}});
  } else if (a.tree) {
    const auto v = tree_bound(a.r, a.t);
    print({{"quantity", "tree_bound"}, {"value", v.str()}, {"approx", v.value()}, {"formula_ref", "(r-1)/(t-1)"}});
  } else if (a.admissible) {
    const auto p = admissible_pair_for(a.d, a.count);
    Json primes = Json::array();
    for (const auto& ap : p.primes) primes.push_back({{"p", ap.p}, {"pattern", ap.pattern}, {"R", ap.R}});
    print({{"quantity", "admissible_pair"},
           {"value", {{"d", p.d}, {"D1", p.D1}, {"D2", p.D2}, {"x0", p.x0}, {"modulus", p.modulus},
                      {"coefficient", p.coefficient}, {"inequality_ok", p.inequality_ok}, {"primes", primes}}},
           {"formula_ref", "D(D+1) < d <= (D+1)(D+2); x0 = -1 mod D, 1 mod D+1; R_p = p^2 (p-1)/(D+1)"}});
  } else if (a.k2d) {
    print({{"quantity", "k2d_upper_coeff"},
           {"value", k2d_upper_coeff(a.d)},
           {"formula_ref", "2 d^(-1/3) (1 - 1.5 d^(-1/2))^(-5/3)"}});
  } else {
    Json t = Json::object();
    for (const auto& [d, c] : small_d_table()) t["c" + std::to_string(d)] = c;
    print({{"quantity", "small_d_table"}, {"value", t}, {"formula_ref", "reference constants c_d"}});
  }
  return kOk;
}

// oracle ------------------------------------------------------------------------

int run_oracle(std::uint32_t r, std::uint32_t m, std::uint32_t k_max, const std::vector<std::string>& forbid,
               std::uint64_t budget, const std::string& out, const std::string& part) {
  OracleQuery q{r, m, k_max, parse_patterns(forbid), budget};
  const auto res = exact_f(q);
  Json attempts = Json::array();
  for (const auto& at : res.attempts) {
    const char* d = at.decision == Decision::kYes ? "feasible" : at.decision == Decision::kNo ? "infeasible" : "unknown";
    attempts.push_back({{"k", at.k}, {"result", d}, {"nodes", at.nodes}});
  }
  const char* status = res.status == OracleStatus::kValue      ? "exact"
                       : res.status == OracleStatus::kAboveMax ? "above_k_max"
                                                               : "unknown_within_budget";
  Json j = {{"status", status}, {"attempts", attempts}};
  if (res.status == OracleStatus::kValue) j["value"] = res.value;
  if (res.graph) {
    Provenance prov("oracle", {{"r", r}, {"m", m}, {"k_max", k_max}, {"forbid", forbid}}, std::nullopt);
    if (!out.empty()) write_json(out, prov.stamp(to_json(*res.graph)));
    if (!part.empty()) write_json(part, prov.stamp(to_json(*res.partition)));
  }
  print(j);
  return res.status == OracleStatus::kUnknown ? kBudget : kOk;
}

// partition-greedy ------------------------------------------------------------

struct GreedyArgs {
  std::string graph, forbid, out, partition, trace;
  std::uint32_t m = 0;
  std::optional<std::uint32_t> seed_size, target_s, max_iters;
  std::optional<std::uint64_t> seed;
};

int run_greedy(const GreedyArgs& a) {
  const Hypergraph g = hypergraph_from_json(read_json(a.graph));
  GreedySplitOptions opt;
  opt.parts = a.m;
  opt.seed_size = a.seed_size;
  opt.target_s = a.target_s;
  opt.max_iters = a.max_iters;
  opt.seed = a.seed;
  const auto res = greedy_split(g, ForbiddenPattern::parse(a.forbid), opt);
  const auto& tr = res.trace;
  Json params = {{"graph", a.graph}, {"m", a.m}, {"forbid", a.forbid}, {"seed_size", tr.seed_size},
                 {"target_s", tr.target_s}, {"max_iters", tr.max_iters}};
  Provenance prov("partition-greedy", params, a.seed);
  prov.add_input(a.graph);
  if (!a.out.empty()) write_json(a.out, prov.stamp(to_json(res.graph)));
  if (!a.partition.empty()) write_json(a.partition, prov.stamp(to_json(res.partition)));
  if (!a.trace.empty()) {
    std::ofstream os(a.trace);
    if (!os) throw ParameterError("cannot write " + a.trace);
    for (const auto& it : tr.iterations) {
      Json added = Json::array();
      for (const auto& [part, v] : it.added) added.push_back({{"part", part}, {"vertex", v}});
      os << Json{{"iter", it.iter}, {"max_s", it.max_s}, {"s", it.s_values}, {"added", added}}.dump() << '\n';
    }
  }
  print({{"vertices", res.graph.num_vertices()},
         {"edges", res.graph.num_edges()},
         {"r", res.partition.r()},
         {"k", res.partition.max_part_size()},
         {"iterations", tr.iterations.size()},
         {"stagnated", tr.stagnated},
         {"reached_target", tr.reached_target},
         {"seeds_distance_ok", tr.seeds_distance_ok},
         {"max_s_after_step3", tr.max_s_after_step3},
         {"patch_vertices", tr.patch_vertices.size()},
         {"final_part_sizes", tr.final_part_sizes},
         {"advisories", tr.advisories}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitforge: (r,k)-graph constructions and certificates"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (default: SPLITFORGE_THREADS or 1)");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a construction and its partition");
  construct->set_help_flag("--help", "print this help message and exit");
  construct->add_option("family", ca.family, "wenger | theta | berge3 | design | property-b | norm-quotient")
      ->required();
  construct->add_option("--M", ca.M, "Wenger equations");
  construct->add_option("--q", ca.q, "field order");
  construct->add_option("--t", ca.t, "norm-quotient t");
  construct->add_option("--d", ca.d, "norm-quotient subgroup order");
  construct->add_option("--h", ca.h, "norm-quotient |H|");
  construct->add_option("--a", ca.a, "norm-quotient |A|");
  construct->add_option("--strategy", ca.strategy, "matching | greedy_reuse");
  construct->add_option("--id", ca.id, "design id");
  construct->add_option("--m", ca.m, "uniformity");
  construct->add_option("--c", ca.c, "colour composition, e.g. 2,1");
  construct->add_option("--r", ca.r, "parts");
  construct->add_option("--seed", ca.seed, "pairing seed");
  construct->add_option("--out", ca.out, "graph JSON");
  construct->add_option("--partition", ca.partition, "partition JSON");

  std::string graph_path, part_path, report_path;
  std::vector<std::string> forbid;
  auto* verify = app.add_subcommand("verify", "certify completeness and H-freeness");
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--partition", part_path)->required();
  verify->add_option("--forbid", forbid, "pattern, repeatable");
  verify->add_option("--report", report_path, "write the report as JSON");

  bool all_eigs = false;
  auto* spec = app.add_subcommand("spectrum", "adjacency spectrum of a regular graph");
  spec->add_option("--graph", graph_path)->required();
  spec->add_flag("--all", all_eigs, "list every computed eigenvalue");

  std::string u_list, w_list, mode = "general";
  auto* mixing = app.add_subcommand("mixing", "expander mixing check for vertex sets U, W");
  mixing->add_option("--graph", graph_path)->required();
  mixing->add_option("--U", u_list, "comma-separated vertex ids")->required();
  mixing->add_option("--W", w_list, "comma-separated vertex ids")->required();
  mixing->add_option("--mode", mode, "general | bipartite");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "bound calculators");
  bound->add_flag("--lower", ba.lower, "least k allowed by a Turan envelope");
  bound->add_flag("--berge-path", ba.berge_path, "Berge path lower bound");
  bound->add_flag("--tree", ba.tree, "tree bound (r-1)/(t-1)");
  bound->add_flag("--admissible", ba.admissible, "admissible pair and primes for d");
  bound->add_flag("--k2d", ba.k2d, "K_{2,d+1} upper coefficient");
  bound->add_flag("--small-d-table", ba.table, "reference constants");
  bound->add_option("--r", ba.r);
  bound->add_option("--m", ba.m);
  bound->add_option("--t", ba.t);
  bound->add_option("--d", ba.d);
  bound->add_option("--C", ba.C);
  bound->add_option("--e", ba.e);
  bound->add_option("--count", ba.count, "primes to list");

  std::uint32_t or_r = 0, or_m = 2, or_kmax = kOracleMaxK;
  std::uint64_t or_budget = OracleQuery{}.budget;
  std::string or_out, or_part;
  auto* oracle = app.add_subcommand("oracle", "exact f_m(r,H) by exhaustive search");
  oracle->add_option("--r", or_r)->required();
  oracle->add_option("--m", or_m);
  oracle->add_option("--k-max", or_kmax);
  oracle->add_option("--forbid", forbid)->required();
  oracle->add_option("--budget", or_budget, "search nodes per k");
  oracle->add_option("--out", or_out, "certificate graph JSON");
  oracle->add_option("--partition", or_part, "certificate partition JSON");

  GreedyArgs ga;
  auto* greedy = app.add_subcommand("partition-greedy", "greedy partition of a regular H-free graph");
  greedy->add_option("--graph", ga.graph)->required();
  greedy->add_option("--m", ga.m, "parts")->required();
  greedy->add_option("--forbid", ga.forbid)->required();
  greedy->add_option("--seed", ga.seed, "tie-break seed");
  greedy->add_option("--seed-size", ga.seed_size);
  greedy->add_option("--target-s", ga.target_s);
  greedy->add_option("--max-iters", ga.max_iters);
  greedy->add_option("--out", ga.out, "output graph JSON");
  greedy->add_option("--partition", ga.partition, "output partition JSON");
  greedy->add_option("--trace", ga.trace, "trace JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParam;
  }

  try {
    if (threads != 0) set_default_threads(threads);
    if (*construct) return run_construct(ca);
    if (*verify) return run_verify(graph_path, part_path, forbid, report_path);
    if (*spec) return run_spectrum(graph_path, all_eigs);
    if (*mixing) return run_mixing(graph_path, u_list, w_list, mode);
    if (*bound) return run_bound(ba);
    if (*oracle) return run_oracle(or_r, or_m, or_kmax, forbid, or_budget, or_out, or_part);
    if (*greedy) return run_greedy(ga);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParam;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParam;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFail;
  }
  return kFail;
}
