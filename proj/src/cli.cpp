#include "deds/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "deds/approx.hpp"
#include "deds/error.hpp"
#include "deds/fpt.hpp"
#include "deds/gen.hpp"
#include "deds/graph.hpp"
#include "deds/io.hpp"
#include "deds/kernel.hpp"
#include "deds/oracle.hpp"
#include "deds/tournament.hpp"
#include "deds/twdp.hpp"

namespace deds {

namespace {

using Json = nlohmann::ordered_json;

struct VerificationFailure : std::logic_error {
  using std::logic_error::logic_error;
};

std::pair<int, int> parse_pq(const std::string& text) {
  std::istringstream in(text);
  int p = -1, q = -1;
  char comma = 0;
  if (!(in >> p >> comma >> q) || comma != ',' || p < 0 || q < 0 || !(in >> std::ws).eof())
    throw InputError("--pq expects two non-negative integers, e.g. 1,1");
  return {p, q};
}

Json arcs_json(const Digraph& g, const std::vector<ArcId>& arcs) {
  Json out = Json::array();
  for (ArcId a : arcs) out.push_back({g.arc(a).tail, g.arc(a).head});
  return out;
}

Json timing(double ms, bool enabled) { return enabled ? Json(ms) : Json(nullptr); }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

UndirectedGraph as_undirected(const Digraph& g) {
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const Arc& e : g.arcs()) edges.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});
  return UndirectedGraph(g.num_vertices(), {edges.begin(), edges.end()});
}

// Smallest solution by increasing k, for the FPT engines run without --k.
template <class Solve>
std::optional<Solution> deepen(Solve solve, int upper) {
  for (int k = 0; k <= upper; ++k)
    if (auto sol = solve(k)) return sol;
  return std::nullopt;
}

void require_pq(const Instance& inst, std::initializer_list<std::pair<int, int>> allowed, const std::string& engine) {
  for (auto [p, q] : allowed)
    if (inst.p == p && inst.q == q) return;
  throw InputError("engine " + engine + " does not handle (p,q) = (" + std::to_string(inst.p) + "," +
                   std::to_string(inst.q) + ")");
}

void require_mandatory(const Instance& inst, const std::string& engine) {
  if (inst.has_optional_arcs()) throw InputError("engine " + engine + " does not support optional arcs");
}

struct SolveRequest {
  std::string engine = "auto";
  std::optional<int> k;
  std::string td = "heuristic";
};

// Runs one engine. nullopt means no solution of size <= k exists.
std::optional<Solution> run_engine(const Instance& inst, const SolveRequest& req) {
  const auto& g = inst.g;
  const std::string& engine = req.engine;
  const int all = g.num_arcs();

  if (engine == "oracle") return exact_min_deds(inst, req.k.value_or(all));

  if (engine == "fpt01") {
    require_pq(inst, {{0, 1}, {1, 0}}, engine);
    require_mandatory(inst, engine);
    Digraph h = inst.q == 1 ? g : g.reversed();
    auto solve = [&](int k) { return solve_01(h, k); };
    if (req.k) return solve(*req.k);
    return deepen(solve, approx_01(h).solution.size());
  }
  if (engine == "fpt11") {
    require_pq(inst, {{1, 1}}, engine);
    require_mandatory(inst, engine);
    auto solve = [&](int k) { return solve_11(g, k); };
    if (req.k) return solve(*req.k);
    return deepen(solve, approx_11(g).solution.size());
  }
  if (engine == "approx01") {
    require_pq(inst, {{0, 1}, {1, 0}}, engine);
    require_mandatory(inst, engine);
    return approx_01(inst.q == 1 ? g : g.reversed()).solution;
  }
  if (engine == "approx11") {
    require_pq(inst, {{1, 1}}, engine);
    require_mandatory(inst, engine);
    return approx_11(g).solution;
  }
  if (engine == "twdp") {
    TreeDecomposition td = req.td == "heuristic" ? heuristic_td(g) : read_td_file(req.td);
    validate(td, g);
    auto result = solve_twdp(inst, make_nice(td));
    if (req.k && result.opt > *req.k) return std::nullopt;
    return result.solution;
  }
  if (engine == "tournament") {
    require_mandatory(inst, engine);
    if (!g.is_tournament()) throw InputError("engine tournament needs a tournament");
    auto sol = solve_tournament(Tournament(g), inst.p, inst.q);
    if (req.k && sol.size() > *req.k) return std::nullopt;
    return sol;
  }
  throw InputError("unknown engine " + engine);
}

std::string auto_engine(const Instance& inst) {
  const bool mandatory_only = !inst.has_optional_arcs();
  if (mandatory_only && inst.g.num_vertices() > 0 && inst.g.is_tournament()) return "tournament";
  if (mandatory_only && inst.p + inst.q == 1) return "fpt01";
  if (mandatory_only && inst.p == 1 && inst.q == 1) return "fpt11";
  return "oracle";
}

// Any (p,q) with p,q >= 1 is implied by (1,1); p = 0 or q = 0 by (0,1) or (1,0).
Solution approx_fallback(const Instance& inst) {
  if (inst.p >= 1 && inst.q >= 1) return approx_11(inst.g).solution;
  if (inst.q >= 1) return approx_01(inst.g).solution;
  if (inst.p >= 1) return approx_01(inst.g.reversed()).solution;
  std::vector<ArcId> all;
  for (ArcId a = 0; a < inst.g.num_arcs(); ++a)
    if (!inst.is_optional(a)) all.push_back(a);
  return Solution{all, "all-arcs", 0.0};
}

struct SolveOutcome {
  std::optional<Solution> solution;
  std::string engine;
  double elapsed_ms = 0.0;
};

SolveOutcome solve_instance(const Instance& inst, SolveRequest req) {
  auto t0 = std::chrono::steady_clock::now();
  SolveOutcome out;
  if (req.engine == "auto") {
    req.engine = auto_engine(inst);
    if (req.engine == "oracle") {
      try {
        out.solution = run_engine(inst, req);
      } catch (const ResourceError&) {
        if (req.k || inst.has_optional_arcs()) throw;
        out.solution = approx_fallback(inst);
      }
    } else {
      out.solution = run_engine(inst, req);
    }
  } else {
    out.solution = run_engine(inst, req);
  }
  out.elapsed_ms = ms_since(t0);
  out.engine = out.solution ? out.solution->engine : req.engine;
  if (out.solution && !verify(inst, *out.solution))
    throw VerificationFailure("engine " + out.engine + " returned an arc set that does not dominate the graph");
  return out;
}

Json solve_json(const Instance& inst, const SolveOutcome& o, bool timed) {
  Json j;
  j["engine"] = o.engine;
  j["pq"] = {inst.p, inst.q};
  if (o.solution) {
    j["size"] = o.solution->size();
    j["arcs"] = arcs_json(inst.g, o.solution->arcs);
  } else {
    j["size"] = nullptr;
    j["arcs"] = nullptr;
  }
  j["feasible"] = o.solution.has_value();
  j["elapsed_ms"] = timing(o.elapsed_ms, timed);
  return j;
}

Instance load_instance(const std::string& path, int p, int q) {
  auto file = read_graph_file(path);
  return Instance(std::move(file.g), p, q, std::nullopt, std::move(file.optional));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void write_generated(const std::string& out_path, const Digraph& g, std::span<const char> optional, const Json& lineage) {
  std::ostringstream graph;
  write_graph(graph, g, optional);
  write_text(out_path, graph.str());
  write_text(out_path + ".json", lineage.dump(2) + "\n");
}

Json bench_solve(const Instance& inst, const std::string& engine, bool timed) {
  SolveRequest req;
  req.engine = engine;
  auto o = solve_instance(inst, req);
  return {{"engine", o.engine}, {"pq", {inst.p, inst.q}}, {"size", o.solution ? Json(o.solution->size()) : Json(nullptr)},
          {"elapsed_ms", timing(o.elapsed_ms, timed)}};
}

Json run_bench(const std::string& suite, bool timed) {
  Json instances = Json::array();
  constexpr std::uint64_t base_seed = 20240601;
  if (suite == "corpus") {
    for (std::uint64_t i = 0; i < 30; ++i) {
      auto g = gen_digraph(3 + static_cast<int>(i % 5), 0.3, base_seed + i);
      Json results = Json::array();
      for (auto [p, q, engines] : {std::tuple{0, 1, std::vector<std::string>{"oracle", "fpt01", "approx01", "twdp"}},
                                   std::tuple{1, 1, std::vector<std::string>{"oracle", "fpt11", "approx11", "twdp"}}})
        for (const auto& e : engines) results.push_back(bench_solve(Instance(g, p, q), e, timed));
      instances.push_back({{"seed", base_seed + i}, {"n", g.num_vertices()}, {"m", g.num_arcs()}, {"results", results}});
    }
  } else if (suite == "tournament") {
    for (int n = 3; n <= 7; ++n)
      for (std::uint64_t i = 0; i < 4; ++i) {
        const std::uint64_t seed = base_seed + 100 * static_cast<std::uint64_t>(n) + i;
        Digraph g = gen_tournament(n, seed).graph();
        Json results = Json::array();
        for (auto [p, q] : {std::pair{0, 1}, {1, 1}, {0, 2}, {2, 2}, {0, 3}, {3, 3}, {1, 3}})
          for (const char* e : {"tournament", "oracle"}) results.push_back(bench_solve(Instance(g, p, q), e, timed));
        instances.push_back({{"seed", seed}, {"n", n}, {"results", results}});
      }
  } else if (suite == "large-tournament") {
    for (int n : {64, 128, 256, 512}) {
      const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(n);
      auto t = gen_tournament(n, seed);
      auto t0 = std::chrono::steady_clock::now();
      auto ds = greedy_dominating_set(t);
      auto b22 = bounded_22_solution(t);
      auto t01 = solve_t01(t);
      auto t33 = solve_t_pq3(t, 3, 3);
      instances.push_back({{"seed", seed},
                           {"n", n},
                           {"greedy_ds", ds.size()},
                           {"bounded22", b22.size()},
                           {"t01", t01.size()},
                           {"t33", t33.size()},
                           {"elapsed_ms", timing(ms_since(t0), timed)}});
    }
  } else if (suite == "kernel") {
    for (std::uint64_t i = 0; i < 20; ++i) {
      auto g = gen_digraph(4 + static_cast<int>(i % 5), 0.25, base_seed + 1000 + i);
      Json results = Json::array();
      for (int k = 1; k <= 3; ++k)
        for (auto* kernel : {&kernelize_01, &kernelize_11}) {
          auto kr = (*kernel)(g, k);
          results.push_back({{"pq", {kr.p, kr.q}},
                             {"k", k},
                             {"verdict", to_string(kr.verdict)},
                             {"vertices_out", kr.certificate.vertices_out},
                             {"arcs_out", kr.certificate.arcs_out}});
        }
      instances.push_back({{"seed", base_seed + 1000 + i}, {"n", g.num_vertices()}, {"m", g.num_arcs()}, {"results", results}});
    }
  } else {
    throw InputError("unknown suite " + suite + " (corpus, tournament, large-tournament, kernel)");
  }
  return {{"suite", suite}, {"seed", base_seed}, {"instances", instances}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed (p,q)-edge dominating set toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms as null so output is reproducible");

  std::string pq_text, graph_path, sol_path;
  SolveRequest req;
  int k_value = 0;

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--pq", pq_text, "p,q")->required();
  solve->add_option("--engine", req.engine, "auto|oracle|fpt01|fpt11|approx01|approx11|twdp|tournament")
      ->check(CLI::IsMember({"auto", "oracle", "fpt01", "fpt11", "approx01", "approx11", "twdp", "tournament"}));
  auto* k_opt = solve->add_option("--k", k_value, "Budget; report infeasible when no solution this small exists")
                    ->check(CLI::NonNegativeNumber);
  solve->add_option("--td", req.td, "Tree decomposition file (1-based) or 'heuristic'");
  solve->add_option("file", graph_path, "Graph file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file");
  verify_cmd->add_option("--pq", pq_text, "p,q")->required();
  verify_cmd->add_option("file", graph_path, "Graph file")->required();
  verify_cmd->add_option("solution", sol_path, "Solution file")->required();

  std::string kernel_out;
  auto* kernel_cmd = app.add_subcommand("kernelize", "Reduce a (0,1) or (1,1) instance");
  kernel_cmd->add_option("--pq", pq_text, "0,1 or 1,1")->required();
  kernel_cmd->add_option("--k", k_value, "Budget")->required()->check(CLI::NonNegativeNumber);
  kernel_cmd->add_option("--out", kernel_out, "Write the reduced graph here");
  kernel_cmd->add_option("file", graph_path, "Graph file")->required();

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  std::string gen_out;
  int gen_n = 0, gen_k = 0, gen_L = 0;
  double gen_prob = 0.5;
  std::uint64_t gen_seed = 0;
  bool gen_full = false;
  std::vector<int> planted;
  auto* gen_t = gen->add_subcommand("tournament", "Uniform random tournament");
  gen_t->add_option("--n", gen_n)->required()->check(CLI::PositiveNumber);
  gen_t->add_option("--seed", gen_seed)->required();
  gen_t->add_option("--out", gen_out)->required();
  auto* gen_d = gen->add_subcommand("digraph", "Random digraph");
  gen_d->add_option("--n", gen_n)->required()->check(CLI::NonNegativeNumber);
  gen_d->add_option("--prob", gen_prob)->required()->check(CLI::Range(0.0, 1.0));
  gen_d->add_option("--seed", gen_seed)->required();
  gen_d->add_option("--out", gen_out)->required();
  auto* gen_mcc = gen->add_subcommand("mcc-reduce", "Multicolored clique to (3n,3n) instance");
  gen_mcc->add_option("--k", gen_k, "Number of classes")->required()->check(CLI::PositiveNumber);
  gen_mcc->add_option("--n", gen_n, "Class size (even)")->required()->check(CLI::PositiveNumber);
  gen_mcc->add_flag("--full", gen_full, "Replace optional arcs by the guard construction");
  gen_mcc->add_option("--out", gen_out)->required();
  gen_mcc->add_option("file", graph_path, "Graph whose arcs are read as undirected edges")->required();
  auto* gen_aim = gen->add_subcommand("aim-reduce", "Bipartite almost induced matching to (1,1) tournament");
  gen_aim->add_option("--L", gen_L, "Target matching size (even)");
  gen_aim->add_option("--seed", gen_seed)->required();
  gen_aim->add_option("--planted", planted, "n,pairs,singles: plant a matching instead of reading a graph")
      ->delimiter(',')
      ->expected(3);
  gen_aim->add_option("--out", gen_out)->required();
  gen_aim->add_option("file", graph_path, "Bipartite graph with sides [0,n) and [n,2n)");

  std::string suite;
  auto* bench = app.add_subcommand("bench", "Run a fixed benchmark suite");
  bench->add_option("--suite", suite, "corpus|tournament|large-tournament|kernel")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSolved;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }
  const bool timed = !no_timing;

  try {
    if (*solve) {
      auto [p, q] = parse_pq(pq_text);
      if (*k_opt) req.k = k_value;
      auto inst = load_instance(graph_path, p, q);
      auto o = solve_instance(inst, req);
      out << solve_json(inst, o, timed).dump() << "\n";
      return o.solution ? kExitSolved : kExitInfeasible;
    }
    if (*verify_cmd) {
      auto [p, q] = parse_pq(pq_text);
      auto inst = load_instance(graph_path, p, q);
      auto t0 = std::chrono::steady_clock::now();
      auto arcs = read_solution_file(sol_path, inst.g);
      normalize_arcs(arcs);
      bool ok = verify(inst, arcs);
      Json j{{"engine", "verify"}, {"pq", {p, q}}, {"size", arcs.size()}, {"arcs", arcs_json(inst.g, arcs)},
             {"feasible", ok}, {"elapsed_ms", timing(ms_since(t0), timed)}};
      out << j.dump() << "\n";
      return ok ? kExitSolved : kExitInfeasible;
    }
    if (*kernel_cmd) {
      auto [p, q] = parse_pq(pq_text);
      auto file = read_graph_file(graph_path);
      if (!file.optional.empty()) throw InputError("kernels do not support optional arcs");
      auto t0 = std::chrono::steady_clock::now();
      KernelResult kr;
      if (p == 0 && q == 1)
        kr = kernelize_01(file.g, k_value);
      else if (p == 1 && q == 1)
        kr = kernelize_11(file.g, k_value);
      else
        throw InputError("kernelize supports --pq 0,1 and 1,1");
      const double ms = ms_since(t0);
      if (!kernel_out.empty()) {
        std::ostringstream graph;
        write_graph(graph, kr.reduced);
        write_text(kernel_out, graph.str());
      }
      const auto& c = kr.certificate;
      Json j{{"engine", p == 0 ? "kernel01" : "kernel11"},
             {"pq", {p, q}},
             {"k", k_value},
             {"k_out", kr.k_out},
             {"verdict", to_string(kr.verdict)},
             {"vertices_in", c.vertices_in},
             {"arcs_in", c.arcs_in},
             {"vertices_out", c.vertices_out},
             {"arcs_out", c.arcs_out},
             {"matching_size", c.matching_size},
             {"vertex_bound", c.vertex_bound},
             {"arc_bound", c.arc_bound},
             {"within_bounds", c.within_bounds},
             {"reason", c.reason},
             {"elapsed_ms", timing(ms, timed)}};
      out << j.dump() << "\n";
      return kr.verdict == KernelVerdict::rejected_no ? kExitInfeasible : kExitSolved;
    }
    if (*gen) {
      Json lineage;
      if (*gen_t) {
        auto t = gen_tournament(gen_n, gen_seed);
        lineage = {{"generator", "tournament"}, {"n", gen_n}, {"seed", gen_seed}};
        write_generated(gen_out, t.graph(), {}, lineage);
      } else if (*gen_d) {
        auto g = gen_digraph(gen_n, gen_prob, gen_seed);
        lineage = {{"generator", "digraph"}, {"n", gen_n}, {"prob", gen_prob}, {"seed", gen_seed}};
        write_generated(gen_out, g, {}, lineage);
      } else if (*gen_mcc) {
        auto g = read_graph_file(graph_path).g;
        auto r = mcc_to_optional(McInstance{as_undirected(g), gen_k, gen_n});
        if (gen_full) r = optional_to_full(r, r.s_set);
        lineage = r.lineage;
        write_generated(gen_out, r.instance.g, r.instance.optional, lineage);
      } else {
        ReductionOutput r;
        if (!planted.empty()) {
          auto pa = plant_aim(planted[0], planted[1], planted[2], gen_seed);
          r = aim_to_tournament(pa.graph, pa.L, gen_seed);
          r.lineage["planted"] = {{"matched_a", pa.matched_a}, {"matched_b", pa.matched_b},
                                  {"single_a", pa.single_a},   {"single_b", pa.single_b}};
        } else {
          if (graph_path.empty()) throw InputError("aim-reduce needs a graph file or --planted");
          r = aim_to_tournament(as_undirected(read_graph_file(graph_path).g), gen_L, gen_seed);
        }
        lineage = r.lineage;
        write_generated(gen_out, r.instance.g, {}, lineage);
      }
      out << lineage.dump() << "\n";
      return kExitSolved;
    }
    if (*bench) {
      out << run_bench(suite, timed).dump() << "\n";
      return kExitSolved;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const VerificationFailure& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInputError;
}

}  // namespace deds
