// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "deds/approx.hpp"
#include "deds/cli.hpp"
#include "deds/fpt.hpp"
#include "deds/gen.hpp"
#include "deds/io.hpp"
#include "deds/kernel.hpp"
#include "deds/oracle.hpp"
#include "deds/tournament.hpp"
#include "deds/twdp.hpp"
#include "oracles.hpp"

using namespace deds;

namespace {

struct Check {
  int failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (++failures <= 5) notes.push_back(what);
  }
};

bool report(int id, const std::string& title, const Check& c, const std::string& detail, double seconds) {
  const bool ok = c.failures == 0;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << detail;
  std::cout << ", " << std::fixed;
  std::cout.precision(1);
  std::cout << seconds << "s)\n";
  for (const auto& n : c.notes) std::cout << "    " << n << "\n";
  if (c.failures > 5) std::cout << "    ... " << c.failures - 5 << " more\n";
  return ok;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string str(const Digraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

// The shared oracle corpus: 300 seeded digraphs with n <= 7 and m <= 14.
std::vector<Digraph> corpus() {
  std::mt19937_64 rng(7001);
  std::vector<Digraph> graphs;
  for (int i = 0; i < 300; ++i) graphs.push_back(ref::random_digraph(rng, 1 + static_cast<int>(rng() % 7), 14));
  return graphs;
}

bool criterion1(const std::vector<Digraph>& graphs) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  int runs = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    for (int p : {0, 1}) {
      Instance inst(g, p, 1);
      const int opt = ref::min_size(inst);
      auto solve = [&](int k) { return p == 0 ? solve_01(g, k) : solve_11(g, k); };
      auto at = solve(opt);
      ++runs;
      c.expect(at && at->size() == opt && ref::feasible(inst, at->arcs),
               "graph " + std::to_string(i) + " (" + std::to_string(p) + ",1): wrong answer at k = OPT = " +
                   std::to_string(opt));
      if (opt > 0) {
        ++runs;
        c.expect(!solve(opt - 1), "graph " + std::to_string(i) + " (" + std::to_string(p) + ",1): solution below OPT");
      }
    }
  }
  const double s = since(t0);
  c.expect(s < 300, "runtime above five minutes");
  return report(1, "fpt01 and fpt11 agree with the oracle at k = OPT and OPT-1", c,
                std::to_string(graphs.size()) + " graphs, " + std::to_string(runs) + " runs", s);
}

std::vector<std::pair<Digraph, TreeDecomposition>> hand_built() {
  std::vector<std::pair<Digraph, TreeDecomposition>> out;
  auto single_bag = [](const Digraph& g) {
    TreeDecomposition td;
    td.n = g.num_vertices();
    td.bags.emplace_back();
    for (Vertex v = 0; v < g.num_vertices(); ++v) td.bags[0].push_back(v);
    return td;
  };
  out.push_back({ref::transitive(5), single_bag(ref::transitive(5))});
  out.push_back({ref::cycle(6), {6, {{0, 1, 5}, {1, 2, 5}, {2, 4, 5}, {2, 3, 4}}, {{0, 1}, {1, 2}, {2, 3}}}});
  out.push_back({ref::out_star(4), {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {{0, 1}, {0, 2}, {0, 3}}}});
  // Two antiparallel paths 0-1-2-3 plus the chord 3->0, decomposed as a path with a side branch.
  Digraph zig(5, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}, {3, 0}, {2, 4}, {4, 2}});
  out.push_back({zig, {5, {{0, 1, 3}, {1, 2, 3}, {2, 4}}, {{0, 1}, {1, 2}}}});
  out.push_back({ref::path(7), {7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}}});
  return out;
}

bool criterion2(const std::vector<Digraph>& graphs) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  int runs = 0;
  auto run = [&](const Digraph& g, const TreeDecomposition& td, const std::string& label) {
    auto nice = make_nice(td);
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q) {
        Instance inst(g, p, q);
        auto r = solve_twdp(inst, nice);
        ++runs;
        const int opt = ref::min_size(inst);
        c.expect(r.opt == opt && r.solution.size() == opt && ref::feasible(inst, r.solution.arcs),
                 label + " (" + std::to_string(p) + "," + std::to_string(q) + "): dp " + std::to_string(r.opt) +
                     " vs oracle " + std::to_string(opt));
        c.expect(r.stats.table_bound_ok, label + ": table larger than the signature bound");
      }
  };
  for (std::size_t i = 0; i < graphs.size(); ++i) run(graphs[i], heuristic_td(graphs[i]), "graph " + std::to_string(i));
  int h = 0;
  for (const auto& [g, td] : hand_built()) run(g, td, "hand-built " + std::to_string(h++));
  return report(2, "tree decomposition DP matches the oracle within the signature bound", c,
                std::to_string(runs) + " runs incl. " + std::to_string(h) + " hand-built decompositions", since(t0));
}

bool criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  std::mt19937_64 rng(7003);
  int runs = 0;
  for (int i = 0; i < 200; ++i) {
    auto g = ref::random_digraph(rng, 1 + static_cast<int>(rng() % 8), 16);
    for (int pq : {0, 1}) {
      const int opt = ref::min_size(Instance(g, pq, 1));
      for (int k = 1; k <= 4; ++k) {
        auto kr = pq == 0 ? kernelize_01(g, k) : kernelize_11(g, k);
        ++runs;
        bool reduced_yes = false;
        if (kr.verdict == KernelVerdict::trivially_yes) reduced_yes = true;
        if (kr.verdict == KernelVerdict::reduced) {
          int r = ref::min_size_upto(Instance(kr.reduced, pq, 1), kr.k_out);
          reduced_yes = r >= 0;
          const long long bound = pq == 0 ? 3LL * k + 1 : 8LL * k * k + 12LL * k;
          c.expect(kr.reduced.num_vertices() <= bound,
                   "graph " + std::to_string(i) + " k=" + std::to_string(k) + ": kernel has " +
                       std::to_string(kr.reduced.num_vertices()) + " vertices");
        }
        c.expect(reduced_yes == (opt <= k), "graph " + std::to_string(i) + " (" + std::to_string(pq) +
                                                ",1) k=" + std::to_string(k) + ": kernel changes the answer");
      }
    }
  }
  return report(3, "kernels preserve the answer and respect the vertex bounds", c,
                std::to_string(runs) + " kernelizations", since(t0));
}

bool criterion4(const std::vector<Digraph>& graphs) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  double worst01 = 0, worst11 = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    Instance i01(g, 0, 1), i11(g, 1, 1);
    auto a01 = approx_01(g).solution;
    auto a11 = approx_11(g).solution;
    const int o01 = ref::min_size(i01), o11 = ref::min_size(i11);
    c.expect(ref::feasible(i01, a01.arcs) && a01.size() <= 3 * o01, "graph " + std::to_string(i) + ": approx01");
    c.expect(ref::feasible(i11, a11.arcs) && a11.size() <= 8 * o11, "graph " + std::to_string(i) + ": approx11");
    if (o01 > 0) worst01 = std::max(worst01, static_cast<double>(a01.size()) / o01);
    if (o11 > 0) worst11 = std::max(worst11, static_cast<double>(a11.size()) / o11);
  }
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << "worst ratios " << worst01 << " and " << worst11;
  return report(4, "approximations are feasible and within factors 3 and 8", c, d.str(), since(t0));
}

bool criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  std::mt19937_64 rng(7005);
  int tournaments = 0;
  for (int n = 3; n <= 7; ++n)
    for (int it = 0; it < 100; ++it) {
      auto t = ref::random_tournament(rng, n);
      const auto& g = t.graph();
      ++tournaments;
      const std::string tag = "n=" + std::to_string(n) + " #" + std::to_string(it);
      auto opt = [&](int p, int q) { return ref::min_size_upto(Instance(g, p, q), g.num_arcs()); };
      auto t01 = solve_t01(t);
      c.expect(t01.size() == n - 1 && opt(0, 1) == n - 1 && ref::feasible(Instance(g, 0, 1), t01.arcs),
               tag + ": (0,1) size");
      for (auto [p, q] : {std::pair{0, 3}, {3, 0}, {1, 3}, {3, 3}, {4, 3}}) {
        auto sol = solve_t_pq3(t, p, q);
        c.expect(sol.size() == opt(p, q) && ref::feasible(Instance(g, p, q), sol.arcs),
                 tag + ": (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
      for (auto [p, q] : {std::pair{0, 2}, {1, 2}, {2, 2}}) {
        auto sol = solve_t_q2(t, p, q);
        c.expect(sol.size() == opt(p, q) && ref::feasible(Instance(g, p, q), sol.arcs),
                 tag + ": (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
      bool sourceless = true;
      for (Vertex v = 0; v < n; ++v) sourceless &= g.in_degree(v) > 0;
      if (sourceless) c.expect(opt(0, 2) <= ref::min_dominating_set(g), tag + ": (0,2) above the domination number");
    }
  int big = 0;
  for (int n = 1; n <= 1024; n = n < 16 ? n + 1 : n * 2) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto t = gen_tournament(n, 9000 + seed);
      ++big;
      auto ds = greedy_dominating_set(t);
      c.expect(is_dominating_set(t.graph(), ds) &&
                   static_cast<int>(ds.size()) <= static_cast<int>(std::floor(std::log2(n))) + 1,
               "greedy dominating set too large at n=" + std::to_string(n));
      if (n >= 2 && n <= 256) {
        auto sol = bounded_22_solution(t);
        c.expect(verify(Instance(t.graph(), 2, 2), sol) && sol.size() <= 2 * std::log2(n) + 3,
                 "(2,2) construction fails at n=" + std::to_string(n));
      }
    }
  }
  for (int n = 2; n <= 256; n *= 2) {
    Tournament t(ref::transitive(n));
    auto sol = bounded_22_solution(t);
    c.expect(verify(Instance(t.graph(), 2, 2), sol) && sol.size() <= 2 * std::log2(n) + 3,
             "(2,2) construction fails on the transitive tournament n=" + std::to_string(n));
  }
  return report(5, "tournament solvers match the oracle; logarithmic constructions hold", c,
                std::to_string(tournaments) + " small tournaments, " + std::to_string(big) + " large", since(t0));
}

bool criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  int instances = 0;
  for (int n : {2, 4}) {
    for (bool clique : {true, false}) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      if (clique) edges = {{1, static_cast<Vertex>(n + n / 2)}, {0, static_cast<Vertex>(n + 1)}};
      McInstance mc{UndirectedGraph(2 * n, edges), 2, n};
      const std::string tag = "n=" + std::to_string(n) + (clique ? " with clique" : " without clique");
      auto r = mcc_to_optional(mc);
      ++instances;
      auto sol = exact_min_deds_branching(r.instance, r.threshold);
      c.expect(sol.has_value() == clique, tag + ": optional instance answer");
      if (sol) c.expect(ref::feasible(r.instance, sol->arcs), tag + ": optional solution infeasible");

      auto full = optional_to_full(r, r.s_set);
      auto fsol = exact_min_deds_branching(full.instance, full.threshold);
      c.expect(fsol.has_value() == clique, tag + ": full instance answer");
      if (fsol) {
        c.expect(verify(full.instance, *fsol), tag + ": full solution infeasible");
        std::vector<ArcId> ban{*full.anchor_arc};
        c.expect(!exact_min_deds_branching(full.instance, fsol->size(), ban),
                 tag + ": an optimum avoids (u1,u2)");
      }
    }
  }
  UndirectedGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const int is = ref::max_independent_set(k4);
  int aim = -1;
  for (int k = 0; k <= 3; ++k) {
    auto red = is_to_aim(k4, k);
    if (aim < 0) aim = exact_aim(red.graph, red.graph.n).size;
    c.expect((is >= k) == (aim >= red.L), "K4 k=" + std::to_string(k) + ": independent set and AIM disagree");
  }
  return report(6, "reductions preserve yes and no answers", c,
                std::to_string(instances) + " clique instances, K4 AIM = " + std::to_string(aim), since(t0));
}

bool criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  int good = 0;
  std::vector<std::string> log;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto planted = plant_aim(8, 3, 2, 7700 + seed);
    auto r = aim_to_tournament(planted.graph, planted.L, 7700 + seed);
    auto w = aim_witness(r, planted);
    if (!w.arcs) {
      log.push_back("seed " + std::to_string(seed) + ": " + w.failure);
      continue;
    }
    if (!verify(r.instance, *w.arcs)) {
      log.push_back("seed " + std::to_string(seed) + ": witness does not dominate");
      continue;
    }
    if (static_cast<int>(w.arcs->size()) > r.threshold) {
      log.push_back("seed " + std::to_string(seed) + ": witness of size " + std::to_string(w.arcs->size()) +
                    " above " + std::to_string(r.threshold));
      continue;
    }
    ++good;
  }
  c.expect(good >= 18, "only " + std::to_string(good) + "/20 seeds below the threshold");
  bool ok = report(7, "planted matchings yield (1,1) solutions within |V(T)| - L/2 + 1", c,
                   std::to_string(good) + "/20 seeds", since(t0));
  for (auto& l : log) std::cout << "    logged: " << l << "\n";
  return ok;
}

bool criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "deds_acceptance";
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const std::string& text) {
    auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
  };
  std::mt19937_64 rng(7008);
  auto small = put("small.txt", str(ref::random_digraph(rng, 6, 12)));
  auto tour = put("tour.txt", str(gen_tournament(7, 5).graph()));
  auto gen_out = (dir / "gen.txt").string();

  std::vector<std::vector<std::string>> commands = {
      {"solve", "--pq", "1,1", "--engine", "auto", small},
      {"solve", "--pq", "2,1", "--engine", "oracle", small},
      {"solve", "--pq", "0,1", "--engine", "fpt01", small},
      {"solve", "--pq", "1,1", "--engine", "fpt11", small},
      {"solve", "--pq", "0,1", "--engine", "approx01", small},
      {"solve", "--pq", "1,1", "--engine", "approx11", small},
      {"solve", "--pq", "2,2", "--engine", "twdp", small},
      {"solve", "--pq", "2,2", "--engine", "tournament", tour},
      {"solve", "--pq", "3,3", "--engine", "tournament", tour},
      {"solve", "--pq", "0,1", "--engine", "tournament", tour},
      {"kernelize", "--pq", "1,1", "--k", "3", small},
      {"kernelize", "--pq", "0,1", "--k", "3", small},
      {"gen", "tournament", "--n", "9", "--seed", "3", "--out", gen_out},
      {"gen", "aim-reduce", "--planted", "4,1,1", "--seed", "3", "--out", gen_out},
      {"bench", "--suite", "corpus"},
  };
  for (auto cmd : commands) {
    cmd.insert(cmd.begin(), "--no-timing");
    std::string outputs[2];
    std::string files[2];
    for (int round = 0; round < 2; ++round) {
      std::ostringstream out, err;
      run_cli(cmd, out, err);
      outputs[round] = out.str();
      if (cmd[1] == "gen") {
        std::ifstream f(gen_out);
        files[round].assign(std::istreambuf_iterator<char>(f), {});
      }
    }
    std::string label = cmd[1] + " " + (cmd.size() > 5 ? cmd[5] : cmd[2]);
    c.expect(!outputs[0].empty() && outputs[0] == outputs[1], label + ": output differs between runs");
    c.expect(files[0] == files[1], label + ": generated file differs between runs");
  }
  return report(8, "identical JSON across repeated runs for every engine", c,
                std::to_string(commands.size()) + " commands", since(t0));
}

}  // namespace

int main() {
  auto graphs = corpus();
  bool ok = true;
  ok &= criterion1(graphs);
  ok &= criterion2(graphs);
  ok &= criterion3();
  ok &= criterion4(graphs);
  ok &= criterion5();
  ok &= criterion6();
  ok &= criterion7();
  ok &= criterion8();
  return ok ? 0 : 1;
}
