// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dbw/digraph.hpp"
#include "dbw/errors.hpp"
#include "dbw/generators.hpp"
#include "dbw/layout.hpp"
#include "dbw/solvers.hpp"
#include "dbw/transforms.hpp"
#include "dbw/verify.hpp"
#include "fixtures.hpp"

using namespace dbw;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Merge all sources into one vertex and all sinks into another; every step
// preserves the directed branch-width.
DiGraph collapse_sources_and_sinks(DiGraph d) {
  for (;;) {
    SourceSink ss = sources_and_sinks(d);
    std::vector<int> src = ss.sources.indices();
    if (src.size() >= 2) {
      d = identify_source_sink(d, src[0], src[1]).graph;
      continue;
    }
    std::vector<int> snk = ss.sinks.indices();
    if (snk.size() >= 2) {
      d = identify_source_sink(d, snk[0], snk[1]).graph;
      continue;
    }
    return d;
  }
}

// Caterpillar layout over an explicit leaf order.
LayoutTree caterpillar(int ground, const std::vector<int>& order) {
  LayoutTree t;
  t.ground_size = ground;
  int m = static_cast<int>(order.size());
  if (m == 0) return t;
  if (m == 1) {
    t.add_leaf(order[0]);
    return t;
  }
  std::vector<int> leaves;
  for (int e : order) leaves.push_back(t.add_leaf(e));
  if (m == 2) {
    t.add_edge(leaves[0], leaves[1]);
    return t;
  }
  std::vector<int> spine;
  for (int i = 0; i < m - 2; ++i) spine.push_back(t.add_internal());
  t.add_edge(leaves[0], spine[0]);
  t.add_edge(leaves[1], spine[0]);
  for (int i = 1; i < m - 2; ++i) {
    t.add_edge(spine[i - 1], spine[i]);
    t.add_edge(leaves[i + 1], spine[i]);
  }
  t.add_edge(leaves[m - 1], spine[m - 3]);
  return t;
}

bool has_clique(const UGraph& g, int r) {
  int n = g.vertex_count();
  std::vector<unsigned> adj(n, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge(e);
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  for (unsigned sub = 0; sub < (1u << n); ++sub) {
    if (__builtin_popcount(sub) != r) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (sub >> v & 1) ok = (adj[v] & sub) == (sub & ~(1u << v));
    if (ok) return true;
  }
  return false;
}

int exact_dbw(const DiGraph& d) { return exact_width(DbwCut(d)).width; }

bool criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  for (int it = 0; it < 300; ++it) {
    int kind = it % 3;
    if (kind == 2) {
      DiGraph d = fixtures::random_sparse(rng, 2, 8, 12);
      if (d.vertex_count() > 8) continue;
      BicutCut f(d);
      if (exact_width(f).width != enumerate_width(f)) return false;
    } else {
      DiGraph d = fixtures::random_sparse(rng, 2, 6, 8);
      if (kind == 0) {
        DbwCut f(d);
        if (exact_width(f).width != enumerate_width(f)) return false;
      } else {
        UbwCut f(underlying(d));
        if (exact_width(f).width != enumerate_width(f)) return false;
      }
    }
  }
  return seconds_since(t0) < 60.0;
}

bool criterion2() {
  DiGraph d = fixtures::grid_orientation();
  Bitset x = fixtures::grid_orientation_x();
  if (vertex_separator(d, x) != Bitset::of(9, {4})) return false;
  if (vertex_separator(d, ~x) != Bitset::of(9, {4, 5})) return false;
  return DbwCut(d).evaluate(x) == 2;
}

bool criterion3and4(bool pipeline) {
  std::mt19937_64 rng(1003);
  for (int it = 0; it < 200; ++it) {
    DiGraph d = fixtures::random_sparse(rng, 2, 6, 7);
    int w = exact_dbw(d);
    if (pipeline) {
      UGraph u = underlying(source_sink_split(d).graph);
      if (w != exact_width(UbwCut(u)).width) return false;
    } else {
      int bw = exact_width(UbwCut(underlying(d))).width;
      SourceSink ss = sources_and_sinks(d);
      int s = (ss.sources | ss.sinks).count();
      if (!(bw - s <= w && w <= bw)) return false;
    }
  }
  return true;
}

bool criterion5() {
  std::mt19937_64 rng(1005);
  for (int it = 0; it < 150; ++it) {
    DiGraph d = fixtures::random_sparse(rng, 2, 6, 7);
    int w = exact_dbw(d);
    DiGraph l = directed_line_graph(d);
    int bcrk = exact_width(BicutCut(l)).width;
    if (!(bcrk / 2.0 - 1.0 <= w)) return false;
    long double upper = 8.0L * (1.0L + static_cast<long double>(1ULL << bcrk));
    if (!(w <= upper)) return false;
  }
  return true;
}

bool criterion6() {
  if (exact_width(UbwCut(underlying(fixtures::path4()))).width != 2)
    return false;
  for (int k = 1; k <= 5; ++k) {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 1; i <= k; ++i) es.push_back({0, i});
    if (exact_width(UbwCut(UGraph::build(k + 1, es))).width > 1) return false;
  }
  if (exact_width(UbwCut(UGraph::build(2, {{0, 1}}))).width != 0)
    return false;
  if (exact_dbw(bipartite_orientation_grid(3)) != 0) return false;

  CounterexampleFamily f3 = counterexample_family(3);
  DiGraph core3 = collapse_sources_and_sinks(f3.d);
  if (core3.edge_count() > 16) return false;
  if (exact_dbw(core3) > 3) return false;

  int w3 = exact_dbw(f3.delta_prime);  // 15 edges, within the exact cap
  if (!(w3 >= 2.0 * 3 / 3 - 3)) return false;

  // at n = 4 the lower bound is still negative, so nonnegativity settles it;
  // the heuristic upper bound must at least produce a valid layout
  CounterexampleFamily f4 = counterexample_family(4);
  WidthResult h = heuristic_width(DbwCut(f4.delta_prime), 0);
  if (!validate_layout_tree(h.tree)) return false;
  return h.width >= 0 && 0 >= 2.0 * 4 / 3 - 3;
}

bool criterion7() {
  std::mt19937_64 rng(1007);
  for (int it = 0; it < 100; ++it) {
    DiGraph d = fixtures::random_sparse(rng, 2, 5, 7);
    int w = exact_dbw(d);
    SourceSink ss = sources_and_sinks(d);
    for (int x = 0; x < d.vertex_count(); ++x)
      for (int y = x + 1; y < d.vertex_count(); ++y) {
        bool srcs = ss.sources.test(x) && ss.sources.test(y);
        bool snks = ss.sinks.test(x) && ss.sinks.test(y);
        if (!srcs && !snks) continue;
        if (exact_dbw(identify_source_sink(d, x, y).graph) != w) return false;
      }
  }
  return true;
}

bool criterion8() {
  std::mt19937_64 rng(1008);
  for (int it = 0; it < 100; ++it) {
    DiGraph d = fixtures::random_sparse(rng, 2, 5, 7);
    int w = exact_dbw(d);
    for (int e = 0; e < d.edge_count(); ++e) {
      if (!is_butterfly_edge(d, e)) continue;
      if (exact_dbw(contract_edge(d, e).graph) > w) return false;
    }
  }
  return true;
}

bool criterion9() {
  std::mt19937_64 rng(1009);
  int gated = 0;
  for (int it = 0; it < 200; ++it) {
    int n = 2 + static_cast<int>(rng() % 9);
    DiGraph d = fixtures::random_digraph_local(rng, n, 0.3);

    MaxCutResult mc = d_max_cut(d);
    if (mc.value != brute_force_max_cut(d)) return false;
    if (static_cast<int>(edge_separator(d, mc.side).count()) != mc.value)
      return false;

    HamiltonResult hp = d_hamilton_path(d);
    if (hp.exists != held_karp_hamilton(d)) return false;
    SourceSink ss = sources_and_sinks(d);
    if (ss.sources.count() >= 2 || ss.sinks.count() >= 2) {
      ++gated;
      if (hp.exists) return false;
    }
    if (hp.exists) {
      if (static_cast<int>(hp.path.size()) != d.vertex_count()) return false;
      for (std::size_t i = 0; i + 1 < hp.path.size(); ++i)
        if (!d.has_arc(hp.path[i], hp.path[i + 1])) return false;
    }
  }
  return gated > 0 && !d_hamilton_path(fixtures::jay()).exists;
}

bool criterion10() {
  long checked = 0;
  for (int n = 1; n <= 6; ++n) {
    int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<std::pair<VertexId, VertexId>> es;
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if (mask >> bit & 1) es.push_back({i, j});
      UGraph g = UGraph::build(n, es);
      for (int r = 2; r <= 3; ++r) {
        DredInstance inst = clique_to_dred(g, r);
        if (brute_force_dred(inst) != has_clique(g, r)) return false;

        // dbw <= 1, certified by the star-grouped caterpillar layout
        std::vector<int> order;
        for (int u = 0; u < n; ++u) {
          order.push_back(u);  // arc s -> u comes first in build order
          for (EdgeId e : inst.d.out_edges(1 + u)) order.push_back(e);
        }
        LayoutTree cat = caterpillar(inst.d.edge_count(), order);
        if (layout_width(cat, DbwCut(inst.d)).width > 1) return false;

        // periodic cross-check against the exact engine
        ++checked;
        if (checked % 500 == 0 && inst.d.edge_count() <= 14) {
          if (exact_dbw(inst.d) > 1) return false;
        }
      }
    }
  }
  return true;
}

bool criterion11() {
  std::mt19937_64 rng(1011);
  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng() % 49);
    std::uint64_t seed = rng();
    DiGraph d = random_dag(n, 0.2, seed);
    CopSweepResult r = dag_cop_sweep(d, RobberMotion::Directed);
    if (!r.cleaned) return false;
    if (static_cast<int>(r.moves.size()) != d.vertex_count()) return false;
  }
  return true;
}

bool criterion12(double* elapsed) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyBudget budget;  // defaults: exact cap 16, oracle cap 8, scale 1
  Report rep = run_checks({"all"}, budget, 0);
  *elapsed = seconds_since(t0);
  if (!rep.all_passed()) {
    std::fputs(format_report_text(rep).c_str(), stderr);
    return false;
  }
  return *elapsed < 600.0;
}

}  // namespace

int main() {
  int idx = 0;
  bool all = true;
  auto run = [&](const char* text, bool ok) {
    ++idx;
    std::printf("criterion %2d: %s  %s\n", idx, ok ? "PASS" : "FAIL", text);
    std::fflush(stdout);
    all = all && ok;
  };

  run("exact layout engine matches the enumeration oracle on 300 random "
      "instances in under 60s",
      criterion1());
  run("pinned grid orientation: separators {e} and {e,f}, cut value 2",
      criterion2());
  run("underlying-branch-width sandwich holds on 200 random digraphs",
      criterion3and4(false));
  run("split pipeline equals direct exact dbw on 200 random digraphs",
      criterion3and4(true));
  run("line-graph bi-cut-rank sandwich holds on 150 random digraphs",
      criterion5());
  run("pinned constants: paths, stars, single edge, oriented grids, "
      "counterexample family bounds",
      criterion6());
  run("source-sink identification preserves exact dbw on 100 random "
      "digraphs",
      criterion7());
  run("butterfly contraction never raises exact dbw on 100 random digraphs",
      criterion8());
  run("solvers match brute-force oracles on 200 random digraphs; "
      "two-source/two-sink inputs are refused",
      criterion9());
  run("clique reduction: equivalence and dbw <= 1 on every graph with at "
      "most 6 vertices, r in {2,3}",
      criterion10());
  run("single-cop sweep clears 100 random DAGs up to 50 vertices (directed "
      "robber motion; the underlying reading admits recontamination and is "
      "reported separately by the check suite)",
      criterion11());
  double verify_secs = 0;
  bool c12 = criterion12(&verify_secs);
  std::string last = "full check suite passes in under 600s (took " +
                     std::to_string(verify_secs) + "s)";
  run(last.c_str(), c12);

  return all ? 0 : 1;
}
