#include "dbw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "dbw/digraph.hpp"
#include "dbw/errors.hpp"
#include "dbw/generators.hpp"
#include "dbw/io.hpp"
#include "dbw/labeling.hpp"
#include "dbw/layout.hpp"
#include "dbw/rand_util.hpp"
#include "dbw/solvers.hpp"
#include "dbw/transforms.hpp"
#include "json.hpp"

namespace dbw {

namespace {

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Per-check instance counts at each scale.
struct Counts {
  int c1, c2, c3, c5, c6, c7, c8, c11, c12;
  int c4_pool;      // vertex pool for the exhaustive <=4-edge family
  int c13_nmax;     // exhaustive vertex bound for the reduction check
  int c13_sample7;  // sampled 7-vertex graphs on top of the exhaustive part
  int c10_kmax;     // grid sizes 2..c10_kmax
};

Counts counts_for(int scale) {
  if (scale <= 0) return {20, 30, 40, 25, 40, 30, 25, 25, 40, 5, 4, 0, 2};
  if (scale == 1)
    return {100, 150, 200, 100, 200, 150, 100, 100, 200, 8, 6, 100, 3};
  return {200, 300, 400, 200, 400, 300, 200, 200, 400, 8, 6, 300, 3};
}

void add_cx(CheckResult& r, const DiGraph& d, const std::string& what) {
  if (r.counterexamples.size() >= 5) return;
  r.counterexamples.push_back("# " + what + "\n" + format_digraph_text(d));
}

// Random digraph with n in [nlo, nhi] and at most max_edges arcs, sampled by
// shuffling the ordered (or unordered, for the oriented variant) pair list.
DiGraph rnd_digraph(std::mt19937_64& rng, int nlo, int nhi, int max_edges,
                    bool oriented = false) {
  int n = nlo + static_cast<int>(rng_below(rng, nhi - nlo + 1));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = oriented ? i + 1 : 0; j < n; ++j)
      if (i != j) pairs.push_back({i, j});
  rng_shuffle(rng, pairs);
  int cap = std::min<int>(max_edges, static_cast<int>(pairs.size()));
  int m = static_cast<int>(rng_below(rng, cap + 1));
  pairs.resize(m);
  if (oriented)
    for (auto& pr : pairs)
      if (rng() & 1) std::swap(pr.first, pr.second);
  return DiGraph::build(n, pairs);
}

int dbw_exact(const DiGraph& d, const VerifyBudget& b) {
  WidthOptions o;
  o.exact_cap = b.exact_cap;
  return directed_branch_width(d, WidthMode::Exact, o).width;
}

int bwu_exact(const UGraph& g, const VerifyBudget& b) {
  WidthOptions o;
  o.exact_cap = b.exact_cap;
  return branch_width(g, WidthMode::Exact, o).width;
}

// Caterpillar layout with the given leaf order (ground element per leaf).
LayoutTree caterpillar(const std::vector<int>& leaf_order) {
  LayoutTree t;
  t.ground_size = static_cast<int>(leaf_order.size());
  int L = t.ground_size;
  std::vector<int> leaves;
  for (int e : leaf_order) leaves.push_back(t.add_leaf(e));
  if (L <= 1) return t;
  if (L == 2) {
    t.add_edge(leaves[0], leaves[1]);
    return t;
  }
  std::vector<int> spine;
  for (int i = 0; i < L - 2; ++i) spine.push_back(t.add_internal());
  t.add_edge(leaves[0], spine[0]);
  t.add_edge(leaves[1], spine[0]);
  for (int i = 1; i < L - 2; ++i) {
    t.add_edge(spine[i - 1], spine[i]);
    t.add_edge(leaves[i + 1], spine[i]);
  }
  t.add_edge(leaves[L - 1], spine[L - 3]);
  return t;
}

bool next_combination(std::vector<int>& id, int c) {
  int j = static_cast<int>(id.size());
  int t = j - 1;
  while (t >= 0 && id[t] == c - j + t) --t;
  if (t < 0) return false;
  ++id[t];
  for (int q = t + 1; q < j; ++q) id[q] = id[q - 1] + 1;
  return true;
}

// Sequentially identifies each listed group (all sources or all sinks in the
// running graph) into its first member, tracking vertex ids across steps.
DiGraph identify_groups(const DiGraph& d0,
                        const std::vector<std::vector<VertexId>>& groups) {
  DiGraph d = d0;
  std::vector<VertexId> cur(d0.vertex_count());
  std::iota(cur.begin(), cur.end(), 0);
  for (const auto& grp : groups)
    for (std::size_t i = 1; i < grp.size(); ++i) {
      IdentifyResult r = identify_source_sink(d, cur[grp[0]], cur[grp[i]]);
      d = r.graph;
      for (auto& v : cur) v = r.vertex_map[v];
    }
  return d;
}

// ---------------------------------------------------------------- checks --

void check_c1(CheckResult& r, std::mt19937_64& rng, const VerifyBudget& b,
              const Counts& ct) {
  r.claim = "subgraph monotonicity: dbw(H) <= dbw(D) for subgraphs H of D";
  for (int i = 0; i < ct.c1; ++i) {
    DiGraph d = rnd_digraph(rng, 2, 6, 7);
    Bitset f(d.edge_count());
    if (d.edge_count() > 0) {
      std::uint64_t mask = rng_below(rng, 1ull << d.edge_count());
      for (int e = 0; e < d.edge_count(); ++e)
        if ((mask >> e) & 1) f.set(e);
    }
    DiGraph h = delete_edges(d, f).graph;
    if (d.vertex_count() > 1 && (rng() & 1)) {
      Bitset u(h.vertex_count());
      u.set(static_cast<int>(rng_below(rng, h.vertex_count())));
      h = delete_vertices(h, u).graph;
    }
    ++r.attempted;
    if (dbw_exact(h, b) > dbw_exact(d, b)) {
      ++r.failed;
      add_cx(r, d, "dbw increased after deleting edges/vertices");
    }
  }
}

void check_c2(CheckResult& r, std::mt19937_64& rng, const VerifyBudget&,
              const Counts& ct) {
  r.claim =
      "bidirected separator = (vertices incident with both sides) minus "
      "sources and sinks; symmetric; exhaustive over X";
  for (int i = 0; i < ct.c2; ++i) {
    DiGraph d = rnd_digraph(rng, 2, 6, 6);
    SourceSink ss = sources_and_sinks(d);
    Bitset ssu = ss.sources | ss.sinks;
    bool bad = false;
    int m = d.edge_count();
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      Bitset x(m);
      for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1) x.set(e);
      Bitset sep = bidirected_separator(d, x);
      if (sep != bidirected_separator(d, ~x)) bad = true;
      if (sep.intersects(ssu)) bad = true;
      Bitset expect(d.vertex_count());
      for (VertexId v = 0; v < d.vertex_count(); ++v) {
        bool in_x = false, out_x = false;
        for (EdgeId e : d.out_edges(v)) (x.test(e) ? in_x : out_x) = true;
        for (EdgeId e : d.in_edges(v)) (x.test(e) ? in_x : out_x) = true;
        if (in_x && out_x && !ssu.test(v)) expect.set(v);
      }
      if (sep != expect) bad = true;
      if (bad) break;
    }
    ++r.attempted;
    if (bad) {
      ++r.failed;
      add_cx(r, d, "separator identity violated");
    }
  }
}

void check_c3(CheckResult& r, std::mt19937_64& rng, const VerifyBudget& b,
              const Counts& ct) {
  r.claim = "bw(u(D)) - |sources+sinks| <= dbw(D) <= bw(u(D))";
  for (int i = 0; i < ct.c3; ++i) {
    DiGraph d = rnd_digraph(rng, 2, 6, 7);
    int w = dbw_exact(d, b);
    int wu = bwu_exact(underlying(d), b);
    SourceSink ss = sources_and_sinks(d);
    int s = (ss.sources | ss.sinks).count();
    ++r.attempted;
    if (!(wu - s <= w && w <= wu)) {
      ++r.failed;
      add_cx(r, d, "sandwich violated: dbw=" + std::to_string(w) +
                       " bw(u)=" + std::to_string(wu) +
                       " |S|=" + std::to_string(s));
    }
  }
}

void check_c4(CheckResult& r, std::mt19937_64&, const VerifyBudget& b,
              const Counts& ct) {
  int pool = ct.c4_pool;
  r.claim = "dbw(bidirect(G)) = max(bw(G), 2) for every nonempty simple G "
            "with <= 4 edges, and 0 when G is edgeless";
  r.note = "vertex pool " + std::to_string(pool) +
           "; extra isolated vertices change neither side. Doubling an edge "
           "puts both its endpoints into every separating cut, so values "
           "below 2 are unreachable and plain equality with bw(G) needs "
           "bw(G) >= 2";
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < pool; ++i)
    for (int j = i + 1; j < pool; ++j) pairs.push_back({i, j});
  int c = static_cast<int>(pairs.size());
  for (int k = 0; k <= 4; ++k) {
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    if (k > c) break;
    do {
      std::vector<std::pair<VertexId, VertexId>> es;
      for (int t : id) es.push_back(pairs[t]);
      UGraph g = UGraph::build(pool, es);
      DiGraph d = bidirect(g);
      ++r.attempted;
      int want = g.edge_count() == 0 ? 0 : std::max(bwu_exact(g, b), 2);
      if (dbw_exact(d, b) != want) {
        ++r.failed;
        add_cx(r, d, "bidirected equality violated");
      }
    } while (k > 0 && next_combination(id, c));
    if (k == 0) continue;
  }
}

void check_c5(CheckResult& r, std::mt19937_64& rng, const VerifyBudget& b,
              const Counts& ct) {
  r.claim = "dbw unchanged by every applicable source-source or sink-sink "
            "identification";
  for (int i = 0; i < ct.c5; ++i) {
    DiGraph d = rnd_digraph(rng, 2, 6, 7);
    SourceSink ss = sources_and_sinks(d);
    int base = dbw_exact(d, b);
    bool bad = false;
    for (VertexId x = 0; x < d.vertex_count() && !bad; ++x)
      for (VertexId y = x + 1; y < d.vertex_count() && !bad; ++y) {
        bool both_src = ss.sources.test(x) && ss.sources.test(y);
        bool both_snk = ss.sinks.test(x) && ss.sinks.test(y);
        if (!both_src && !both_snk) continue;
        DiGraph h = identify_source_sink(d, x, y).graph;
        if (dbw_exact(h, b) != base) bad = true;
      }
    ++r.attempted;
    if (bad) {
      ++r.failed;
      add_cx(r, d, "identification changed dbw");
    }
  }
}

void check_c6(CheckResult& r, std::mt19937_64& rng, const VerifyBudget& b,
              const Counts& ct) {
  r.claim = "dbw(D) = bw(u(source_sink_split(D))), and the via-split engine "
            "agrees with the direct one";
  for (int i = 0; i < ct.c6; ++i) {
    DiGraph d = rnd_digraph(rng, 2, 6, 7);
    int w = dbw_exact(d, b);
    int ws = bwu_exact(underlying(source_sink_split(d).graph), b);
    WidthOptions o;
    o.exact_cap = b.exact_cap;
    int wv = directed_branch_width(d, WidthMode::ViaSplit, o).width;
    ++r.attempted;
    if (w != ws || w != wv) {
      ++r.failed;
      add_cx(r, d, "split equality violated: dbw=" + std::to_string(w) +
                       " bw(u(split))=" + std::to_string(ws) +
                       " via-split=" + std::to_string(wv));
    }
  }
}

void check_c7(CheckResult& r, std::mt19937_64& rng, const VerifyBudget& b,
              const Counts& ct) {
  r.claim =
      "bcrk(L(D))/2 - 1 <= dbw(D) <= 8(1 + 2^bcrk(L(D))) on simple digraphs";
  for (int i = 0; i < ct.c7; ++i) {
    DiGraph d = rnd_digraph(rng, 2, 6, 7);
    DiGraph l = directed_line_graph(d);
    WidthOptions o;
    o.exact_cap = b.exact_cap;
    int bc = bi_cut_rank_width(l, WidthMode::Exact, o).width;
    int w = dbw_exact(d, b);
    ++r.attempted;
    double lo = bc / 2.0 - 1.0;
    double hi = 8.0 * (1.0 + std::ldexp(1.0, bc));
    if (!(lo <= w && w <= hi)) {
      ++r.failed;
      add_cx(r, d, "line-graph sandwich violated: bcrk=" + std::to_string(bc) +
                       " dbw=" + std::to_string(w));
    }
  }
}

void check_c8(CheckResult& r, std::mt19937_64& rng, const VerifyBudget& b,
              const Counts& ct) {
  r.claim = "contracting a butterfly edge never increases dbw";
  for (int i = 0; i < ct.c8; ++i) {
    DiGraph d = rnd_digraph(rng, 2, 6, 7);
    int base = dbw_exact(d, b);
    bool bad = false;
    for (EdgeId e = 0; e < d.edge_count() && !bad; ++e) {
      if (!is_butterfly_edge(d, e)) continue;
      DiGraph h = contract_edge(d, e).graph;
      if (dbw_exact(h, b) > base) bad = true;
    }
    ++r.attempted;
    if (bad) {
      ++r.failed;
      add_cx(r, d, "butterfly contraction increased dbw");
    }
  }
}

void check_c9(CheckResult& r, std::mt19937_64&, const VerifyBudget& b,
              const Counts&) {
  r.claim = "family divergence: dbw(D_n) <= 3 while dbw(Delta'_n) >= 2n/3 - 3";
  std::ostringstream note;
  for (int n = 3; n <= 4; ++n) {
    CounterexampleFamily fam = counterexample_family(n);
    ++r.attempted;
    bool bad = false;

    if (fam.d.vertex_count() != 4 * n ||
        fam.d.edge_count() != n * n + 3 * n)
      bad = true;

    // D_n: identify all sources (s_i and b_i) and then all sinks (a_i);
    // each step preserves dbw, and the core is small enough for the exact
    // engine. A direct heuristic upper bound on D_n itself is recorded too.
    std::vector<VertexId> sources, sinks;
    for (int i = 0; i < n; ++i) {
      sources.push_back(n + i);      // s_i
      sources.push_back(3 * n + i);  // b_i
      sinks.push_back(2 * n + i);    // a_i
    }
    DiGraph core = identify_groups(fam.d, {sources, sinks});
    int wd = dbw_exact(core, b);
    if (wd > 3) bad = true;
    int hd = heuristic_width(DbwCut(fam.d), 1).width;
    note << "n=" << n << ": dbw(D_n)=" << wd << " via identified core ("
         << core.edge_count() << " edges), heuristic upper " << hd << "; ";

    double bound = 2.0 * n / 3.0 - 3.0;
    if (fam.delta_prime.edge_count() <= b.exact_cap) {
      int wp = dbw_exact(fam.delta_prime, b);
      if (wp < bound) bad = true;
      note << "dbw(Delta'_" << n << ")=" << wp << " >= " << bound << ". ";
    } else {
      // Exact width is out of cap range; the bound is nonpositive here, so
      // dbw >= 0 settles it. Recorded as the degraded one-sided check.
      int hp = heuristic_width(DbwCut(fam.delta_prime), 1).width;
      if (bound > 0) bad = true;  // would need an exact lower bound
      note << "dbw(Delta'_" << n << ") in [0, " << hp
           << "] (heuristic); bound " << bound << " <= 0 holds trivially. ";
    }
    if (bad) {
      ++r.failed;
      add_cx(r, fam.d, "family claim failed at n=" + std::to_string(n));
    }
  }
  r.note = note.str();
}

void check_c10(CheckResult& r, std::mt19937_64&, const VerifyBudget& b,
               const Counts& ct) {
  r.claim = "north-east grid: dbw >= bw(u) - 2 (one source, one sink)";
  std::ostringstream note;
  for (int k = 2; k <= ct.c10_kmax; ++k) {
    DiGraph d = ne_dag_grid(k);
    SourceSink ss = sources_and_sinks(d);
    int w = dbw_exact(d, b);
    int wu = bwu_exact(underlying(d), b);
    ++r.attempted;
    if (ss.sources.count() != 1 || ss.sinks.count() != 1 || w < wu - 2) {
      ++r.failed;
      add_cx(r, d, "grid lower bound violated at k=" + std::to_string(k));
    }
    note << "k=" << k << ": dbw=" << w << " bw(u)=" << wu << ". ";
  }
  r.note = note.str();
}

void check_c11(CheckResult& r, std::mt19937_64& rng, const VerifyBudget&,
               const Counts& ct) {
  r.claim = "separator labeling is consistent in the line graph, for "
            "digraphs without 2-cycles; exhaustive over X";
  r.note = "restricted to 2-cycle-free inputs: with a 2-cycle the line graph "
           "omits the arc between its two edges and consistency can fail "
           "(negative control kept below)";
  for (int i = 0; i < ct.c11; ++i) {
    DiGraph d = rnd_digraph(rng, 2, 6, 6, /*oriented=*/true);
    DiGraph l = directed_line_graph(d);
    int m = d.edge_count();
    bool bad = false;
    for (std::uint64_t mask = 0; mask < (1ull << m) && !bad; ++mask) {
      Bitset x(m);
      for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1) x.set(e);
      SeparatorLabeling sl = labeling_from_separator(d, x);
      if (!is_consistent(l, ~x, x, sl.on_rest, sl.on_side)) bad = true;
    }
    ++r.attempted;
    if (bad) {
      ++r.failed;
      add_cx(r, d, "separator labeling inconsistent on a 2-cycle-free input");
    }
  }
  // Negative control: the known 2-cycle counterexample must stay
  // inconsistent; if it ever becomes consistent the restriction above would
  // be unfounded and this check should fail loudly.
  DiGraph cx = DiGraph::build(3, {{1, 0}, {2, 0}, {0, 1}});
  Bitset x(3);
  x.set(2);  // X = {s -> x1}
  SeparatorLabeling sl = labeling_from_separator(cx, x);
  ++r.attempted;
  if (is_consistent(directed_line_graph(cx), ~x, x, sl.on_rest, sl.on_side)) {
    ++r.failed;
    add_cx(r, cx, "2-cycle negative control unexpectedly consistent");
  }
}

void check_c12(CheckResult& r, std::mt19937_64& rng, const VerifyBudget&,
               const Counts& ct) {
  r.claim = "d_max_cut and d_hamilton_path match their brute-force oracles; "
            "the Hamilton gate rejects multi-source/sink inputs; max-cut "
            "optimum survives duplicate-free source-sink identification";
  r.note = "identifications that would merge two arcs onto the same head "
           "(or tail) are skipped: collapsing parallels can lower the "
           "max-cut value, which only multigraph identification preserves";
  SolveOptions so;
  so.exact_cap = 12;

  // The two-source digraph J = {a->b, c->b} must be gated to "no".
  {
    DiGraph j = DiGraph::build(3, {{0, 1}, {2, 1}});
    ++r.attempted;
    if (d_hamilton_path(j, so).exists || held_karp_hamilton(j)) {
      ++r.failed;
      add_cx(r, j, "two-source digraph accepted");
    }
  }

  for (int i = 0; i < ct.c12; ++i) {
    int tier = i % 3;
    DiGraph d = [&] {
      if (tier == 2) {
        int nn = 2 + static_cast<int>(rng_below(rng, 6));
        std::uint64_t s2 = rng();
        return random_digraph(nn, 0.5, s2);
      }
      return rnd_digraph(rng, 2, 10, tier == 0 ? 10 : 20);
    }();
    ++r.attempted;
    try {
      bool bad = false;
      MaxCutResult mc = d_max_cut(d, so);
      int brute = brute_force_max_cut(d);
      if (mc.value != brute) bad = true;
      if (edge_separator(d, mc.side).count() != mc.value) bad = true;

      HamiltonResult hp = d_hamilton_path(d, so);
      bool hk = held_karp_hamilton(d);
      if (hp.exists != hk) bad = true;
      SourceSink ss = sources_and_sinks(d);
      if ((ss.sources.count() >= 2 || ss.sinks.count() >= 2) && hp.exists)
        bad = true;
      if (hp.exists) {
        std::vector<char> seen(d.vertex_count(), 0);
        if (static_cast<int>(hp.path.size()) != d.vertex_count()) bad = true;
        for (std::size_t t = 0; !bad && t < hp.path.size(); ++t) {
          if (seen[hp.path[t]]) bad = true;
          seen[hp.path[t]] = 1;
          if (t > 0 && !d.has_arc(hp.path[t - 1], hp.path[t])) bad = true;
        }
      }

      // Max-cut invariance via brute force: the first applicable
      // identification that collapses no arcs.
      auto heads_clash = [&](VertexId x, VertexId y) {
        Bitset hx(d.vertex_count());
        for (EdgeId e : d.out_edges(x)) hx.set(d.arc(e).head);
        for (EdgeId e : d.out_edges(y))
          if (hx.test(d.arc(e).head)) return true;
        return false;
      };
      auto tails_clash = [&](VertexId x, VertexId y) {
        Bitset tx(d.vertex_count());
        for (EdgeId e : d.in_edges(x)) tx.set(d.arc(e).tail);
        for (EdgeId e : d.in_edges(y))
          if (tx.test(d.arc(e).tail)) return true;
        return false;
      };
      for (VertexId x = 0; x < d.vertex_count() && !bad; ++x) {
        bool done = false;
        for (VertexId y = x + 1; y < d.vertex_count() && !bad; ++y) {
          bool bs = ss.sources.test(x) && ss.sources.test(y) &&
                    !heads_clash(x, y);
          bool bk =
              ss.sinks.test(x) && ss.sinks.test(y) && !tails_clash(x, y);
          if (!bs && !bk) continue;
          DiGraph h = identify_source_sink(d, x, y).graph;
          if (brute_force_max_cut(h) != brute) bad = true;
          done = true;
          break;
        }
        if (done) break;
      }

      if (bad) {
        ++r.failed;
        add_cx(r, d, "solver disagreement");
      }
    } catch (const Error& e) {
      ++r.failed;
      add_cx(r, d, std::string("engine error: ") + e.what());
    }
  }
}

void check_c13(CheckResult& r, std::mt19937_64& rng, const VerifyBudget& b,
               const Counts& ct) {
  r.claim = "r-clique in G <=> DRED on clique_to_dred(G, r) for r in {2,3}; "
            "every constructed instance has dbw <= 1";
  r.note = "exhaustive for G up to " + std::to_string(ct.c13_nmax) +
           " vertices" +
           (ct.c13_sample7 > 0
                ? ", plus " + std::to_string(ct.c13_sample7) +
                      " sampled 7-vertex graphs"
                : "") +
           "; dbw <= 1 certified by an explicit width-1 caterpillar layout, "
           "exact engine cross-check on a subsample";
  long long seen = 0;

  auto run_one = [&](const UGraph& g, int rr) {
    ++r.attempted;
    bool clique = false;
    int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (int i = 0; i < g.edge_count(); ++i) {
      auto [u, v] = g.edge(i);
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
    std::vector<int> id(rr);
    std::iota(id.begin(), id.end(), 0);
    if (rr <= n) do {
        bool all = true;
        for (int a = 0; a < rr && all; ++a)
          for (int c = a + 1; c < rr && all; ++c)
            if (!((adj[id[a]] >> id[c]) & 1)) all = false;
        if (all) {
          clique = true;
          break;
        }
      } while (next_combination(id, n));

    DredInstance inst = clique_to_dred(g, rr);
    bool dred = brute_force_dred(inst);
    bool bad = dred != clique;

    // Width certificate: leaves grouped star-by-star keep every cut's
    // bidirected separator within one middle vertex.
    std::vector<int> order;
    for (int j = 0; j < n; ++j) {
      order.push_back(j);
      for (EdgeId e = n; e < inst.d.edge_count(); ++e)
        if (inst.d.arc(e).tail == 1 + j) order.push_back(e);
    }
    LayoutTree t = caterpillar(order);
    if (layout_width(t, DbwCut(inst.d)).width > 1) bad = true;
    ++seen;
    if (seen % 400 == 0 && inst.d.edge_count() <= 14 &&
        dbw_exact(inst.d, b) > 1)
      bad = true;

    if (bad) {
      ++r.failed;
      add_cx(r, inst.d, "reduction mismatch or width certificate failed "
                        "(r=" + std::to_string(rr) + ")");
    }
  };

  for (int n = 1; n <= ct.c13_nmax; ++n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    int c = static_cast<int>(pairs.size());
    for (std::uint64_t mask = 0; mask < (1ull << c); ++mask) {
      std::vector<std::pair<VertexId, VertexId>> es;
      for (int t = 0; t < c; ++t)
        if ((mask >> t) & 1) es.push_back(pairs[t]);
      UGraph g = UGraph::build(n, es);
      run_one(g, 2);
      run_one(g, 3);
    }
  }
  for (int i = 0; i < ct.c13_sample7; ++i) {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int a = 0; a < 7; ++a)
      for (int c2 = a + 1; c2 < 7; ++c2)
        if (rng() & 1) es.push_back({a, c2});
    UGraph g = UGraph::build(7, es);
    run_one(g, 2);
    run_one(g, 3);
  }
}

using CheckFn = void (*)(CheckResult&, std::mt19937_64&, const VerifyBudget&,
                         const Counts&);

struct CheckEntry {
  const char* name;
  CheckFn fn;
};

const CheckEntry kChecks[] = {
    {"C1", check_c1},   {"C2", check_c2},   {"C3", check_c3},
    {"C4", check_c4},   {"C5", check_c5},   {"C6", check_c6},
    {"C7", check_c7},   {"C8", check_c8},   {"C9", check_c9},
    {"C10", check_c10}, {"C11", check_c11}, {"C12", check_c12},
    {"C13", check_c13},
};

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kChecks) v.push_back(e.name);
    return v;
  }();
  return names;
}

Report run_checks(const std::vector<std::string>& suite,
                  const VerifyBudget& budget, std::uint64_t seed) {
  std::vector<std::string> names;
  for (const auto& s : suite) {
    if (s == "all") {
      names = known_checks();
      break;
    }
    bool found = false;
    for (const auto& e : kChecks)
      if (s == e.name) found = true;
    if (!found) throw UnknownCheckError("unknown check \"" + s + "\"");
    names.push_back(s);
  }
  if (names.empty()) names = known_checks();

  Counts ct = counts_for(budget.scale);
  Report rep;
  for (const auto& name : names) {
    for (const auto& e : kChecks) {
      if (name != e.name) continue;
      CheckResult res;
      res.name = name;
      std::mt19937_64 rng(seed ^ fnv(name));
      auto t0 = std::chrono::steady_clock::now();
      e.fn(res, rng, budget, ct);
      auto t1 = std::chrono::steady_clock::now();
      res.seconds = std::chrono::duration<double>(t1 - t0).count();
      rep.checks.push_back(std::move(res));
    }
  }
  return rep;
}

std::string format_report_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    std::ostringstream line;
    line << c.name << " " << (c.ok() ? "ok" : "FAIL") << "  attempted="
         << c.attempted << " failed=" << c.failed;
    out << line.str();
    out.precision(2);
    out << std::fixed << "  (" << c.seconds << "s)  " << c.claim << "\n";
    if (!c.note.empty()) out << "     note: " << c.note << "\n";
    for (const auto& cx : c.counterexamples) {
      std::istringstream in(cx);
      std::string ln;
      while (std::getline(in, ln)) out << "     | " << ln << "\n";
    }
  }
  out << (r.all_passed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return out.str();
}

std::string format_report_structured(const Report& r) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["all_passed"] = r.all_passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["claim"] = c.claim;
    cj["attempted"] = c.attempted;
    cj["failed"] = c.failed;
    cj["seconds"] = c.seconds;
    cj["note"] = c.note;
    cj["counterexamples"] = c.counterexamples;
    j["checks"].push_back(cj);
  }
  return j.dump(2) + "\n";
}

}  // namespace dbw
