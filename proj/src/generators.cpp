#include "dbw/generators.hpp"

#include <numeric>
#include <random>
#include <string>

#include "dbw/rand_util.hpp"
#include "dbw/transforms.hpp"

namespace dbw {

UGraph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error("grid: dimensions must be positive");
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  return UGraph::build(rows * cols, edges);
}

DiGraph bipartite_orientation_grid(int n) {
  if (n < 1) throw Error("bipartite_orientation_grid: n must be positive");
  std::vector<std::pair<VertexId, VertexId>> arcs;
  auto id = [n](int r, int c) { return r * n + c; };
  auto white = [](int r, int c) { return (r + c) % 2 == 0; };
  auto orient = [&](int r1, int c1, int r2, int c2) {
    if (white(r1, c1))
      arcs.push_back({id(r1, c1), id(r2, c2)});
    else
      arcs.push_back({id(r2, c2), id(r1, c1)});
  };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) orient(r, c, r, c + 1);
      if (r + 1 < n) orient(r, c, r + 1, c);
    }
  return DiGraph::build(n * n, arcs);
}

DiGraph ne_dag_grid(int kappa) {
  if (kappa < 2) throw Error("ne_dag_grid: kappa must be at least 2");
  std::vector<std::pair<VertexId, VertexId>> arcs;
  auto id = [kappa](int a, int b) { return a * kappa + b; };
  for (int a = 0; a < kappa; ++a)
    for (int b = 0; b < kappa; ++b) {
      if (b + 1 < kappa) arcs.push_back({id(a, b), id(a, b + 1)});
      if (a + 1 < kappa) arcs.push_back({id(a, b), id(a + 1, b)});
    }
  return DiGraph::build(kappa * kappa, arcs);
}

CounterexampleFamily counterexample_family(int n) {
  if (n < 2) throw Error("counterexample_family: n must be at least 2");
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::string> labels;
  auto x = [](int i) { return i; };
  auto s = [n](int i) { return n + i; };
  auto a = [n](int i) { return 2 * n + i; };
  auto b = [n](int i) { return 3 * n + i; };
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));

  for (int i = 0; i < n; ++i) edges.push_back({x(i), x((i + 1) % n)});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) edges.push_back({s(i), x(j)});
  for (int i = 0; i < n; ++i) edges.push_back({s(i), a(i)});
  for (int i = 0; i < n; ++i) edges.push_back({b(i), a(i)});

  CounterexampleFamily fam;
  fam.d = DiGraph::build(4 * n, edges, false, labels);

  // Contract the s_i->a_i edges one at a time, tracking where the original
  // vertices end up as indices shift.
  std::vector<VertexId> cur(4 * n);
  std::iota(cur.begin(), cur.end(), 0);
  fam.delta = fam.d;
  for (int i = 0; i < n; ++i) {
    auto e = fam.delta.find_arc(cur[s(i)], cur[a(i)]);
    ContractResult r = contract_edge(fam.delta, *e);
    fam.delta = std::move(r.graph);
    for (VertexId& v : cur) v = r.vertex_map[v];
  }

  fam.delta_prime = fam.delta;
  for (int i = 1; i < n; ++i) {
    IdentifyResult r =
        identify_source_sink(fam.delta_prime, cur[b(0)], cur[b(i)]);
    fam.delta_prime = std::move(r.graph);
    for (VertexId& v : cur) v = r.vertex_map[v];
  }
  return fam;
}

DiGraph bidirect(const UGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(2 * g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  return DiGraph::build(g.vertex_count(), arcs);
}

namespace {

DiGraph random_impl(int n, double p, std::uint64_t seed, bool dag_only) {
  if (n < 0) throw Error("random graph: negative vertex count");
  if (p < 0.0 || p > 1.0) throw Error("random graph: p outside [0, 1]");
  std::mt19937_64 gen(seed);
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = dag_only ? i + 1 : 0; j < n; ++j) {
      if (j == i) continue;
      if (rng_unit(gen) < p) arcs.push_back({i, j});
    }
  return DiGraph::build(n, arcs);
}

}  // namespace

DiGraph random_digraph(int n, double p, std::uint64_t seed) {
  return random_impl(n, p, seed, false);
}

DiGraph random_dag(int n, double p, std::uint64_t seed) {
  return random_impl(n, p, seed, true);
}

}  // namespace dbw
