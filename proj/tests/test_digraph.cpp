#include <random>
#include <vector>

#include "doctest.h"
#include "dbw/digraph.hpp"
#include "dbw/errors.hpp"
#include "dbw/gf2.hpp"
#include "dbw/labeling.hpp"
#include "fixtures.hpp"

using namespace dbw;

TEST_CASE("digraph construction and invariants") {
  DiGraph p = fixtures::path3();
  CHECK(p.vertex_count() == 3);
  CHECK(p.edge_count() == 2);
  CHECK(p.arc(0).tail == 0);
  CHECK(p.arc(1).head == 2);
  CHECK(p.has_arc(0, 1));
  CHECK(!p.has_arc(1, 0));

  CHECK_THROWS_AS(DiGraph::build(2, {{0, 1}, {0, 1}}), ParallelEdgeError);
  CHECK_THROWS_AS(DiGraph::build(1, {{0, 0}}), SelfLoopError);
  CHECK_THROWS_AS(DiGraph::build(2, {{0, 5}}), InvalidEdgeError);

  // antiparallel pairs are fine
  CHECK(fixtures::two_cycle().edge_count() == 2);
}

TEST_CASE("sources and sinks") {
  SourceSink ss = sources_and_sinks(fixtures::path3());
  CHECK(ss.sources == Bitset::of(3, {0}));
  CHECK(ss.sinks == Bitset::of(3, {2}));

  ss = sources_and_sinks(fixtures::three_cycle());
  CHECK(ss.sources.none());
  CHECK(ss.sinks.none());

  // an isolated vertex is both
  ss = sources_and_sinks(DiGraph::build(3, {{0, 1}}));
  CHECK(ss.sources.test(2));
  CHECK(ss.sinks.test(2));
}

TEST_CASE("underlying graph keeps the edge bijection") {
  UGraph u = underlying(fixtures::path3());
  CHECK(u.edge_count() == 2);
  CHECK(u.edge(0) == std::pair<VertexId, VertexId>{0, 1});

  // a bidirected edge becomes two parallel undirected edges
  u = underlying(fixtures::two_cycle());
  CHECK(u.edge_count() == 2);
  CHECK(u.degree(0) == 2);

  u = underlying(fixtures::three_cycle());
  CHECK(u.edge_count() == 3);
  for (int v = 0; v < 3; ++v) CHECK(u.degree(v) == 2);
}

TEST_CASE("directed line graph") {
  DiGraph l = directed_line_graph(fixtures::path3());
  CHECK(l.vertex_count() == 2);
  CHECK(l.edge_count() == 1);
  CHECK(l.has_arc(0, 1));

  l = directed_line_graph(fixtures::three_cycle());
  CHECK(l.vertex_count() == 3);
  CHECK(l.edge_count() == 3);
  CHECK(l.has_arc(0, 1));
  CHECK(l.has_arc(1, 2));
  CHECK(l.has_arc(2, 0));

  // a 2-cycle never yields an arc: the three endpoints are not distinct
  l = directed_line_graph(fixtures::two_cycle());
  CHECK(l.vertex_count() == 2);
  CHECK(l.edge_count() == 0);
}

TEST_CASE("edge separator") {
  DiGraph c3 = fixtures::three_cycle();
  CHECK(edge_separator(c3, Bitset::of(3, {1, 2})) == Bitset::of(3, {0}));
  CHECK(edge_separator(c3, Bitset::full(3)).none());
  CHECK(edge_separator(fixtures::single_arc(), Bitset::of(2, {1})) ==
        Bitset::of(1, {0}));
}

TEST_CASE("vertex separators on the pinned grid orientation") {
  DiGraph d = fixtures::grid_orientation();
  Bitset x = fixtures::grid_orientation_x();
  CHECK(vertex_separator(d, x) == Bitset::of(9, {4}));
  CHECK(vertex_separator(d, ~x) == Bitset::of(9, {4, 5}));
  CHECK(bidirected_separator(d, x) == Bitset::of(9, {4, 5}));

  Bitset everything = Bitset::full(d.edge_count());
  CHECK(vertex_separator(d, everything).none());

  DiGraph p = fixtures::path3();
  CHECK(vertex_separator(p, Bitset::of(2, {1})) == Bitset::of(3, {1}));
  CHECK(bidirected_separator(p, Bitset::of(2, {1})) == Bitset::of(3, {1}));
}

TEST_CASE("bidirected separators avoid sources and sinks") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    DiGraph d = fixtures::random_sparse(rng, 2, 6, 8);
    SourceSink ss = sources_and_sinks(d);
    Bitset x(d.edge_count());
    for (int e = 0; e < d.edge_count(); ++e)
      if (rng() & 1) x.set(e);
    Bitset sep = bidirected_separator(d, x);
    CHECK(!sep.intersects(ss.sources));
    CHECK(!sep.intersects(ss.sinks));
    CHECK(sep == (vertex_separator(d, x) | vertex_separator(d, ~x)));
  }
}

TEST_CASE("gf2 rank") {
  CHECK(gf2_rank(Gf2Matrix::from_rows({{1, 1}, {1, 1}})) == 1);
  CHECK(gf2_rank(Gf2Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
        3);
  CHECK(gf2_rank(Gf2Matrix::from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}})) ==
        2);
  CHECK(gf2_rank(Gf2Matrix(0, 0)) == 0);
  CHECK(gf2_rank(Gf2Matrix(3, 2)) == 0);
}

TEST_CASE("bicut values") {
  CHECK(bicut_value(fixtures::single_arc(), Bitset::of(2, {1})) == 1);
  CHECK(bicut_value(fixtures::three_cycle(), Bitset::of(3, {0})) == 2);
  DiGraph edgeless = DiGraph::build(4, {});
  CHECK(bicut_value(edgeless, Bitset::of(4, {1, 2})) == 0);
}

TEST_CASE("separator labeling on the pinned grid orientation") {
  DiGraph d = fixtures::grid_orientation();
  Bitset x = fixtures::grid_orientation_x();
  SeparatorLabeling sl = labeling_from_separator(d, x);
  CHECK(sl.separator == std::vector<VertexId>{4});

  // only b->e points into the separator vertex from the rest
  CHECK(sl.on_rest.valid());
  for (int e : sl.on_rest.domain.indices())
    CHECK(sl.on_rest.label_of[e] == (e == 3 ? 1 : 0));

  // only e->h leaves it on the X side
  CHECK(sl.on_side.valid());
  for (int e : sl.on_side.domain.indices())
    CHECK(sl.on_side.label_of[e] == (e == 8 ? 1 : 0));

  DiGraph l = directed_line_graph(d);
  CHECK(is_consistent(l, ~x, x, sl.on_rest, sl.on_side));
}

TEST_CASE("consistency basics") {
  // injective labelings are vacuously consistent
  DiGraph l = directed_line_graph(fixtures::three_cycle());
  Labeling a, b;
  a.domain = Bitset::of(3, {0, 1});
  a.label_of = {0, 1, 0};
  a.label_count = 2;
  b.domain = Bitset::of(3, {2});
  b.label_of = {0, 0, 0};
  b.label_count = 1;
  CHECK(is_consistent(l, a.domain, b.domain, a, b));

  // equal labels with differing out-neighborhoods are not
  DiGraph d = DiGraph::build(3, {{0, 2}});  // a1->b, a2 isolated
  Labeling left, right;
  left.domain = Bitset::of(3, {0, 1});
  left.label_of = {0, 0, 0};
  left.label_count = 1;
  right.domain = Bitset::of(3, {2});
  right.label_of = {0, 0, 0};
  right.label_count = 1;
  CHECK(!is_consistent(d, left.domain, right.domain, left, right));
}

TEST_CASE("2-cycles can break separator-labeling consistency") {
  // x1->s, x2->s, s->x1: with X = {s->x1} both left edges get the separator
  // label but only x2->s keeps an arc into X in the line graph.
  DiGraph d = DiGraph::build(3, {{1, 0}, {2, 0}, {0, 1}});
  Bitset x = Bitset::of(3, {2});
  SeparatorLabeling sl = labeling_from_separator(d, x);
  CHECK(sl.separator == std::vector<VertexId>{0});
  DiGraph l = directed_line_graph(d);
  CHECK(!is_consistent(l, ~x, x, sl.on_rest, sl.on_side));
}

TEST_CASE("consistent labelings on random 2-cycle-free digraphs") {
  std::mt19937_64 rng(11);
  int tried = 0;
  for (int it = 0; it < 80; ++it) {
    DiGraph d = fixtures::random_sparse(rng, 2, 5, 6);
    bool has_two_cycle = false;
    for (int e = 0; e < d.edge_count(); ++e)
      if (d.has_arc(d.arc(e).head, d.arc(e).tail)) has_two_cycle = true;
    if (has_two_cycle || d.edge_count() == 0) continue;
    ++tried;
    DiGraph l = directed_line_graph(d);
    Bitset x(d.edge_count());
    for (int e = 0; e < d.edge_count(); ++e)
      if (rng() & 1) x.set(e);
    SeparatorLabeling sl = labeling_from_separator(d, x);
    CHECK(is_consistent(l, ~x, x, sl.on_rest, sl.on_side));
  }
  CHECK(tried > 10);
}

TEST_CASE("reachability helpers") {
  DiGraph p = fixtures::path4();
  CHECK(reach_from(p, 0) == Bitset::full(4));
  CHECK(reach_from(p, 2) == Bitset::of(4, {2, 3}));

  Bitset blocked(4);
  blocked.set(1);
  Bitset none_removed(p.edge_count());
  CHECK(reach_from(p, Bitset::of(4, {0}), blocked, none_removed) ==
        Bitset::of(4, {0}));
  // underlying motion walks arcs both ways
  CHECK(reach_from(p, Bitset::of(4, {3}), Bitset(4), none_removed, true) ==
        Bitset::full(4));
  CHECK(reach_to(p, Bitset::of(4, {3}), Bitset(4), none_removed) ==
        Bitset::full(4));

  CHECK(is_acyclic(p));
  CHECK(!is_acyclic(fixtures::three_cycle()));
  CHECK(topological_order(fixtures::three_cycle()).empty());
  std::vector<VertexId> topo = topological_order(p);
  CHECK(topo == std::vector<VertexId>{0, 1, 2, 3});
}
