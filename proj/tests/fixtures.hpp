#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "dbw/digraph.hpp"
#include "dbw/layout.hpp"

namespace fixtures {

// Orientation of the 3x3 grid used throughout: vertices a..i = 0..8 laid out
// row by row (a b c / d e f / g h i), arcs listed in drawing order.
inline dbw::DiGraph grid_orientation() {
  return dbw::DiGraph::build(9, {{0, 1},   // 0  a->b
                                 {1, 2},   // 1  b->c
                                 {3, 0},   // 2  d->a
                                 {1, 4},   // 3  b->e
                                 {5, 2},   // 4  f->c
                                 {4, 3},   // 5  e->d
                                 {5, 4},   // 6  f->e
                                 {6, 3},   // 7  g->d
                                 {4, 7},   // 8  e->h
                                 {8, 5},   // 9  i->f
                                 {6, 7},   // 10 g->h
                                 {8, 7}}); // 11 i->h
}

// X = {e->h, i->h, i->f, f->e}; separators {e} and {e, f}.
inline dbw::Bitset grid_orientation_x() {
  return dbw::Bitset::of(12, {8, 11, 9, 6});
}

struct PinnedLayout {
  dbw::LayoutTree tree;
  int xi = -1;  // index into tree_edges of the highlighted cut
};

// The hand-drawn branch decomposition of grid_orientation(): cherries
// {ed,da} {ab,be} {gd,gh} {bc,fc} {eh,ih} {if,fe} hung off a spine, with xi
// the spine edge separating {eh, ih, if, fe} from the rest.
inline PinnedLayout grid_orientation_layout() {
  dbw::LayoutTree t;
  int ed = t.add_leaf(5), da = t.add_leaf(2), ab = t.add_leaf(0),
      be = t.add_leaf(3), gd = t.add_leaf(7), gh = t.add_leaf(10),
      bc = t.add_leaf(1), fc = t.add_leaf(4), eh = t.add_leaf(8),
      ih = t.add_leaf(11), fi = t.add_leaf(9), fe = t.add_leaf(6);
  int t1 = t.add_internal(), t2 = t.add_internal(), t3 = t.add_internal(),
      t4 = t.add_internal(), t5 = t.add_internal(), t6 = t.add_internal(),
      t7 = t.add_internal(), t8 = t.add_internal(), t9 = t.add_internal(),
      t10 = t.add_internal();
  t.add_edge(ed, t1);
  t.add_edge(da, t1);
  t.add_edge(ab, t2);
  t.add_edge(be, t2);
  t.add_edge(t1, t3);
  t.add_edge(t2, t3);
  t.add_edge(t3, t4);
  t.add_edge(t4, t5);
  t.add_edge(t4, t6);
  t.add_edge(t5, t7);
  PinnedLayout out;
  out.xi = static_cast<int>(t.tree_edges.size());
  t.add_edge(t5, t8);
  t.add_edge(t8, t9);
  t.add_edge(t8, t10);
  t.add_edge(gd, t7);
  t.add_edge(gh, t7);
  t.add_edge(bc, t6);
  t.add_edge(fc, t6);
  t.add_edge(eh, t9);
  t.add_edge(ih, t9);
  t.add_edge(fi, t10);
  t.add_edge(fe, t10);
  t.ground_size = 12;
  out.tree = t;
  return out;
}

inline dbw::DiGraph three_cycle() {
  return dbw::DiGraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
}

inline dbw::DiGraph path3() {  // a->b->c
  return dbw::DiGraph::build(3, {{0, 1}, {1, 2}});
}

inline dbw::DiGraph path4() {  // a->b->c->d
  return dbw::DiGraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
}

inline dbw::DiGraph single_arc() { return dbw::DiGraph::build(2, {{0, 1}}); }

inline dbw::DiGraph two_cycle() {
  return dbw::DiGraph::build(2, {{0, 1}, {1, 0}});
}

// Two sources feeding one sink; the smallest Hamilton-gate refuser.
inline dbw::DiGraph jay() { return dbw::DiGraph::build(3, {{0, 1}, {2, 1}}); }

// Random simple digraph: each ordered pair flipped with probability p.
inline dbw::DiGraph random_digraph_local(std::mt19937_64& rng, int n,
                                         double p) {
  std::vector<std::pair<dbw::VertexId, dbw::VertexId>> es;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && coin(rng) < p) es.push_back({i, j});
  return dbw::DiGraph::build(n, es);
}

// Random digraph with a bounded number of arcs, multi-free, 2-cycles allowed.
inline dbw::DiGraph random_sparse(std::mt19937_64& rng, int nlo, int nhi,
                                  int max_edges) {
  int n = nlo + static_cast<int>(rng() % (nhi - nlo + 1));
  std::vector<std::pair<dbw::VertexId, dbw::VertexId>> all;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) all.push_back({i, j});
  std::shuffle(all.begin(), all.end(), rng);
  int m = static_cast<int>(rng() % (max_edges + 1));
  if (m > static_cast<int>(all.size())) m = static_cast<int>(all.size());
  all.resize(m);
  return dbw::DiGraph::build(n, all);
}

}  // namespace fixtures
