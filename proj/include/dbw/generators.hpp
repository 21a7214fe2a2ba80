#pragma once

#include <cstdint>

#include "dbw/digraph.hpp"

namespace dbw {

// rows x cols grid; vertices row-major, each vertex's right edge before its
// down edge.
UGraph grid(int rows, int cols);

// n x n grid, (row+col) even colored white, every edge oriented towards its
// black endpoint; every vertex ends up a source or a sink.
DiGraph bipartite_orientation_grid(int n);

// kappa x kappa grid with arcs (a,b)->(a,b+1) and (a,b)->(a+1,b) only;
// acyclic with exactly one source and one sink and 2*kappa*(kappa-1) arcs.
DiGraph ne_dag_grid(int kappa);

struct CounterexampleFamily {
  DiGraph d;            // cycle + n sources covering it + pendant gadgets
  DiGraph delta;        // d with every s_i->a_i contracted
  DiGraph delta_prime;  // delta with all b_i identified into one source
};

// The bounded-vs-unbounded width family. Vertex order in d: cycle x_1..x_n,
// sources s_1..s_n, then a_1..a_n, then b_1..b_n; edge order: cycle block,
// s_i->x_j block (i outer), s_i->a_i block, b_i->a_i block.
CounterexampleFamily counterexample_family(int n);

// Both orientations of every edge, interleaved in input edge order.
DiGraph bidirect(const UGraph& g);

// Each ordered pair (i,j), i != j, becomes an arc with probability p; the
// DAG variant only tries pairs with i < j. Deterministic per seed.
DiGraph random_digraph(int n, double p, std::uint64_t seed);
DiGraph random_dag(int n, double p, std::uint64_t seed);

}  // namespace dbw
