#pragma once

#include <cstdint>
#include <vector>

#include "dbw/digraph.hpp"
#include "dbw/layout.hpp"
#include "dbw/tree_decomposition.hpp"

namespace dbw {

struct SolveOptions {
  int exact_cap = 16;      // exact layout whenever the ground set fits
  std::uint64_t seed = 0;  // heuristic layout seed above the cap
  int max_bag = 20;        // refuse DP tables beyond this bag size
};

struct MaxCutResult {
  int value = 0;
  Bitset side;  // X; arcs entering X from the other side are the cut
};

// Maximum of |edge_separator(d, X)| over all vertex sides X, by a
// two-coloring DP over a tree decomposition of the underlying graph of the
// source-sink split. The witness is normalized back onto d's vertices
// (sources outside, sinks inside), which never loses value, and the
// returned value is recomputed from the witness.
MaxCutResult d_max_cut(const DiGraph& d, const SolveOptions& opt = {});

// Exhaustive oracle over all 2^n sides. Throws TooLargeError past 20
// vertices.
int brute_force_max_cut(const DiGraph& d);

struct HamiltonResult {
  bool exists = false;
  std::vector<VertexId> path;  // visiting order when a path exists
};

// Directed Hamiltonian path via a path-system DP over a tree decomposition
// of u(d). Two sources or two sinks (an isolated vertex counts as both)
// decide negatively up front.
HamiltonResult d_hamilton_path(const DiGraph& d, const SolveOptions& opt = {});

// Subset DP oracle. Throws TooLargeError past 20 vertices.
bool held_karp_hamilton(const DiGraph& d);

// Vertices within two forward steps of s once the flagged edges are removed.
Bitset reach2(const DiGraph& d, const Bitset& removed_edges, VertexId s);

struct DredInstance {
  DiGraph d;
  int k = 0;       // deletion budget
  int h = 0;       // unreached-vertex threshold
  VertexId s = 0;  // spread origin
};

// Is there F with |F| <= k leaving at least h vertices outside
// reach2(d - F, s)? Exhaustive over subsets of the arcs leaving {s} and s's
// out-neighbors — removing any other arc cannot change reach2 — with a
// TooLargeError once the subset count exceeds the budget.
bool brute_force_dred(const DredInstance& inst,
                      std::uint64_t budget = 50'000'000);

// The clique-to-spread reduction: s feeds every vertex of g, each vertex
// feeds the edge vertices it is incident with; k = r, h = r + r(r-1)/2.
DredInstance clique_to_dred(const UGraph& g, int r);

// Decides dbw(d) <= k exactly through the split pipeline.
bool decide_dbw(const DiGraph& d, int k, const ExactOptions& opt = {});

enum class RobberMotion { Directed, Underlying };

struct CopSweepResult {
  bool cleaned = false;
  std::vector<VertexId> moves;
};

// Single-cop topological sweep against an invisible lazy robber. Each round
// the cop lands on the next vertex in topological order and the
// contamination becomes everything (directed or underlying) reachable from
// it with the occupied vertex deleted; the landing vertex itself comes out
// clean. Directed motion always ends clean on a DAG; underlying motion can
// recontaminate. Inputs with a cycle return cleaned = false and no moves.
CopSweepResult dag_cop_sweep(const DiGraph& d,
                             RobberMotion motion = RobberMotion::Directed);

}  // namespace dbw
