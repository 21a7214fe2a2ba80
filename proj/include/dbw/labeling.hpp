#pragma once

#include <vector>

#include "dbw/bitset.hpp"
#include "dbw/digraph.hpp"

namespace dbw {

// Partial vertex labeling of a digraph: labels in [0, label_count) are
// meaningful on the domain only.
struct Labeling {
  Bitset domain;
  std::vector<int> label_of;  // size = vertex count of the labeled graph
  int label_count = 0;

  bool valid() const {
    if (label_of.size() != static_cast<std::size_t>(domain.size()))
      return false;
    for (int v : domain.indices())
      if (label_of[v] < 0 || label_of[v] >= label_count) return false;
    return true;
  }
};

// A bipartition side pair (A, B) of vertices of d is consistent for
// (lab_a, lab_b) when equal labels within one side cannot be told apart by
// their arcs into the other side: equal-labeled vertices of A have the same
// out-neighborhood in B, and equal-labeled vertices of B the same
// in-neighborhood in A.
bool is_consistent(const DiGraph& d, const Bitset& side_a, const Bitset& side_b,
                   const Labeling& lab_a, const Labeling& lab_b);

// Separator-derived labeling pair for the partition (E\X, X) read as vertex
// sides of the directed line graph. The separator vertices s_1 < ... < s_r of
// (E\X, X) receive labels 1..r; an edge of E\X gets label i when it points
// into s_i, an edge of X gets label i when it emanates from s_i, and all
// other edges get label 0.
//
// When D has no antiparallel pair the partition is always consistent for this
// labeling. With 2-cycles present consistency can fail, because the line
// graph omits the arc from w->x to x->w: in {x1->s, x2->s, s->x1} with
// X = {s->x1} both left edges get the separator label but only x2->s has an
// arc into X.
struct SeparatorLabeling {
  Labeling on_rest;  // domain E\X
  Labeling on_side;  // domain X
  std::vector<VertexId> separator;  // ascending
};

SeparatorLabeling labeling_from_separator(const DiGraph& d,
                                          const Bitset& edge_side);

}  // namespace dbw
