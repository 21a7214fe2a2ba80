#pragma once

#include <vector>

#include "dbw/digraph.hpp"

namespace dbw {

struct IdentifyResult {
  DiGraph graph;
  std::vector<VertexId> vertex_map;  // input vertex -> output vertex
};

// Merge y into x. Requires x != y and both vertices sources, or both sinks
// (an isolated vertex counts as either); throws NotIdentifiableError
// otherwise. The merged vertex keeps x's index, vertices above y shift down
// one, and duplicate edges collapse onto their first occurrence. Directed
// branch-width is unchanged by this operation.
IdentifyResult identify_source_sink(const DiGraph& d, VertexId x, VertexId y);

struct SplitResult {
  DiGraph graph;
  // output vertex -> input vertex it descends from; identity on 0..n-1.
  std::vector<VertexId> vertex_origin;
};

// Replace every source or sink of degree eta >= 2 by eta degree-1 copies:
// the original index keeps its smallest incident edge, and eta - 1 fresh
// vertices (appended in vertex-then-edge order) take the rest. Edge i of the
// result covers edge i of the input, so layouts transfer index-for-index.
// Vertices of degree <= 1, isolated ones included, are left alone.
SplitResult source_sink_split(const DiGraph& d);

struct ContractResult {
  DiGraph graph;
  std::vector<VertexId> vertex_map;  // input vertex -> output vertex
  std::vector<EdgeId> edge_map;      // input edge -> output edge, -1 if gone
};

// Contract e = x->y: one vertex at x's index with the union of the two
// in-neighbourhoods and of the two out-neighbourhoods, y removed. The
// would-be self-loop of an antiparallel partner y->x is dropped, and
// duplicate edges collapse onto their first occurrence.
ContractResult contract_edge(const DiGraph& d, EdgeId e);

// True iff the tail has out-degree 1 and the head has in-degree 1.
bool is_butterfly_edge(const DiGraph& d, EdgeId e);

// With V3 the vertices incident with at least 3 edges: e = x->y qualifies
// iff not both endpoints lie in V3, and additionally y->x is an edge or no
// pair w, z in V3 (w = z allowed) has x reaching w and z reaching y once e
// is removed.
bool is_two_contractible(const DiGraph& d, EdgeId e);

struct DeleteResult {
  DiGraph graph;
  std::vector<VertexId> vertex_map;  // input vertex -> output vertex, -1 gone
  std::vector<EdgeId> edge_map;      // input edge -> output edge, -1 if gone
};

// Drop the flagged edges. Vertices are untouched: endpoints left isolated
// stay in place so the vertex map is the identity.
DeleteResult delete_edges(const DiGraph& d, const Bitset& edges);

// Drop the flagged vertices together with their incident edges; surviving
// vertices are renumbered compactly in their original order.
DeleteResult delete_vertices(const DiGraph& d, const Bitset& vertices);

// Compaction utility: drop every degree-0 vertex.
DeleteResult remove_isolated_vertices(const DiGraph& d);

}  // namespace dbw
