#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbw/bitset.hpp"
#include "dbw/errors.hpp"

namespace dbw {

using VertexId = int;
using EdgeId = int;

struct Arc {
  VertexId tail;
  VertexId head;
  bool operator==(const Arc&) const = default;
};

// Immutable directed graph. Edge indices are stable and follow the order
// the edge list was given in; every derived structure (ground sets, layout
// leaves, separators) refers to edges by these indices.
class DiGraph {
 public:
  DiGraph() = default;

  // Throws SelfLoopError always, ParallelEdgeError unless multigraph is set,
  // InvalidEdgeError on out-of-range endpoints.
  static DiGraph build(int vertex_count,
                       const std::vector<std::pair<VertexId, VertexId>>& edges,
                       bool multigraph = false,
                       std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(arcs_.size()); }

  const Arc& arc(EdgeId e) const { return arcs_[e]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[v]; }

  int out_degree(VertexId v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(VertexId v) const { return static_cast<int>(in_[v].size()); }
  int degree(VertexId v) const { return in_degree(v) + out_degree(v); }

  bool has_arc(VertexId t, VertexId h) const;
  std::optional<EdgeId> find_arc(VertexId t, VertexId h) const;

  bool is_multigraph() const { return multigraph_; }
  bool has_parallel_edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string vertex_name(VertexId v) const;

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<EdgeId>> out_, in_;
  std::vector<std::string> labels_;
  bool multigraph_ = false;
};

// Undirected graph; parallel edges permitted, self-loops rejected.
class UGraph {
 public:
  UGraph() = default;

  static UGraph build(int vertex_count,
                      const std::vector<std::pair<VertexId, VertexId>>& edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::pair<VertexId, VertexId>& edge(EdgeId e) const {
    return edges_[e];
  }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }

  const std::vector<EdgeId>& incident(VertexId v) const { return inc_[v]; }
  int degree(VertexId v) const { return static_cast<int>(inc_[v].size()); }

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<EdgeId>> inc_;
};

struct SourceSink {
  Bitset sources;  // no in-edges
  Bitset sinks;    // no out-edges
};

// Isolated vertices are both sources and sinks.
SourceSink sources_and_sinks(const DiGraph& d);

// Forgets orientation; edge i of the result covers arc i of the input, so
// antiparallel pairs become parallel undirected edges.
UGraph underlying(const DiGraph& d);

// Vertex e->f present for arcs e = (x,y), f = (y,z) with x, y, z pairwise
// distinct; a 2-cycle therefore contributes no arc. Requires a simple input
// (throws ParallelEdgeError on parallel edges).
DiGraph directed_line_graph(const DiGraph& d);

// Arcs entering the vertex side A from outside: {x->y : x not in A, y in A}.
Bitset edge_separator(const DiGraph& d, const Bitset& vertex_side);

// Vertices with an in-edge outside the edge side B and an out-edge inside B.
Bitset vertex_separator(const DiGraph& d, const Bitset& edge_side);

// Union of the vertex separators of X and of its complement; the quantity
// whose size the directed branch-width cut function measures.
Bitset bidirected_separator(const DiGraph& d, const Bitset& edge_side);

// --- small traversal helpers shared by transforms and solvers ---

// Vertices reachable from `sources` following arcs forward (or both ways when
// underlying_motion), never entering `blocked` vertices or using `removed`
// edges. Sources inside `blocked` are dropped.
Bitset reach_from(const DiGraph& d, const Bitset& sources,
                  const Bitset& blocked, const Bitset& removed_edges,
                  bool underlying_motion = false);
Bitset reach_from(const DiGraph& d, VertexId source);

// Vertices that can reach `targets` (forward arcs), same conventions.
Bitset reach_to(const DiGraph& d, const Bitset& targets, const Bitset& blocked,
                const Bitset& removed_edges);

bool is_acyclic(const DiGraph& d);
std::vector<VertexId> topological_order(const DiGraph& d);  // empty if cyclic

}  // namespace dbw
