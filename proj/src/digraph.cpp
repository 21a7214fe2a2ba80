#include "dbw/digraph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dbw {

DiGraph DiGraph::build(int vertex_count,
                       const std::vector<std::pair<VertexId, VertexId>>& edges,
                       bool multigraph, std::vector<std::string> labels) {
  DiGraph d;
  d.vertex_count_ = vertex_count;
  d.multigraph_ = multigraph;
  d.out_.resize(vertex_count);
  d.in_.resize(vertex_count);
  d.labels_ = std::move(labels);
  if (!d.labels_.empty() &&
      d.labels_.size() != static_cast<std::size_t>(vertex_count))
    throw InvalidEdgeError("label list does not match vertex count");

  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [t, h] = edges[i];
    if (t < 0 || t >= vertex_count || h < 0 || h >= vertex_count)
      throw InvalidEdgeError("edge " + std::to_string(i) +
                             " has endpoint out of range");
    if (t == h)
      throw SelfLoopError("edge " + std::to_string(i) + " is a self-loop");
    if (!multigraph && !seen.insert({t, h}).second)
      throw ParallelEdgeError("edge " + std::to_string(i) + " duplicates " +
                              std::to_string(t) + "->" + std::to_string(h));
    EdgeId e = static_cast<EdgeId>(d.arcs_.size());
    d.arcs_.push_back({t, h});
    d.out_[t].push_back(e);
    d.in_[h].push_back(e);
  }
  return d;
}

bool DiGraph::has_arc(VertexId t, VertexId h) const {
  return find_arc(t, h).has_value();
}

std::optional<EdgeId> DiGraph::find_arc(VertexId t, VertexId h) const {
  for (EdgeId e : out_[t])
    if (arcs_[e].head == h) return e;
  return std::nullopt;
}

bool DiGraph::has_parallel_edges() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Arc& a : arcs_)
    if (!seen.insert({a.tail, a.head}).second) return true;
  return false;
}

std::string DiGraph::vertex_name(VertexId v) const {
  if (!labels_.empty()) return labels_[v];
  return "v" + std::to_string(v);
}

UGraph UGraph::build(
    int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  UGraph g;
  g.vertex_count_ = vertex_count;
  g.inc_.resize(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
      throw InvalidEdgeError("edge " + std::to_string(i) +
                             " has endpoint out of range");
    if (a == b)
      throw SelfLoopError("edge " + std::to_string(i) + " is a self-loop");
    EdgeId e = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({a, b});
    g.inc_[a].push_back(e);
    g.inc_[b].push_back(e);
  }
  return g;
}

SourceSink sources_and_sinks(const DiGraph& d) {
  SourceSink s{Bitset(d.vertex_count()), Bitset(d.vertex_count())};
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (d.in_degree(v) == 0) s.sources.set(v);
    if (d.out_degree(v) == 0) s.sinks.set(v);
  }
  return s;
}

UGraph underlying(const DiGraph& d) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(d.edge_count());
  for (const Arc& a : d.arcs()) edges.push_back({a.tail, a.head});
  return UGraph::build(d.vertex_count(), edges);
}

DiGraph directed_line_graph(const DiGraph& d) {
  if (d.has_parallel_edges())
    throw ParallelEdgeError("line graph requires a simple digraph");
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    const Arc& ea = d.arc(e);
    for (EdgeId f : d.out_edges(ea.head)) {
      const Arc& fa = d.arc(f);
      // consecutive arcs (x,y), (y,z); skip 2-cycles (z == x)
      if (fa.head == ea.tail) continue;
      arcs.push_back({e, f});
    }
  }
  return DiGraph::build(d.edge_count(), arcs);
}

Bitset edge_separator(const DiGraph& d, const Bitset& vertex_side) {
  Bitset out(d.edge_count());
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    const Arc& a = d.arc(e);
    if (!vertex_side.test(a.tail) && vertex_side.test(a.head)) out.set(e);
  }
  return out;
}

Bitset vertex_separator(const DiGraph& d, const Bitset& edge_side) {
  Bitset out(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    bool in_outside = false, out_inside = false;
    for (EdgeId e : d.in_edges(v))
      if (!edge_side.test(e)) {
        in_outside = true;
        break;
      }
    if (!in_outside) continue;
    for (EdgeId e : d.out_edges(v))
      if (edge_side.test(e)) {
        out_inside = true;
        break;
      }
    if (out_inside) out.set(v);
  }
  return out;
}

Bitset bidirected_separator(const DiGraph& d, const Bitset& edge_side) {
  return vertex_separator(d, edge_side) | vertex_separator(d, ~edge_side);
}

Bitset reach_from(const DiGraph& d, const Bitset& sources,
                  const Bitset& blocked, const Bitset& removed_edges,
                  bool underlying_motion) {
  Bitset vis(d.vertex_count());
  std::deque<VertexId> q;
  for (int v : sources.indices())
    if (!blocked.test(v)) {
      vis.set(v);
      q.push_back(v);
    }
  auto push = [&](VertexId w) {
    if (!blocked.test(w) && !vis.test(w)) {
      vis.set(w);
      q.push_back(w);
    }
  };
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    for (EdgeId e : d.out_edges(v))
      if (!removed_edges.test(e)) push(d.arc(e).head);
    if (underlying_motion)
      for (EdgeId e : d.in_edges(v))
        if (!removed_edges.test(e)) push(d.arc(e).tail);
  }
  return vis;
}

Bitset reach_from(const DiGraph& d, VertexId source) {
  Bitset s(d.vertex_count());
  s.set(source);
  return reach_from(d, s, Bitset(d.vertex_count()), Bitset(d.edge_count()));
}

Bitset reach_to(const DiGraph& d, const Bitset& targets, const Bitset& blocked,
                const Bitset& removed_edges) {
  Bitset vis(d.vertex_count());
  std::deque<VertexId> q;
  for (int v : targets.indices())
    if (!blocked.test(v)) {
      vis.set(v);
      q.push_back(v);
    }
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    for (EdgeId e : d.in_edges(v)) {
      if (removed_edges.test(e)) continue;
      VertexId w = d.arc(e).tail;
      if (!blocked.test(w) && !vis.test(w)) {
        vis.set(w);
        q.push_back(w);
      }
    }
  }
  return vis;
}

std::vector<VertexId> topological_order(const DiGraph& d) {
  std::vector<int> indeg(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) indeg[v] = d.in_degree(v);
  std::deque<VertexId> q;
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (indeg[v] == 0) q.push_back(v);
  std::vector<VertexId> order;
  order.reserve(d.vertex_count());
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    order.push_back(v);
    for (EdgeId e : d.out_edges(v))
      if (--indeg[d.arc(e).head] == 0) q.push_back(d.arc(e).head);
  }
  if (static_cast<int>(order.size()) != d.vertex_count()) return {};
  return order;
}

bool is_acyclic(const DiGraph& d) {
  return static_cast<int>(topological_order(d).size()) == d.vertex_count() ||
         d.vertex_count() == 0;
}

}  // namespace dbw
