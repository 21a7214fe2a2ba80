#include "dbw/transforms.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace dbw {

namespace {

void check_edge(const DiGraph& d, EdgeId e, const char* who) {
  if (e < 0 || e >= d.edge_count())
    throw InvalidEdgeError(std::string(who) + ": edge id " + std::to_string(e) +
                           " out of range");
}

// Rebuild an edge list under a vertex renaming, collapsing duplicates onto
// their first occurrence and dropping self-loops, so the result is always
// simple. Fills edge_map with the surviving index of each input edge (-1
// when dropped or when skip says so).
std::vector<std::pair<VertexId, VertexId>> remap_edges(
    const DiGraph& d, const std::vector<VertexId>& vmap,
    std::vector<EdgeId>& edge_map, EdgeId skip = -1) {
  std::vector<std::pair<VertexId, VertexId>> out;
  std::set<std::pair<VertexId, VertexId>> merged;
  edge_map.assign(d.edge_count(), -1);
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    if (e == skip) continue;
    VertexId t = vmap[d.arc(e).tail];
    VertexId h = vmap[d.arc(e).head];
    if (t < 0 || h < 0) continue;
    if (t == h) continue;
    if (!merged.insert({t, h}).second) continue;
    edge_map[e] = static_cast<int>(out.size());
    out.emplace_back(t, h);
  }
  return out;
}

std::vector<std::string> remap_labels(const DiGraph& d,
                                      const std::vector<VertexId>& vmap,
                                      int new_count) {
  if (d.labels().empty()) return {};
  std::vector<std::string> out(new_count);
  // Later vertices never overwrite earlier ones, so a merge keeps the label
  // of the lowest input index mapping there.
  for (VertexId v = d.vertex_count() - 1; v >= 0; --v)
    if (vmap[v] >= 0) out[vmap[v]] = d.labels()[v];
  return out;
}

}  // namespace

IdentifyResult identify_source_sink(const DiGraph& d, VertexId x, VertexId y) {
  if (x < 0 || x >= d.vertex_count() || y < 0 || y >= d.vertex_count())
    throw Error("identify_source_sink: vertex id out of range");
  if (x == y)
    throw NotIdentifiableError("identify_source_sink: x and y must differ");
  SourceSink ss = sources_and_sinks(d);
  bool both_sources = ss.sources.test(x) && ss.sources.test(y);
  bool both_sinks = ss.sinks.test(x) && ss.sinks.test(y);
  if (!both_sources && !both_sinks)
    throw NotIdentifiableError(
        "identify_source_sink: vertices are not both sources nor both sinks");

  std::vector<VertexId> vmap(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) vmap[v] = v - (v > y);
  vmap[y] = x - (x > y);

  std::vector<EdgeId> edge_map;
  auto edges = remap_edges(d, vmap, edge_map);
  auto labels = remap_labels(d, vmap, d.vertex_count() - 1);
  // Two sources (or two sinks) can share no edge, so no self-loop can form.
  DiGraph g =
      DiGraph::build(d.vertex_count() - 1, edges, false, std::move(labels));
  return {std::move(g), std::move(vmap)};
}

SplitResult source_sink_split(const DiGraph& d) {
  int n = d.vertex_count();
  SourceSink ss = sources_and_sinks(d);

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(d.edge_count());
  for (const Arc& a : d.arcs()) edges.emplace_back(a.tail, a.head);

  std::vector<VertexId> origin(n);
  for (VertexId v = 0; v < n; ++v) origin[v] = v;

  std::vector<std::string> labels = d.labels();
  int next = n;
  for (VertexId v = 0; v < n; ++v) {
    bool src = ss.sources.test(v);
    if (!src && !ss.sinks.test(v)) continue;
    const std::vector<EdgeId>& inc = src ? d.out_edges(v) : d.in_edges(v);
    // inc is ascending by edge index; the original id serves inc[0].
    for (std::size_t j = 1; j < inc.size(); ++j) {
      VertexId copy = next++;
      origin.push_back(v);
      if (!labels.empty())
        labels.push_back(d.labels()[v] + "." + std::to_string(j + 1));
      if (src)
        edges[inc[j]].first = copy;
      else
        edges[inc[j]].second = copy;
    }
  }

  DiGraph g = DiGraph::build(next, edges, d.is_multigraph(), std::move(labels));
  return {std::move(g), std::move(origin)};
}

ContractResult contract_edge(const DiGraph& d, EdgeId e) {
  check_edge(d, e, "contract_edge");
  VertexId x = d.arc(e).tail, y = d.arc(e).head;

  std::vector<VertexId> vmap(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) vmap[v] = v - (v > y);
  vmap[y] = x - (x > y);

  std::vector<EdgeId> edge_map;
  auto edges = remap_edges(d, vmap, edge_map, e);
  auto labels = remap_labels(d, vmap, d.vertex_count() - 1);
  DiGraph g =
      DiGraph::build(d.vertex_count() - 1, edges, false, std::move(labels));
  return {std::move(g), std::move(vmap), std::move(edge_map)};
}

bool is_butterfly_edge(const DiGraph& d, EdgeId e) {
  check_edge(d, e, "is_butterfly_edge");
  const Arc& a = d.arc(e);
  return d.out_degree(a.tail) == 1 && d.in_degree(a.head) == 1;
}

bool is_two_contractible(const DiGraph& d, EdgeId e) {
  check_edge(d, e, "is_two_contractible");
  VertexId x = d.arc(e).tail, y = d.arc(e).head;

  Bitset v3(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (d.degree(v) >= 3) v3.set(v);

  if (v3.test(x) && v3.test(y)) return false;
  if (d.has_arc(y, x)) return true;

  Bitset none(d.vertex_count());
  Bitset removed = Bitset::of(d.edge_count(), {e});
  Bitset from_x =
      reach_from(d, Bitset::of(d.vertex_count(), {x}), none, removed);
  if (!from_x.intersects(v3)) return true;
  Bitset to_y = reach_to(d, Bitset::of(d.vertex_count(), {y}), none, removed);
  return !to_y.intersects(v3);
}

DeleteResult delete_edges(const DiGraph& d, const Bitset& edges) {
  if (edges.size() != d.edge_count())
    throw Error("delete_edges: edge set size mismatch");
  std::vector<std::pair<VertexId, VertexId>> kept;
  std::vector<EdgeId> edge_map(d.edge_count(), -1);
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    if (edges.test(e)) continue;
    edge_map[e] = static_cast<int>(kept.size());
    kept.emplace_back(d.arc(e).tail, d.arc(e).head);
  }
  std::vector<VertexId> vmap(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) vmap[v] = v;
  DiGraph g = DiGraph::build(d.vertex_count(), kept, d.is_multigraph(),
                             d.labels());
  return {std::move(g), std::move(vmap), std::move(edge_map)};
}

DeleteResult delete_vertices(const DiGraph& d, const Bitset& vertices) {
  if (vertices.size() != d.vertex_count())
    throw Error("delete_vertices: vertex set size mismatch");
  std::vector<VertexId> vmap(d.vertex_count(), -1);
  int next = 0;
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (!vertices.test(v)) vmap[v] = next++;

  std::vector<std::pair<VertexId, VertexId>> kept;
  std::vector<EdgeId> edge_map(d.edge_count(), -1);
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    VertexId t = vmap[d.arc(e).tail], h = vmap[d.arc(e).head];
    if (t < 0 || h < 0) continue;
    edge_map[e] = static_cast<int>(kept.size());
    kept.emplace_back(t, h);
  }
  auto labels = remap_labels(d, vmap, next);
  DiGraph g =
      DiGraph::build(next, kept, d.is_multigraph(), std::move(labels));
  return {std::move(g), std::move(vmap), std::move(edge_map)};
}

DeleteResult remove_isolated_vertices(const DiGraph& d) {
  Bitset iso(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (d.degree(v) == 0) iso.set(v);
  return delete_vertices(d, iso);
}

}  // namespace dbw
