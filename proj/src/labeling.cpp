#include "dbw/labeling.hpp"

#include <map>

namespace dbw {

namespace {

Bitset out_neighbors_in(const DiGraph& d, VertexId v, const Bitset& side) {
  Bitset r(d.vertex_count());
  for (EdgeId e : d.out_edges(v))
    if (side.test(d.arc(e).head)) r.set(d.arc(e).head);
  return r;
}

Bitset in_neighbors_in(const DiGraph& d, VertexId v, const Bitset& side) {
  Bitset r(d.vertex_count());
  for (EdgeId e : d.in_edges(v))
    if (side.test(d.arc(e).tail)) r.set(d.arc(e).tail);
  return r;
}

template <typename NeighborFn>
bool groups_agree(const Bitset& side, const Labeling& lab, NeighborFn nb) {
  std::map<int, Bitset> rep;
  for (int v : side.indices()) {
    Bitset n = nb(v);
    auto [it, fresh] = rep.try_emplace(lab.label_of[v], n);
    if (!fresh && it->second != n) return false;
  }
  return true;
}

}  // namespace

bool is_consistent(const DiGraph& d, const Bitset& side_a, const Bitset& side_b,
                   const Labeling& lab_a, const Labeling& lab_b) {
  if (side_a.intersects(side_b))
    throw Error("is_consistent: sides are not disjoint");
  if (!side_a.is_subset_of(lab_a.domain) || !side_b.is_subset_of(lab_b.domain))
    throw Error("is_consistent: labeling does not cover its side");
  return groups_agree(side_a, lab_a,
                      [&](VertexId v) { return out_neighbors_in(d, v, side_b); }) &&
         groups_agree(side_b, lab_b,
                      [&](VertexId v) { return in_neighbors_in(d, v, side_a); });
}

SeparatorLabeling labeling_from_separator(const DiGraph& d,
                                          const Bitset& edge_side) {
  SeparatorLabeling out;
  Bitset rest = ~edge_side;
  out.separator = vertex_separator(d, edge_side).indices();  // ascending

  std::vector<int> sep_index(d.vertex_count(), 0);  // 1-based label, 0 = none
  for (std::size_t i = 0; i < out.separator.size(); ++i)
    sep_index[out.separator[i]] = static_cast<int>(i) + 1;

  int label_count = static_cast<int>(out.separator.size()) + 1;
  out.on_rest = {rest, std::vector<int>(d.edge_count(), 0), label_count};
  out.on_side = {edge_side, std::vector<int>(d.edge_count(), 0), label_count};

  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    const Arc& a = d.arc(e);
    if (edge_side.test(e))
      out.on_side.label_of[e] = sep_index[a.tail];
    else
      out.on_rest.label_of[e] = sep_index[a.head];
  }
  return out;
}

}  // namespace dbw
