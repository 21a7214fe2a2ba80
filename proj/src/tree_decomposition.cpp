#include "dbw/tree_decomposition.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace dbw {

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool bag_has(const std::vector<VertexId>& bag, VertexId v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

}  // namespace

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

bool validate_tree_decomposition(const UGraph& g, const TreeDecomposition& td,
                                 std::string* why) {
  int k = td.node_count();
  if (static_cast<int>(td.parent.size()) != k)
    return fail(why, "parent/bag count mismatch");
  if (k == 0) {
    if (g.vertex_count() > 0) return fail(why, "no bags but vertices exist");
    return true;
  }
  if (td.parent[0] != -1) return fail(why, "node 0 must be the root");
  for (int i = 1; i < k; ++i)
    if (td.parent[i] < 0 || td.parent[i] >= i)
      return fail(why, "parents must precede children");

  for (const auto& bag : td.bags) {
    if (!std::is_sorted(bag.begin(), bag.end()))
      return fail(why, "bag not sorted");
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      return fail(why, "bag has a duplicate");
    for (VertexId v : bag)
      if (v < 0 || v >= g.vertex_count())
        return fail(why, "bag vertex out of range");
  }

  std::vector<char> seen(g.vertex_count(), 0);
  for (const auto& bag : td.bags)
    for (VertexId v : bag) seen[v] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) return fail(why, "vertex " + std::to_string(v) + " uncovered");

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    bool ok = false;
    for (const auto& bag : td.bags)
      if (bag_has(bag, u) && bag_has(bag, v)) {
        ok = true;
        break;
      }
    if (!ok) return fail(why, "edge " + std::to_string(e) + " uncovered");
  }

  // A vertex's bags form a subtree iff its occurrence count exceeds the
  // number of tree edges joining two of its bags by exactly one.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int cnt = 0, links = 0;
    for (int i = 0; i < k; ++i) {
      if (!bag_has(td.bags[i], v)) continue;
      ++cnt;
      if (i > 0 && bag_has(td.bags[td.parent[i]], v)) ++links;
    }
    if (cnt > 0 && cnt - links != 1)
      return fail(why, "vertex " + std::to_string(v) + " bags disconnected");
  }
  return true;
}

TreeDecomposition branch_to_tree_decomposition(const LayoutTree& t,
                                               const UGraph& g) {
  if (t.ground_size != g.edge_count())
    throw GroundMismatchError("branch_to_tree_decomposition: layout covers " +
                              std::to_string(t.ground_size) + " elements, " +
                              "graph has " + std::to_string(g.edge_count()) +
                              " edges");

  TreeDecomposition td;
  if (g.edge_count() == 0) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      td.parent.push_back(v == 0 ? -1 : v - 1);
      td.bags.push_back({v});
    }
    return td;
  }

  std::string why;
  if (!validate_layout_tree(t, &why))
    throw Error("branch_to_tree_decomposition: invalid layout: " + why);

  // Orient the layout from node 0 and collect each child subtree's ground.
  std::vector<std::vector<std::pair<int, int>>> adj(t.node_count);
  for (int j = 0; j < static_cast<int>(t.tree_edges.size()); ++j) {
    auto [a, b] = t.tree_edges[j];
    adj[a].push_back({b, j});
    adj[b].push_back({a, j});
  }
  std::vector<int> order, parent(t.node_count, -1), parent_edge(t.node_count, -1);
  std::vector<char> vis(t.node_count, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (auto [w, j] : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        parent[w] = v;
        parent_edge[w] = j;
        q.push(w);
      }
  }

  std::vector<Bitset> sub(t.node_count, Bitset(t.ground_size));
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    int v = order[i];
    if (t.leaf_map[v] >= 0) sub[v].set(t.leaf_map[v]);
    if (v != 0) sub[parent[v]] |= sub[v];
  }

  UbwCut cut(g);
  std::vector<Bitset> middle(t.tree_edges.size());
  for (int v : order)
    if (v != 0) middle[parent_edge[v]] = cut.boundary(sub[v]);

  std::vector<int> new_id(t.node_count, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) new_id[order[i]] = i;

  td.parent.assign(t.node_count, -1);
  td.bags.assign(t.node_count, {});
  for (int v : order) {
    int i = new_id[v];
    td.parent[i] = v == 0 ? -1 : new_id[parent[v]];
    if (t.leaf_map[v] >= 0) {
      auto [x, y] = g.edge(t.leaf_map[v]);
      td.bags[i] = {std::min(x, y), std::max(x, y)};
    } else {
      Bitset u(g.vertex_count());
      for (auto [w, j] : adj[v]) {
        (void)w;
        u |= middle[j];
      }
      td.bags[i] = u.indices();
    }
  }
  // Leaves also sit under their incident edge's middle set, but endpoints
  // already cover it; internal unions are what the width bound is about.

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) {
      td.parent.push_back(0);
      td.bags.push_back({v});
    }
  return td;
}

int NiceDecomposition::width() const {
  int w = -1;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
  return w;
}

namespace {

struct NiceBuilder {
  const UGraph& g;
  const TreeDecomposition& td;
  std::vector<NiceNode> nodes;
  std::vector<char> edge_done;
  std::vector<std::vector<int>> children;

  explicit NiceBuilder(const UGraph& gg, const TreeDecomposition& t)
      : g(gg), td(t), edge_done(gg.edge_count(), 0), children(t.node_count()) {
    for (int i = 1; i < t.node_count(); ++i)
      children[t.parent[i]].push_back(i);
  }

  int emit(NiceNode n) {
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  // Every edge goes in just below the forget of whichever endpoint is
  // forgotten first; at that moment the other endpoint is still in the bag.
  int introduce_pending_edges(int cur, std::vector<VertexId>& bag, VertexId x) {
    for (EdgeId e : g.incident(x)) {
      if (edge_done[e]) continue;
      auto [u, v] = g.edge(e);
      VertexId other = u == x ? v : u;
      if (!bag_has(bag, other)) continue;
      edge_done[e] = 1;
      cur = emit({NodeKind::IntroduceEdge, -1, e, bag, cur, -1});
    }
    return cur;
  }

  int morph(int cur, std::vector<VertexId> bag,
            const std::vector<VertexId>& target) {
    for (VertexId x : std::vector<VertexId>(bag)) {
      if (bag_has(target, x)) continue;
      cur = introduce_pending_edges(cur, bag, x);
      bag.erase(std::find(bag.begin(), bag.end(), x));
      cur = emit({NodeKind::Forget, x, -1, bag, cur, -1});
    }
    for (VertexId x : target) {
      if (bag_has(bag, x)) continue;
      bag.insert(std::upper_bound(bag.begin(), bag.end(), x), x);
      cur = emit({NodeKind::Introduce, x, -1, bag, cur, -1});
    }
    return cur;
  }

  int build(int t_node) {
    const std::vector<VertexId>& bag = td.bags[t_node];
    if (children[t_node].empty()) {
      int cur = emit({NodeKind::Leaf, -1, -1, {}, -1, -1});
      std::vector<VertexId> b;
      for (VertexId v : bag) {
        b.push_back(v);
        cur = emit({NodeKind::Introduce, v, -1, b, cur, -1});
      }
      return cur;
    }
    int acc = -1;
    for (int kid : children[t_node]) {
      int top = morph(build(kid), td.bags[kid], bag);
      acc = acc < 0 ? top : emit({NodeKind::Join, -1, -1, bag, acc, top});
    }
    return acc;
  }
};

}  // namespace

NiceDecomposition make_nice(const UGraph& g, const TreeDecomposition& td) {
  NiceDecomposition nd;
  if (td.node_count() == 0) {
    nd.nodes.push_back({NodeKind::Leaf, -1, -1, {}, -1, -1});
    nd.root = 0;
    return nd;
  }
  NiceBuilder b(g, td);
  int top = b.build(0);
  top = b.morph(top, td.bags[0], {});
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!b.edge_done[e])
      throw Error("make_nice: edge " + std::to_string(e) +
                  " has no slot; the decomposition is invalid");
  nd.nodes = std::move(b.nodes);
  nd.root = top;
  return nd;
}

bool validate_nice_decomposition(const UGraph& g, const NiceDecomposition& nd,
                                 std::string* why) {
  int k = static_cast<int>(nd.nodes.size());
  if (k == 0) return fail(why, "no nodes");
  if (nd.root != k - 1) return fail(why, "root must be the last node");
  if (!nd.nodes[nd.root].bag.empty()) return fail(why, "root bag not empty");

  std::vector<int> ref(k, 0);
  std::vector<int> forgotten(g.vertex_count(), 0);
  std::vector<int> introduced_edge(g.edge_count(), 0);

  for (int i = 0; i < k; ++i) {
    const NiceNode& n = nd.nodes[i];
    if (!std::is_sorted(n.bag.begin(), n.bag.end()) ||
        std::adjacent_find(n.bag.begin(), n.bag.end()) != n.bag.end())
      return fail(why, "bag not a sorted set at node " + std::to_string(i));
    for (VertexId v : n.bag)
      if (v < 0 || v >= g.vertex_count())
        return fail(why, "bag vertex out of range");
    auto child_ok = [&](int c) { return c >= 0 && c < i; };
    switch (n.kind) {
      case NodeKind::Leaf:
        if (n.child0 != -1 || n.child1 != -1 || !n.bag.empty())
          return fail(why, "bad leaf at node " + std::to_string(i));
        break;
      case NodeKind::Introduce: {
        if (!child_ok(n.child0) || n.child1 != -1)
          return fail(why, "bad introduce child");
        const auto& cb = nd.nodes[n.child0].bag;
        if (bag_has(cb, n.vertex) || !bag_has(n.bag, n.vertex) ||
            n.bag.size() != cb.size() + 1 ||
            !std::includes(n.bag.begin(), n.bag.end(), cb.begin(), cb.end()))
          return fail(why, "introduce does not add exactly its vertex");
        ++ref[n.child0];
        break;
      }
      case NodeKind::Forget: {
        if (!child_ok(n.child0) || n.child1 != -1)
          return fail(why, "bad forget child");
        const auto& cb = nd.nodes[n.child0].bag;
        if (!bag_has(cb, n.vertex) || bag_has(n.bag, n.vertex) ||
            cb.size() != n.bag.size() + 1 ||
            !std::includes(cb.begin(), cb.end(), n.bag.begin(), n.bag.end()))
          return fail(why, "forget does not drop exactly its vertex");
        ++forgotten[n.vertex];
        ++ref[n.child0];
        break;
      }
      case NodeKind::IntroduceEdge: {
        if (!child_ok(n.child0) || n.child1 != -1)
          return fail(why, "bad edge-introduce child");
        if (n.edge < 0 || n.edge >= g.edge_count())
          return fail(why, "edge id out of range");
        if (nd.nodes[n.child0].bag != n.bag)
          return fail(why, "edge-introduce changes the bag");
        auto [u, v] = g.edge(n.edge);
        if (!bag_has(n.bag, u) || !bag_has(n.bag, v))
          return fail(why, "edge endpoints missing from the bag");
        ++introduced_edge[n.edge];
        ++ref[n.child0];
        break;
      }
      case NodeKind::Join:
        if (!child_ok(n.child0) || !child_ok(n.child1))
          return fail(why, "bad join children");
        if (nd.nodes[n.child0].bag != n.bag || nd.nodes[n.child1].bag != n.bag)
          return fail(why, "join bags disagree");
        ++ref[n.child0];
        ++ref[n.child1];
        break;
    }
  }
  for (int i = 0; i < k - 1; ++i)
    if (ref[i] != 1) return fail(why, "node " + std::to_string(i) +
                                          " referenced " +
                                          std::to_string(ref[i]) + " times");
  if (ref[k - 1] != 0) return fail(why, "root has a parent");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (forgotten[v] != 1)
      return fail(why, "vertex " + std::to_string(v) + " forgotten " +
                           std::to_string(forgotten[v]) + " times");
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (introduced_edge[e] != 1)
      return fail(why, "edge " + std::to_string(e) + " introduced " +
                           std::to_string(introduced_edge[e]) + " times");
  return true;
}

}  // namespace dbw
