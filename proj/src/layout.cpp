#include "dbw/layout.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <functional>
#include <map>
#include <thread>

#include "dbw/rand_util.hpp"
#include "dbw/transforms.hpp"

namespace dbw {

bool validate_layout_tree(const LayoutTree& t, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (t.leaf_map.size() != static_cast<std::size_t>(t.node_count))
    return fail("leaf_map size mismatch");
  if (t.node_count == 0)
    return t.ground_size == 0 && t.tree_edges.empty()
               ? true
               : fail("empty tree with nonempty ground");
  if (t.tree_edges.size() != static_cast<std::size_t>(t.node_count) - 1)
    return fail("edge count is not node_count - 1");

  std::vector<int> deg(t.node_count, 0);
  std::map<std::pair<int, int>, int> seen;
  for (auto [a, b] : t.tree_edges) {
    if (a < 0 || a >= t.node_count || b < 0 || b >= t.node_count || a == b)
      return fail("bad tree edge");
    auto key = std::minmax(a, b);
    if (seen[{key.first, key.second}]++) return fail("duplicate tree edge");
    ++deg[a];
    ++deg[b];
  }

  // connectivity (edge count already matches a tree)
  std::vector<char> vis(t.node_count, 0);
  std::deque<int> q{0};
  vis[0] = 1;
  std::vector<std::vector<int>> adj(t.node_count);
  for (auto [a, b] : t.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int reached = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    ++reached;
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        q.push_back(w);
      }
  }
  if (reached != t.node_count) return fail("tree is disconnected");

  std::vector<char> used(std::max(t.ground_size, 0), 0);
  int leaves = 0;
  for (int v = 0; v < t.node_count; ++v) {
    int elem = t.leaf_map[v];
    if (elem >= 0) {
      ++leaves;
      if (elem >= t.ground_size) return fail("leaf element out of range");
      if (used[elem]++) return fail("duplicate leaf element");
      int want = t.ground_size >= 2 ? 1 : 0;
      if (deg[v] != want) return fail("leaf degree violation");
    } else {
      if (deg[v] != 3) return fail("internal node degree is not 3");
    }
  }
  if (leaves != t.ground_size) return fail("leaf count differs from ground");
  return true;
}

int DbwCut::evaluate(const Bitset& side) const {
  int n = d_.vertex_count();
  std::vector<std::uint8_t> flag(n, 0);  // 1 in-out(side),2 in-in,4 out-out,8 out-in
  for (EdgeId e = 0; e < d_.edge_count(); ++e) {
    const Arc& a = d_.arc(e);
    if (side.test(e)) {
      flag[a.head] |= 2;  // in-edge inside
      flag[a.tail] |= 4;  // out-edge inside
    } else {
      flag[a.head] |= 1;  // in-edge outside
      flag[a.tail] |= 8;  // out-edge outside
    }
  }
  int count = 0;
  for (int v = 0; v < n; ++v) {
    bool sep_side = (flag[v] & 1) && (flag[v] & 4);  // in outside, out inside
    bool sep_rest = (flag[v] & 2) && (flag[v] & 8);  // in inside, out outside
    if (sep_side || sep_rest) ++count;
  }
  return count;
}

int UbwCut::evaluate(const Bitset& side) const { return boundary(side).count(); }

Bitset UbwCut::boundary(const Bitset& side) const {
  int n = g_.vertex_count();
  std::vector<std::uint8_t> flag(n, 0);
  for (EdgeId e = 0; e < g_.edge_count(); ++e) {
    auto [a, b] = g_.edge(e);
    std::uint8_t bit = side.test(e) ? 1 : 2;
    flag[a] |= bit;
    flag[b] |= bit;
  }
  Bitset out(n);
  for (int v = 0; v < n; ++v)
    if (flag[v] == 3) out.set(v);
  return out;
}

int BicutCut::evaluate(const Bitset& side) const {
  return bicut_value(d_, side);
}

int MemoizedCut::evaluate(const Bitset& side) const {
  Bitset comp = ~side;
  const Bitset& key = comp.lex_less(side) ? comp : side;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  int v = inner_.evaluate(key);
  memo_.emplace(key, v);
  return v;
}

WidthReport layout_width(const LayoutTree& t, const CutFunction& f) {
  if (t.ground_size != f.ground_size())
    throw GroundMismatchError("layout ground size " +
                              std::to_string(t.ground_size) +
                              " does not match cut ground size " +
                              std::to_string(f.ground_size()));
  std::string why;
  if (!validate_layout_tree(t, &why)) throw Error("invalid layout tree: " + why);

  WidthReport rep;
  rep.per_edge_orders.assign(t.tree_edges.size(), 0);
  if (t.tree_edges.empty()) return rep;

  std::vector<std::vector<std::pair<int, int>>> adj(t.node_count);
  for (std::size_t i = 0; i < t.tree_edges.size(); ++i) {
    auto [a, b] = t.tree_edges[i];
    adj[a].push_back({b, static_cast<int>(i)});
    adj[b].push_back({a, static_cast<int>(i)});
  }

  // root at node 0; each edge is scored on its lower subtree's leaf set
  std::vector<int> parent(t.node_count, -1), order;
  order.reserve(t.node_count);
  std::deque<int> q{0};
  parent[0] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    order.push_back(v);
    for (auto [w, idx] : adj[v])
      if (parent[w] < 0) {
        parent[w] = v;
        q.push_back(w);
      }
  }

  std::vector<Bitset> sub(t.node_count, Bitset(t.ground_size));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (t.leaf_map[v] >= 0) sub[v].set(t.leaf_map[v]);
    if (v != 0) sub[parent[v]] |= sub[v];
  }

  for (int v = 1; v < t.node_count; ++v) {
    for (auto [w, idx] : adj[v]) {
      if (w == parent[v]) {
        rep.per_edge_orders[idx] = f.evaluate(sub[v]);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < rep.per_edge_orders.size(); ++i)
    if (rep.per_edge_orders[i] > rep.width) {
      rep.width = rep.per_edge_orders[i];
    }
  for (std::size_t i = 0; i < rep.per_edge_orders.size(); ++i)
    if (rep.per_edge_orders[i] == rep.width) {
      rep.argmax_edge = static_cast<int>(i);
      break;
    }
  return rep;
}

namespace {

bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  std::uint32_t d = a ^ b;
  if (!d) return false;
  return a & (d & (~d + 1));
}

std::vector<std::int32_t> cut_table(const CutFunction& f, int n, int threads) {
  std::size_t size = std::size_t{1} << n;
  std::vector<std::int32_t> table(size);
  auto fill = [&](std::size_t lo, std::size_t hi) {
    Bitset side(n);
    for (std::size_t m = lo; m < hi; ++m) {
      for (int i = 0; i < n; ++i) side.assign(i, (m >> i) & 1);
      table[m] = f.evaluate(side);
    }
  };
  if (threads <= 1) {
    fill(0, size);
  } else {
    int t = std::min<int>(threads, 64);
    std::vector<std::thread> pool;
    std::size_t chunk = (size + t - 1) / t;
    for (int i = 0; i < t; ++i) {
      std::size_t lo = std::min(size, i * chunk);
      std::size_t hi = std::min(size, lo + chunk);
      if (lo < hi) pool.emplace_back(fill, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return table;
}

int tree_from_choice(LayoutTree& t, std::uint32_t mask,
                     const std::vector<std::uint32_t>& choice) {
  if (__builtin_popcount(mask) == 1) return t.add_leaf(__builtin_ctz(mask));
  std::uint32_t a = choice[mask];
  int left = tree_from_choice(t, a, choice);
  int right = tree_from_choice(t, mask ^ a, choice);
  int node = t.add_internal();
  t.add_edge(node, left);
  t.add_edge(node, right);
  return node;
}

}  // namespace

WidthResult exact_width(const CutFunction& f, const ExactOptions& opt) {
  int n = f.ground_size();
  if (n > opt.ground_cap || n > 30)
    throw GroundTooLargeError("ground size " + std::to_string(n) +
                              " exceeds exact cap " +
                              std::to_string(std::min(opt.ground_cap, 30)));
  WidthResult res;
  res.tree.ground_size = n;
  if (n == 0) return res;
  if (n == 1) {
    res.tree.add_leaf(0);
    return res;
  }

  std::vector<std::int32_t> table = cut_table(f, n, opt.threads);
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::int32_t> best(full + 1, 0);
  std::vector<std::uint32_t> choice(full + 1, 0);

  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (__builtin_popcount(mask) == 1) {
      best[mask] = table[mask];
      continue;
    }
    std::uint32_t low = mask & (~mask + 1);
    std::int32_t best_val = INT32_MAX;
    std::uint32_t best_sub = 0;
    for (std::uint32_t sub = (mask - 1) & mask; sub;
         sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;
      std::int32_t v = std::max(best[sub], best[mask ^ sub]);
      if (v < best_val || (v == best_val && mask_lex_less(sub, best_sub))) {
        best_val = v;
        best_sub = sub;
      }
    }
    best[mask] = std::max(table[mask], best_val);
    choice[mask] = best_sub;
  }

  std::int32_t root_val = INT32_MAX;
  std::uint32_t root_sub = 0;
  for (std::uint32_t sub = (full - 1) & full; sub; sub = (sub - 1) & full) {
    if (!(sub & 1u)) continue;
    std::int32_t v = std::max(best[sub], best[full ^ sub]);
    if (v < root_val || (v == root_val && mask_lex_less(sub, root_sub))) {
      root_val = v;
      root_sub = sub;
    }
  }

  res.width = root_val;
  int left = tree_from_choice(res.tree, root_sub, choice);
  int right = tree_from_choice(res.tree, full ^ root_sub, choice);
  res.tree.add_edge(left, right);
  return res;
}

namespace {

int enumerate_eval(const std::vector<std::pair<int, int>>& edges, int leaves,
                   int node_count, const std::vector<std::int32_t>& table) {
  std::vector<std::vector<int>> adj(node_count);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // root at leaf 0; subtree mask per node, score every (parent,child) edge
  std::vector<std::uint32_t> mask(node_count, 0);
  std::vector<int> parent(node_count, -1), order;
  order.reserve(node_count);
  std::deque<int> q{0};
  parent[0] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    order.push_back(v);
    for (int w : adj[v])
      if (parent[w] < 0) {
        parent[w] = v;
        q.push_back(w);
      }
  }
  int width = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (v < leaves) mask[v] = std::uint32_t{1} << v;
    if (v != 0) {
      width = std::max(width, static_cast<int>(table[mask[v]]));
      mask[parent[v]] |= mask[v];
    }
  }
  return width;
}

}  // namespace

int enumerate_width(const CutFunction& f, int ground_cap) {
  int n = f.ground_size();
  if (n > ground_cap)
    throw GroundTooLargeError("ground size " + std::to_string(n) +
                              " exceeds enumeration cap " +
                              std::to_string(ground_cap));
  if (n <= 1) return 0;
  std::vector<std::int32_t> table = cut_table(f, n, 1);
  if (n == 2) return table[1];

  std::vector<std::pair<int, int>> edges{{n, 0}, {n, 1}, {n, 2}};
  int next_node = n + 1;
  int best = INT_MAX;
  std::function<void(int)> insert_leaf = [&](int k) {
    if (k == n) {
      best = std::min(best, enumerate_eval(edges, n, next_node, table));
      return;
    }
    int mid = next_node++;
    std::size_t count = edges.size();
    for (std::size_t i = 0; i < count; ++i) {
      auto old = edges[i];
      edges[i] = {old.first, mid};
      edges.push_back({mid, old.second});
      edges.push_back({mid, k});
      insert_leaf(k + 1);
      edges.pop_back();
      edges.pop_back();
      edges[i] = old;
    }
    --next_node;
  };
  insert_leaf(3);
  return best;
}

namespace {

struct SplitCost {
  int worse;
  int total;
  bool operator<(const SplitCost& o) const {
    return worse != o.worse ? worse < o.worse : total < o.total;
  }
};

SplitCost split_cost(const CutFunction& f, const Bitset& a, const Bitset& b) {
  int fa = f.evaluate(a);
  int fb = f.evaluate(b);
  return {std::max(fa, fb), fa + fb};
}

// partition elems into two nonempty halves, then greedily move single
// elements while the pair (max cut, cut sum) improves
void greedy_split(const CutFunction& f, int ground,
                  const std::vector<int>& elems, std::mt19937_64& rng,
                  std::vector<int>& out_a, std::vector<int>& out_b) {
  std::vector<int> shuffled = elems;
  rng_shuffle(rng, shuffled);
  std::size_t half = shuffled.size() / 2;
  Bitset a(ground), b(ground);
  for (std::size_t i = 0; i < shuffled.size(); ++i)
    (i < half ? a : b).set(shuffled[i]);

  SplitCost cost = split_cost(f, a, b);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int e : elems) {
      Bitset& from = a.test(e) ? a : b;
      Bitset& to = a.test(e) ? b : a;
      if (from.count() <= 1) continue;
      from.reset(e);
      to.set(e);
      SplitCost next = split_cost(f, a, b);
      if (next < cost) {
        cost = next;
        moved = true;
      } else {
        to.reset(e);
        from.set(e);
      }
    }
  }
  out_a = a.indices();
  out_b = b.indices();
}

int build_subtree(const CutFunction& f, int ground, const std::vector<int>& elems,
                  std::mt19937_64& rng, LayoutTree& t) {
  if (elems.size() == 1) return t.add_leaf(elems[0]);
  std::vector<int> a, b;
  greedy_split(f, ground, elems, rng, a, b);
  int left = build_subtree(f, ground, a, rng, t);
  int right = build_subtree(f, ground, b, rng, t);
  int node = t.add_internal();
  t.add_edge(node, left);
  t.add_edge(node, right);
  return node;
}

}  // namespace

WidthResult heuristic_width(const CutFunction& f, std::uint64_t seed) {
  int n = f.ground_size();
  WidthResult res;
  res.tree.ground_size = n;
  if (n == 0) return res;
  if (n == 1) {
    res.tree.add_leaf(0);
    return res;
  }
  MemoizedCut memo(f);
  std::mt19937_64 rng(seed);

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::vector<int> a, b;
  greedy_split(memo, n, all, rng, a, b);
  int left = build_subtree(memo, n, a, rng, res.tree);
  int right = build_subtree(memo, n, b, rng, res.tree);
  res.tree.add_edge(left, right);

  std::vector<int> leaf_nodes;
  for (int v = 0; v < res.tree.node_count; ++v)
    if (res.tree.leaf_map[v] >= 0) leaf_nodes.push_back(v);

  int width = layout_width(res.tree, memo).width;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < leaf_nodes.size() && !improved; ++i) {
      for (std::size_t j = i + 1; j < leaf_nodes.size() && !improved; ++j) {
        std::swap(res.tree.leaf_map[leaf_nodes[i]],
                  res.tree.leaf_map[leaf_nodes[j]]);
        int w = layout_width(res.tree, memo).width;
        if (w < width) {
          width = w;
          improved = true;
        } else {
          std::swap(res.tree.leaf_map[leaf_nodes[i]],
                    res.tree.leaf_map[leaf_nodes[j]]);
        }
      }
    }
  }
  res.width = width;
  return res;
}

WidthResult directed_branch_width(const DiGraph& d, WidthMode mode,
                                  const WidthOptions& opt) {
  switch (mode) {
    case WidthMode::Exact:
      return exact_width(DbwCut(d), {opt.exact_cap, opt.threads});
    case WidthMode::Heuristic:
      return heuristic_width(DbwCut(d), opt.seed);
    case WidthMode::ViaSplit: {
      SplitResult split = source_sink_split(d);
      WidthResult r = exact_width(UbwCut(underlying(split.graph)),
                                  {opt.exact_cap, opt.threads});
      // edge i of the split is edge i of d, so the tree transfers as-is
      return r;
    }
  }
  throw Error("unknown width mode");
}

WidthResult bi_cut_rank_width(const DiGraph& d, WidthMode mode,
                              const WidthOptions& opt) {
  switch (mode) {
    case WidthMode::Exact:
      return exact_width(BicutCut(d), {opt.exact_cap, opt.threads});
    case WidthMode::Heuristic:
      return heuristic_width(BicutCut(d), opt.seed);
    case WidthMode::ViaSplit:
      throw Error("via-split applies to directed branch-width only");
  }
  throw Error("unknown width mode");
}

WidthResult branch_width(const UGraph& g, WidthMode mode,
                         const WidthOptions& opt) {
  switch (mode) {
    case WidthMode::Exact:
      return exact_width(UbwCut(g), {opt.exact_cap, opt.threads});
    case WidthMode::Heuristic:
      return heuristic_width(UbwCut(g), opt.seed);
    case WidthMode::ViaSplit:
      throw Error("via-split applies to directed branch-width only");
  }
  throw Error("unknown width mode");
}

}  // namespace dbw
