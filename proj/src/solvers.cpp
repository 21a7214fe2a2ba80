#include "dbw/solvers.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>

#include "dbw/transforms.hpp"

namespace dbw {

namespace {

NiceDecomposition nice_for(const UGraph& g, const SolveOptions& opt) {
  LayoutTree t;
  if (g.edge_count() <= opt.exact_cap) {
    ExactOptions eo;
    eo.ground_cap = opt.exact_cap;
    t = exact_width(UbwCut(g), eo).tree;
  } else {
    t = heuristic_width(UbwCut(g), opt.seed).tree;
  }
  TreeDecomposition td = branch_to_tree_decomposition(t, g);
  return make_nice(g, td);
}

int bag_pos(const std::vector<VertexId>& bag, VertexId v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) -
                          bag.begin());
}

unsigned drop_bit(unsigned m, int p) {
  return (m & ((1u << p) - 1)) | ((m >> (p + 1)) << p);
}
unsigned insert_bit(unsigned m, int p, unsigned b) {
  return (m & ((1u << p) - 1)) | (b << p) | ((m >> p) << (p + 1));
}

// --- D-Max-Cut tables: per coloring of the bag (set bit = inside X), the
// best count of introduced arcs crossing from outside to inside. ---

std::vector<std::vector<int>> maxcut_tables(const DiGraph& h,
                                            const NiceDecomposition& nd,
                                            const SolveOptions& opt) {
  std::uint64_t cells = 0;
  for (const auto& n : nd.nodes) {
    if (static_cast<int>(n.bag.size()) > opt.max_bag)
      throw TooLargeError("d_max_cut: bag size " +
                          std::to_string(n.bag.size()) + " exceeds the cap " +
                          std::to_string(opt.max_bag));
    cells += 1ull << n.bag.size();
    if (cells > (1ull << 24))
      throw TooLargeError("d_max_cut: DP tables exceed the memory budget");
  }
  std::vector<std::vector<int>> tab(nd.nodes.size());
  for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
    const NiceNode& n = nd.nodes[i];
    auto& t = tab[i];
    t.assign(std::size_t{1} << n.bag.size(), 0);
    switch (n.kind) {
      case NodeKind::Leaf:
        break;
      case NodeKind::Introduce: {
        int p = bag_pos(n.bag, n.vertex);
        const auto& c = tab[n.child0];
        for (unsigned m = 0; m < t.size(); ++m) t[m] = c[drop_bit(m, p)];
        break;
      }
      case NodeKind::Forget: {
        int p = bag_pos(nd.nodes[n.child0].bag, n.vertex);
        const auto& c = tab[n.child0];
        for (unsigned m = 0; m < t.size(); ++m)
          t[m] = std::max(c[insert_bit(m, p, 0)], c[insert_bit(m, p, 1)]);
        break;
      }
      case NodeKind::IntroduceEdge: {
        const Arc& a = h.arc(n.edge);
        int pt = bag_pos(n.bag, a.tail), ph = bag_pos(n.bag, a.head);
        const auto& c = tab[n.child0];
        for (unsigned m = 0; m < t.size(); ++m)
          t[m] = c[m] + (((m >> pt) & 1u) == 0 && ((m >> ph) & 1u) == 1);
        break;
      }
      case NodeKind::Join: {
        const auto& l = tab[n.child0];
        const auto& r = tab[n.child1];
        for (unsigned m = 0; m < t.size(); ++m) t[m] = l[m] + r[m];
        break;
      }
    }
  }
  return tab;
}

void maxcut_traceback(const NiceDecomposition& nd,
                      const std::vector<std::vector<int>>& tab, int node,
                      unsigned mask, std::vector<int>& color) {
  const NiceNode& n = nd.nodes[node];
  switch (n.kind) {
    case NodeKind::Leaf:
      return;
    case NodeKind::Introduce: {
      int p = bag_pos(n.bag, n.vertex);
      color[n.vertex] = (mask >> p) & 1u;
      maxcut_traceback(nd, tab, n.child0, drop_bit(mask, p), color);
      return;
    }
    case NodeKind::Forget: {
      int p = bag_pos(nd.nodes[n.child0].bag, n.vertex);
      unsigned b =
          tab[n.child0][insert_bit(mask, p, 0)] == tab[node][mask] ? 0 : 1;
      color[n.vertex] = static_cast<int>(b);
      maxcut_traceback(nd, tab, n.child0, insert_bit(mask, p, b), color);
      return;
    }
    case NodeKind::IntroduceEdge:
      maxcut_traceback(nd, tab, n.child0, mask, color);
      return;
    case NodeKind::Join:
      maxcut_traceback(nd, tab, n.child0, mask, color);
      maxcut_traceback(nd, tab, n.child1, mask, color);
      return;
  }
}

}  // namespace

MaxCutResult d_max_cut(const DiGraph& d, const SolveOptions& opt) {
  SplitResult sp = source_sink_split(d);
  const DiGraph& h = sp.graph;
  UGraph u = underlying(h);
  NiceDecomposition nd = nice_for(u, opt);
  auto tab = maxcut_tables(h, nd, opt);
  std::vector<int> color(h.vertex_count(), 0);
  maxcut_traceback(nd, tab, nd.root, 0, color);

  // Sources go outside and sinks inside; neither move can lose crossing
  // arcs, and afterwards every copy agrees with its originating vertex.
  SourceSink ss = sources_and_sinks(h);
  MaxCutResult res;
  res.side = Bitset(d.vertex_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    int side;
    if (h.degree(v) == 0)
      side = 0;
    else if (ss.sources.test(v))
      side = 0;
    else if (ss.sinks.test(v))
      side = 1;
    else
      side = color[v];
    if (side == 1) res.side.set(v);
  }
  res.value = edge_separator(d, res.side).count();
  return res;
}

int brute_force_max_cut(const DiGraph& d) {
  int n = d.vertex_count();
  if (n > 20) throw TooLargeError("brute_force_max_cut: more than 20 vertices");
  int best = 0;
  if (n == 0) return 0;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    int c = 0;
    for (const Arc& a : d.arcs())
      c += ((x >> a.tail) & 1u) == 0 && ((x >> a.head) & 1u) == 1;
    best = std::max(best, c);
  }
  return best;
}

// --- D-Hamilton-Path ---
//
// State per bag position: din, dout (path edges already attached below) and
// a partner code: the opposite end of this position's partial path (its own
// position when untouched, kCommitted when the opposite end is an already
// forgotten global endpoint, kNone when the position is path-interior). The
// trailing byte counts committed global endpoints; it may never pass 2.

namespace {

constexpr int kNone = 61;
constexpr int kCommitted = 62;

struct HamProv {
  int c0 = -1, c1 = -1;
  bool used = false;
};

struct HamLevel {
  std::vector<std::string> states;
  std::vector<HamProv> prov;
  std::unordered_map<std::string, int> index;

  void add(const std::string& s, const HamProv& p) {
    auto [it, fresh] = index.try_emplace(s, static_cast<int>(states.size()));
    (void)it;
    if (fresh) {
      states.push_back(s);
      prov.push_back(p);
    }
  }
};

inline int st_din(const std::string& s, int p) { return s[p] & 1; }
inline int st_dout(const std::string& s, int p) { return (s[p] >> 1) & 1; }
inline int st_code(const std::string& s, int p) {
  return static_cast<unsigned char>(s[p]) >> 2;
}
inline char mk_byte(int din, int dout, int code) {
  return static_cast<char>(din | (dout << 1) | (code << 2));
}
inline int st_k(const std::string& s) { return s.back(); }

}  // namespace

HamiltonResult d_hamilton_path(const DiGraph& d, const SolveOptions& opt) {
  HamiltonResult res;
  SourceSink ss = sources_and_sinks(d);
  if (ss.sources.count() >= 2 || ss.sinks.count() >= 2) return res;
  if (d.vertex_count() == 0) return res;

  UGraph u = underlying(d);
  NiceDecomposition nd = nice_for(u, opt);
  int cap = std::min(opt.max_bag, 58);
  for (const auto& n : nd.nodes)
    if (static_cast<int>(n.bag.size()) > cap)
      throw TooLargeError("d_hamilton_path: bag size " +
                          std::to_string(n.bag.size()) + " exceeds the cap");

  int nn = static_cast<int>(nd.nodes.size());
  std::vector<HamLevel> lv(nn);
  std::uint64_t total_states = 0;

  for (int i = 0; i < nn; ++i) {
    const NiceNode& n = nd.nodes[i];
    HamLevel& out = lv[i];
    switch (n.kind) {
      case NodeKind::Leaf:
        out.add(std::string(1, '\0'), {});
        break;

      case NodeKind::Introduce: {
        int p = bag_pos(n.bag, n.vertex);
        const HamLevel& c = lv[n.child0];
        for (int ci = 0; ci < static_cast<int>(c.states.size()); ++ci) {
          const std::string& cs = c.states[ci];
          int b = static_cast<int>(cs.size()) - 1;
          std::string s;
          s.reserve(b + 2);
          for (int q = 0; q <= b; ++q) {
            if (q == p) s.push_back(mk_byte(0, 0, p));
            if (q < b) {
              int code = st_code(cs, q);
              if (code < kNone && code >= p) ++code;
              s.push_back(mk_byte(st_din(cs, q), st_dout(cs, q), code));
            }
          }
          s.push_back(cs.back());
          out.add(s, {ci, -1, false});
        }
        break;
      }

      case NodeKind::Forget: {
        int p = bag_pos(nd.nodes[n.child0].bag, n.vertex);
        const HamLevel& c = lv[n.child0];
        for (int ci = 0; ci < static_cast<int>(c.states.size()); ++ci) {
          std::string work = c.states[ci];
          int b = static_cast<int>(work.size()) - 1;
          int din = st_din(work, p), dout = st_dout(work, p);
          int code = st_code(work, p);
          int k = st_k(work);
          if (din == 1 && dout == 1) {
            // interior vertex; nothing to commit
          } else if (din == 0 && dout == 0) {
            k += 2;  // a one-vertex path: both global endpoints at once
          } else {
            k += 1;
            if (code < kNone && code != p)
              work[code] =
                  mk_byte(st_din(work, code), st_dout(work, code), kCommitted);
          }
          if (k > 2) continue;
          std::string s;
          s.reserve(b);
          for (int q = 0; q < b; ++q) {
            if (q == p) continue;
            int cd = st_code(work, q);
            if (cd < kNone && cd > p) --cd;
            s.push_back(mk_byte(st_din(work, q), st_dout(work, q), cd));
          }
          s.push_back(static_cast<char>(k));
          out.add(s, {ci, -1, false});
        }
        break;
      }

      case NodeKind::IntroduceEdge: {
        const Arc& a = d.arc(n.edge);
        int pt = bag_pos(n.bag, a.tail), ph = bag_pos(n.bag, a.head);
        const HamLevel& c = lv[n.child0];
        for (int ci = 0; ci < static_cast<int>(c.states.size()); ++ci) {
          const std::string& cs = c.states[ci];
          out.add(cs, {ci, -1, false});  // leave the arc unused
          if (st_dout(cs, pt) != 0 || st_din(cs, ph) != 0) continue;
          int tin = st_din(cs, pt);
          int hout = st_dout(cs, ph);
          int A = tin == 0 ? pt : st_code(cs, pt);   // tail end of t's path
          int B = hout == 0 ? ph : st_code(cs, ph);  // head end of h's path
          if (A == ph) continue;  // same path: using it would close a cycle
          std::string s = cs;
          s[pt] = mk_byte(tin, 1, tin == 0 ? B : kNone);
          s[ph] = mk_byte(1, hout, hout == 0 ? A : kNone);
          if (A < kNone && A != pt)
            s[A] = mk_byte(st_din(s, A), st_dout(s, A), B);
          if (B < kNone && B != ph)
            s[B] = mk_byte(st_din(s, B), st_dout(s, B), A);
          out.add(s, {ci, -1, true});
        }
        break;
      }

      case NodeKind::Join: {
        const HamLevel& L = lv[n.child0];
        const HamLevel& R = lv[n.child1];
        int b = static_cast<int>(n.bag.size());
        if (static_cast<std::uint64_t>(L.states.size()) * R.states.size() >
            50'000'000)
          throw TooLargeError("d_hamilton_path: join blow-up");
        for (int li = 0; li < static_cast<int>(L.states.size()); ++li) {
          const std::string& ls = L.states[li];
          for (int ri = 0; ri < static_cast<int>(R.states.size()); ++ri) {
            const std::string& rs = R.states[ri];
            int k = st_k(ls) + st_k(rs);
            if (k > 2) continue;
            bool ok = true;
            for (int q = 0; q < b && ok; ++q)
              if (st_din(ls, q) + st_din(rs, q) > 1 ||
                  st_dout(ls, q) + st_dout(rs, q) > 1)
                ok = false;
            if (!ok) continue;

            // Entity graph: positions plus a fresh node per committed end;
            // each side's partial paths become arcs, merged paths are read
            // off; any arc left unwalked lies on a directed cycle.
            int cap_ent = 3 * b + 4;
            std::vector<int> out_to(cap_ent, -1), in_from(cap_ent, -1);
            int next_virtual = b;
            int arcs = 0;
            auto add_arc = [&](int from, int to) {
              if (out_to[from] != -1 || in_from[to] != -1) {
                ok = false;
                return;
              }
              out_to[from] = to;
              in_from[to] = from;
              ++arcs;
            };
            auto side_arcs = [&](const std::string& s) {
              for (int q = 0; q < b && ok; ++q) {
                int din = st_din(s, q), dout = st_dout(s, q);
                int code = st_code(s, q);
                if (din == 0 && dout == 1)
                  add_arc(q, code == kCommitted ? next_virtual++ : code);
                else if (din == 1 && dout == 0 && code == kCommitted)
                  add_arc(next_virtual++, q);
              }
            };
            side_arcs(ls);
            side_arcs(rs);
            if (!ok) continue;

            std::string s(b, '\0');
            for (int q = 0; q < b; ++q) {
              int din = st_din(ls, q) + st_din(rs, q);
              int dout = st_dout(ls, q) + st_dout(rs, q);
              int code = din == 0 && dout == 0 ? q : kNone;
              s[q] = mk_byte(din, dout, code);
            }
            int walked = 0;
            for (int start = 0; start < next_virtual; ++start) {
              if (in_from[start] != -1 || out_to[start] == -1) continue;
              int cur = start;
              while (out_to[cur] != -1) {
                cur = out_to[cur];
                ++walked;
              }
              if (start < b)
                s[start] = mk_byte(st_din(s, start), st_dout(s, start),
                                   cur < b ? cur : kCommitted);
              if (cur < b)
                s[cur] = mk_byte(st_din(s, cur), st_dout(s, cur),
                                 start < b ? start : kCommitted);
            }
            if (walked != arcs) continue;  // a directed cycle survived
            s.push_back(static_cast<char>(k));
            out.add(s, {li, ri, false});
          }
        }
        break;
      }
    }
    total_states += out.states.size();
    if (total_states > 4'000'000)
      throw TooLargeError("d_hamilton_path: state space exceeds the budget");
  }

  const HamLevel& rootlv = lv[nd.root];
  int acc = -1;
  for (int i = 0; i < static_cast<int>(rootlv.states.size()); ++i)
    if (st_k(rootlv.states[i]) == 2) {
      acc = i;
      break;
    }
  if (acc < 0) return res;
  res.exists = true;
  if (d.vertex_count() == 1) {
    res.path = {0};
    return res;
  }

  std::vector<EdgeId> used;
  std::function<void(int, int)> collect = [&](int node, int si) {
    const NiceNode& n = nd.nodes[node];
    const HamProv& p = lv[node].prov[si];
    switch (n.kind) {
      case NodeKind::Leaf:
        return;
      case NodeKind::Join:
        collect(n.child0, p.c0);
        collect(n.child1, p.c1);
        return;
      case NodeKind::IntroduceEdge:
        if (p.used) used.push_back(n.edge);
        collect(n.child0, p.c0);
        return;
      default:
        collect(n.child0, p.c0);
        return;
    }
  };
  collect(nd.root, acc);

  int nv = d.vertex_count();
  std::vector<int> nxt(nv, -1), din(nv, 0);
  for (EdgeId e : used) {
    const Arc& a = d.arc(e);
    if (nxt[a.tail] != -1)
      throw Error("d_hamilton_path: witness reconstruction failed");
    nxt[a.tail] = a.head;
    ++din[a.head];
  }
  int start = -1;
  for (int v = 0; v < nv; ++v)
    if (din[v] == 0 && nxt[v] != -1) start = v;
  if (start < 0) throw Error("d_hamilton_path: witness reconstruction failed");
  std::vector<char> seen(nv, 0);
  for (int cur = start; cur != -1 && !seen[cur]; cur = nxt[cur]) {
    res.path.push_back(cur);
    seen[cur] = 1;
  }
  if (static_cast<int>(res.path.size()) != nv)
    throw Error("d_hamilton_path: witness reconstruction failed");
  for (std::size_t i = 0; i + 1 < res.path.size(); ++i)
    if (!d.has_arc(res.path[i], res.path[i + 1]))
      throw Error("d_hamilton_path: witness reconstruction failed");
  return res;
}

bool held_karp_hamilton(const DiGraph& d) {
  int n = d.vertex_count();
  if (n > 20) throw TooLargeError("held_karp_hamilton: more than 20 vertices");
  if (n == 0) return false;
  if (n == 1) return true;
  std::vector<std::uint32_t> outmask(n, 0);
  for (const Arc& a : d.arcs()) outmask[a.tail] |= 1u << a.head;
  std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> dp(full + 1, 0);
  for (int v = 0; v < n; ++v) dp[1u << v] = 1u << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = dp[mask];
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t ext = outmask[v] & ~mask;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        dp[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return dp[full] != 0;
}

Bitset reach2(const DiGraph& d, const Bitset& removed_edges, VertexId s) {
  if (s < 0 || s >= d.vertex_count()) throw Error("reach2: s out of range");
  if (removed_edges.size() != d.edge_count())
    throw Error("reach2: edge set size mismatch");
  Bitset r(d.vertex_count());
  r.set(s);
  std::vector<VertexId> n1;
  for (EdgeId e : d.out_edges(s)) {
    if (removed_edges.test(e)) continue;
    VertexId y = d.arc(e).head;
    if (!r.test(y)) {
      r.set(y);
      n1.push_back(y);
    }
  }
  for (VertexId u : n1)
    for (EdgeId e : d.out_edges(u)) {
      if (removed_edges.test(e)) continue;
      r.set(d.arc(e).head);
    }
  return r;
}

bool brute_force_dred(const DredInstance& inst, std::uint64_t budget) {
  const DiGraph& d = inst.d;
  int n = d.vertex_count();
  if (inst.s < 0 || inst.s >= n)
    throw Error("brute_force_dred: s out of range");

  // Only arcs leaving s or an out-neighbor of s can lie on a path of at
  // most two arcs from s, so deleting anything else never changes reach2.
  Bitset tails(n);
  tails.set(inst.s);
  for (EdgeId e : d.out_edges(inst.s)) tails.set(d.arc(e).head);
  std::vector<EdgeId> cand;
  for (EdgeId e = 0; e < d.edge_count(); ++e)
    if (tails.test(d.arc(e).tail)) cand.push_back(e);

  int c = static_cast<int>(cand.size());
  int k = std::min(inst.k, c);
  long double total = 0, term = 1;
  for (int j = 0; j <= k; ++j) {
    total += term;
    term = term * (c - j) / (j + 1);
  }
  if (total > static_cast<long double>(budget))
    throw TooLargeError("brute_force_dred: subset budget exceeded");

  auto try_all = [&](auto&& eval) {
    std::vector<int> id;
    for (int j = 0; j <= k; ++j) {
      if (j == 0) {
        if (eval(id)) return true;
        continue;
      }
      id.assign(j, 0);
      for (int t = 0; t < j; ++t) id[t] = t;
      while (true) {
        if (eval(id)) return true;
        int t = j - 1;
        while (t >= 0 && id[t] == c - j + t) --t;
        if (t < 0) break;
        ++id[t];
        for (int q = t + 1; q < j; ++q) id[q] = id[q - 1] + 1;
      }
    }
    return false;
  };

  if (n <= 64) {
    std::vector<std::uint64_t> outm(n, 0);
    for (const Arc& a : d.arcs()) outm[a.tail] |= 1ull << a.head;
    std::vector<int> ctail(c);
    std::vector<std::uint64_t> chead(c);
    for (int i = 0; i < c; ++i) {
      ctail[i] = d.arc(cand[i]).tail;
      chead[i] = 1ull << d.arc(cand[i]).head;
    }
    std::uint64_t sbit = 1ull << inst.s;
    return try_all([&](const std::vector<int>& id) {
      std::uint64_t n1 = outm[inst.s];
      for (int t : id)
        if (ctail[t] == inst.s) n1 &= ~chead[t];
      std::uint64_t r = sbit | n1;
      std::uint64_t m = n1;
      while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        std::uint64_t o = outm[u];
        for (int t : id)
          if (ctail[t] == u) o &= ~chead[t];
        r |= o;
      }
      return n - std::popcount(r) >= inst.h;
    });
  }
  return try_all([&](const std::vector<int>& id) {
    Bitset rem(d.edge_count());
    for (int t : id) rem.set(cand[t]);
    Bitset r = reach2(d, rem, inst.s);
    return n - r.count() >= inst.h;
  });
}

DredInstance clique_to_dred(const UGraph& g, int r) {
  if (r < 1) throw Error("clique_to_dred: r must be positive");
  int n = g.vertex_count(), m = g.edge_count();
  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(n + 2 * m);
  for (int x = 0; x < n; ++x) arcs.push_back({0, 1 + x});
  for (int i = 0; i < m; ++i) {
    auto [a, b] = g.edge(i);
    arcs.push_back({1 + a, 1 + n + i});
    arcs.push_back({1 + b, 1 + n + i});
  }
  DredInstance inst;
  inst.d = DiGraph::build(1 + n + m, arcs);
  inst.k = r;
  inst.h = r + r * (r - 1) / 2;
  inst.s = 0;
  return inst;
}

bool decide_dbw(const DiGraph& d, int k, const ExactOptions& opt) {
  SplitResult sp = source_sink_split(d);
  UGraph u = underlying(sp.graph);
  return exact_width(UbwCut(u), opt).width <= k;
}

CopSweepResult dag_cop_sweep(const DiGraph& d, RobberMotion motion) {
  CopSweepResult res;
  std::vector<VertexId> topo = topological_order(d);
  if (d.vertex_count() > 0 && topo.empty()) return res;  // cyclic input
  Bitset contam = Bitset::full(d.vertex_count());
  Bitset no_removed(d.edge_count());
  for (VertexId v : topo) {
    // The robber may spread anywhere reachable in D minus the cop position.
    Bitset cop(d.vertex_count());
    cop.set(v);
    contam = reach_from(d, contam, cop, no_removed,
                        motion == RobberMotion::Underlying);
    res.moves.push_back(v);
  }
  res.cleaned = contam.none();
  return res;
}

}  // namespace dbw
