#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dbw/bitset.hpp"
#include "dbw/digraph.hpp"
#include "dbw/gf2.hpp"

namespace dbw {

// Unrooted layout tree: internal nodes have degree 3, leaves are in bijection
// with the ground elements (leaf_map[node] = element, -1 on internal nodes).
// Degenerate trees with fewer than two leaves are permitted.
struct LayoutTree {
  int node_count = 0;
  int ground_size = 0;
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<int> leaf_map;

  int add_leaf(int element) {
    leaf_map.push_back(element);
    return node_count++;
  }
  int add_internal() {
    leaf_map.push_back(-1);
    return node_count++;
  }
  void add_edge(int a, int b) { tree_edges.push_back({a, b}); }
};

// Checks tree shape (connected, acyclic), the degree-3 rule for internal
// nodes, and that leaf_map is a bijection onto [0, ground_size).
bool validate_layout_tree(const LayoutTree& t, std::string* why = nullptr);

// Symmetric set function on subsets of a fixed ground set. Implementations
// must be pure; evaluate may be called from several threads at once.
class CutFunction {
 public:
  virtual ~CutFunction() = default;
  virtual int ground_size() const = 0;
  virtual int evaluate(const Bitset& side) const = 0;
};

class DbwCut final : public CutFunction {
 public:
  explicit DbwCut(DiGraph d) : d_(std::move(d)) {}
  int ground_size() const override { return d_.edge_count(); }
  int evaluate(const Bitset& side) const override;
  const DiGraph& graph() const { return d_; }

 private:
  DiGraph d_;
};

class UbwCut final : public CutFunction {
 public:
  explicit UbwCut(UGraph g) : g_(std::move(g)) {}
  int ground_size() const override { return g_.edge_count(); }
  int evaluate(const Bitset& side) const override;
  // endpoints incident with edges on both sides; the bag-forming set
  Bitset boundary(const Bitset& side) const;
  const UGraph& graph() const { return g_; }

 private:
  UGraph g_;
};

class BicutCut final : public CutFunction {
 public:
  explicit BicutCut(DiGraph d) : d_(std::move(d)) {}
  int ground_size() const override { return d_.vertex_count(); }
  int evaluate(const Bitset& side) const override;

 private:
  DiGraph d_;
};

// Caches evaluations keyed by the lexicographically smaller of side and its
// complement. Not safe for concurrent use.
class MemoizedCut final : public CutFunction {
 public:
  explicit MemoizedCut(const CutFunction& inner) : inner_(inner) {}
  int ground_size() const override { return inner_.ground_size(); }
  int evaluate(const Bitset& side) const override;

 private:
  const CutFunction& inner_;
  mutable std::unordered_map<Bitset, int, BitsetHash> memo_;
};

struct WidthReport {
  int width = 0;
  std::vector<int> per_edge_orders;  // aligned with tree_edges
  int argmax_edge = -1;
};

// Width of a given layout: max cut value over tree edges, each tree edge
// evaluated on the leaf elements of one of its sides. Throws
// GroundMismatchError when tree and cut disagree on ground size, Error when
// the tree fails validation.
WidthReport layout_width(const LayoutTree& t, const CutFunction& f);

struct ExactOptions {
  int ground_cap = 16;
  int threads = 1;
};

struct WidthResult {
  int width = 0;
  LayoutTree tree;
};

// Optimal layout by dynamic programming over subset bipartitions (3^n).
// Deterministic: ties prefer the lexicographically smallest split side.
WidthResult exact_width(const CutFunction& f, const ExactOptions& opt = {});

// Minimum width by brute enumeration of all (2n-5)!! cubic trees; the
// independent oracle for exact_width. Ground capped (default 8).
int enumerate_width(const CutFunction& f, int ground_cap = 8);

// Seeded greedy recursive bipartition followed by leaf-swap hill climbing.
// Always returns a valid tree; width is recomputed via layout_width.
WidthResult heuristic_width(const CutFunction& f, std::uint64_t seed = 0);

enum class WidthMode { Exact, ViaSplit, Heuristic };

struct WidthOptions {
  int exact_cap = 16;
  int threads = 1;
  std::uint64_t seed = 0;
};

// Directed branch-width of d. ViaSplit solves undirected branch-width on the
// underlying graph of the source-sink split (the two agree edge-for-edge) and
// reuses the tree, exploiting the index-preserving edge bijection.
WidthResult directed_branch_width(const DiGraph& d, WidthMode mode,
                                  const WidthOptions& opt = {});

// Bi-cut-rank-width of d (ground set = vertices). ViaSplit not applicable.
WidthResult bi_cut_rank_width(const DiGraph& d, WidthMode mode,
                              const WidthOptions& opt = {});

// Undirected branch-width of g (ground set = edges).
WidthResult branch_width(const UGraph& g, WidthMode mode,
                         const WidthOptions& opt = {});

}  // namespace dbw
