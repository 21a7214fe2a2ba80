#pragma once

#include <string>
#include <vector>

#include "dbw/digraph.hpp"
#include "dbw/layout.hpp"

namespace dbw {

struct TreeDecomposition {
  // Rooted tree in topological numbering: parent[0] == -1 and parent[i] < i.
  std::vector<int> parent;
  std::vector<std::vector<VertexId>> bags;  // each sorted ascending

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;  // max bag size - 1, or -1 when there are no nodes
};

// Checks the numbering plus both decomposition axioms: every vertex and
// every edge inside some bag, and each vertex's bags forming a connected
// subtree. The failure reason lands in *why when given.
bool validate_tree_decomposition(const UGraph& g, const TreeDecomposition& td,
                                 std::string* why = nullptr);

// Convert a width-w layout of E(g) into a tree decomposition: a leaf keeps
// its edge's endpoints, an internal node takes the union of the boundary
// sets of its incident tree edges, and isolated vertices get singleton bags.
// Bag sizes never exceed max(2, 3w/2) when g has an edge.
// Throws GroundMismatchError when t and g disagree on the ground size.
TreeDecomposition branch_to_tree_decomposition(const LayoutTree& t,
                                               const UGraph& g);

enum class NodeKind { Leaf, Introduce, Forget, IntroduceEdge, Join };

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  VertexId vertex = -1;       // Introduce / Forget payload
  EdgeId edge = -1;           // IntroduceEdge payload
  std::vector<VertexId> bag;  // sorted ascending
  int child0 = -1, child1 = -1;
};

struct NiceDecomposition {
  std::vector<NiceNode> nodes;  // children precede parents; root is last
  int root = -1;
  int width() const;
};

// Normalize a valid decomposition: leaves and the root carry empty bags,
// every vertex of g is forgotten exactly once, and every edge is introduced
// exactly once, placed just below the forget of its first-forgotten
// endpoint. Throws Error when td leaves an edge with no legal slot (which
// only an invalid td can do).
NiceDecomposition make_nice(const UGraph& g, const TreeDecomposition& td);

// Structural check of the nice form plus the exactly-once guarantees the
// dynamic programmes rely on.
bool validate_nice_decomposition(const UGraph& g, const NiceDecomposition& nd,
                                 std::string* why = nullptr);

}  // namespace dbw
