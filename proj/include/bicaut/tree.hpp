#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicaut/graph.hpp"
#include "bicaut/group_expr.hpp"
#include "bicaut/permutation.hpp"

namespace bicaut {

struct RootedTree {
  Graph tree;
  Vertex root = 0;
};

// Canonical string of a rooted tree: a vertex's code is the byte length of
// its sorted, concatenated child codes, ':', then that concatenation. A leaf
// is "0:". Equal codes iff rooted-isomorphic.
using AhuCode = std::string;

// Throws DomainError unless g is a tree (connected, acyclic, n >= 1).
void require_tree(const Graph& g);

/// A tree hung from a root. When `blocked` is a neighbour of the root, the
/// branch through it is left out, so the structure covers one side of an
/// edge. Children are ordered by (code, index).
class Rooting {
 public:
  Rooting(const Graph& t, Vertex root, Vertex blocked = -1);

  Vertex root() const { return root_; }
  // Vertices reached, parents before children.
  const std::vector<Vertex>& preorder() const { return preorder_; }
  bool contains(Vertex v) const { return parent_[v] != kAbsent; }
  Vertex parent(Vertex v) const { return parent_[v]; }  // -1 for the root
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  const AhuCode& code(Vertex v) const { return code_[v]; }
  // Stabiliser of v inside its own subtree.
  const GroupExpr& group(Vertex v) const { return group_[v]; }

  // Writes into `image` the canonical isomorphism from the subtree of x to
  // the subtree of y in `other` (codes must match).
  void map_onto(Vertex x, const Rooting& other, Vertex y,
                std::vector<Vertex>& image) const;

  // Swaps of consecutive equal-code sibling subtrees; they generate the
  // stabiliser of the root. Permutations on all vertices of the graph.
  std::vector<Permutation> generators() const;

 private:
  static constexpr Vertex kAbsent = -2;
  int n_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<AhuCode> code_;
  std::vector<GroupExpr> group_;
  std::vector<Vertex> preorder_;
};

AhuCode ahu_code(const RootedTree& t);
bool rooted_iso(const RootedTree& a, const RootedTree& b);

// Image of every vertex of a under a rooted isomorphism onto b, or nullopt.
std::optional<std::vector<Vertex>> rooted_iso_map(const RootedTree& a,
                                                  const RootedTree& b);

// Aut(t) fixing the root, normalized.
GroupExpr aut_rooted(const RootedTree& t);
// Aut(t), normalized. Throws DomainError on non-trees.
GroupExpr aut_tree(const Graph& t);
// Generators of Aut(t).
std::vector<Permutation> tree_generators(const Graph& t);

// Isomorphism-invariant code of an unrooted tree.
std::string free_tree_code(const Graph& t);

std::vector<std::vector<Vertex>> vertex_orbits(const Graph& t);

struct FixInfo {
  std::vector<Vertex> fixed;
  std::optional<std::string> empty_reason;  // "edge-center-symmetric"
};
FixInfo fix_info(const Graph& t);

struct BarTree {
  Graph tree;
  Vertex u_t = 0;  // subdivides the central edge
  Vertex v_t = 0;  // pendant at u_t, fixed by every automorphism
};
// Only for trees with empty Fix and diameter >= 3; throws DomainError
// otherwise.
BarTree bar_construction(const Graph& t);

// All trees on n vertices up to isomorphism, in a deterministic order.
std::vector<Graph> enumerate_trees(int n);

// Jordan's formula over the components of a forest: each isomorphism class
// of k components contributes Aut(component) wr S_k.
GroupExpr aut_forest(const Graph& forest);

}  // namespace bicaut
