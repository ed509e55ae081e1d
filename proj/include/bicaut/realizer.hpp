#pragma once

#include <string>
#include <vector>

#include "bicaut/graph.hpp"
#include "bicaut/group_expr.hpp"

namespace bicaut {

constexpr int kRealizationBudget = 200;

struct CatalogConstraints {
  std::vector<Graph> not_isomorphic_to;
  int min_size = 7;
  int max_size = 12;  // search limit
};

// The k smallest pairwise non-isomorphic asymmetric trees meeting the
// constraints, by size then enumeration order. Throws DomainError when the
// search limit is reached first.
std::vector<Graph> asymmetric_trees(int k, const CatalogConstraints& c = {});

struct TreeRealization {
  Graph tree;
  Vertex anchor = 0;  // fixed by every automorphism of `tree`
};

// A tree with |Aut| = order(e). Throws OutsideClassError unless e is in T,
// SizeBudgetError past kRealizationBudget vertices.
TreeRealization realize_tree(const GroupExpr& e);

// A fixed vertex of t when Fix(t) is nonempty; otherwise the bar
// construction with anchor v_T. Either way the anchor's stabiliser is Aut(t).
// Throws DomainError for the single edge, which has neither.
TreeRealization fixed_anchor(const Graph& t);

struct ManifestEntry {
  std::string term;  // printed sub-expression, or "gadget" / "decoration"
  std::string role;  // "gadget", "decoration", "payload", "C", "D", "H", "K"
  std::string slot;  // gadget slot name ("p2", "a1", ...), empty for gadget
  Vertex first = 0;  // vertex range [first, last]
  Vertex last = 0;
};

struct Realization {
  Graph graph;
  std::vector<ManifestEntry> manifest;
};

struct RealizeOptions {
  // Decorate the shared-vertex gadget with catalog asymmetric trees instead
  // of single pendants.
  bool catalog_decorations = false;
};

/// A connected bicyclic graph whose automorphism group is e.
///
/// T: a C4 and a C5 sharing a vertex, made rigid by decorations next to the
/// shared vertex, with the tree realization attached opposite it on the C4.
/// B1 and B2: a theta with paths of 4, 4 and 2 edges whose Klein symmetry
/// moves four D slots regularly, swaps two H slots (path midpoints) and two
/// K slots (the branch vertices), and fixes a C slot on the short path.
///
/// Throws OutsideClassError for expressions outside S, SizeBudgetError past
/// kRealizationBudget vertices.
Realization realize(const GroupExpr& e, const RealizeOptions& options = {});

std::string format_manifest(const std::vector<ManifestEntry>& manifest);

}  // namespace bicaut
