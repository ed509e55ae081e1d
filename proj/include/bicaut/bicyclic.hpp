#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicaut/graph.hpp"
#include "bicaut/group_expr.hpp"
#include "bicaut/permutation.hpp"
#include "bicaut/tree.hpp"

namespace bicaut {

/// The 2-core of a graph with cyclomatic number 1 or 2, as vertex sequences.
///
///   kTheta:        hubs {u, v}; three internal paths u -> v, shortest first.
///   kSharedVertex: hubs {O};    two cycles, each listed without O.
///   kDumbbell:     hubs {p, q}; cycle at p, cycle at q (each without its hub),
///                  then the bridge interior p -> q.
///   kSingleCycle:  no hubs;     the cycle from its smallest vertex.
struct Skeleton {
  enum class Kind { kSingleCycle, kTheta, kSharedVertex, kDumbbell };
  Kind kind = Kind::kSingleCycle;
  std::vector<Vertex> hubs;
  std::vector<std::vector<Vertex>> paths;

  std::string name() const;
  // Edge counts: theta paths, the two cycles, the two cycles then the bridge,
  // or the single cycle.
  std::vector<int> lengths() const;
  std::vector<Edge> edges() const;
};

// The tree hanging from one core vertex; local vertex 0 is the root.
struct AttachedTree {
  Graph tree;
  std::vector<Vertex> to_global;
};

struct Decomposition {
  int order = 0;  // vertices of the input graph
  Skeleton skeleton;
  std::vector<Vertex> core;             // sorted
  std::vector<int> core_index;          // per input vertex, -1 off the core
  std::vector<AttachedTree> attached;   // parallel to `core`
};

// Throws NotConnectedError, or DomainError unless c is 1 or 2.
Decomposition extract_decomposition(const Graph& g);
Graph reconstruct(const Decomposition& d);

/// Skeleton automorphisms that preserve attached-tree codes. Permutations act
/// on core indices (positions in Decomposition::core).
struct TopSymmetry {
  std::vector<Permutation> elements;    // the whole group, identity first
  std::vector<Permutation> generators;  // greedy, in candidate order
  SmallTop top;
};

TopSymmetry top_symmetries(const Decomposition& d);

// c = 2 only (DomainError otherwise).
GroupExpr assemble_aut(const Decomposition& d);
// c = 1 only (DomainError otherwise).
GroupExpr aut_unicyclic(const Decomposition& d);

// "M1".."M8", "N1".."N3", "lem2", "l2.3", "generic", "unicyclic".
std::string case_label(const Decomposition& d, const TopSymmetry& q);

// Rooted-tree generators of each attached tree plus one lift of every
// generator of the top group. Permutations of the input vertices.
std::vector<Permutation> emit_generators(const Decomposition& d,
                                         const TopSymmetry& q);

struct Report {
  FamilyTag family;
  std::string skeleton = "none";
  std::vector<int> lengths;
  GroupExpr expr;
  BigInt order = 1;
  ClassTag class_tag = ClassTag::kT;
  std::string case_label;
  std::vector<Permutation> generators;
  // "verified", "generators-verified-order-unchecked" or "failed".
  std::string status;
};

/// Trees, unicyclic and bicyclic graphs. Throws NotConnectedError, or
/// DomainError for cyclomatic number >= 3. Generated groups larger than
/// `closure_cap` are not closed (status says so).
Report analyze(const Graph& g, std::uint64_t closure_cap = 100000);

// "family=... skeleton=... lengths=... expr=... order=... class=... case=...
// generators=... status=..."
std::string format_report(const Report& r);

}  // namespace bicaut
