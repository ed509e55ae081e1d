#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bicaut/graph.hpp"
#include "bicaut/permutation.hpp"

namespace bicaut {

using BigInt = boost::multiprecision::cpp_int;

namespace oracle {

// Largest graph the oracle accepts: 64, or BICAUT_ORACLE_BOUND if set.
int vertex_bound();

struct AutomorphismSet {
  BigInt count;                          // exact |Aut(G)|
  std::vector<Permutation> generators;   // generate Aut(G)
  std::vector<Permutation> elements;     // all of Aut(G) when `complete`
  bool complete = false;
};

/// Brute-force automorphism search.
///
/// Backtracks over vertex images, pruning with iterated neighbour-multiset
/// colour refinement. The count is obtained through a stabiliser chain
/// (|G| = |v^G| * |G_v|) so it stays exact even when the group is far too
/// large to list; `elements` holds the full group only when count <= cap.
///
/// `colors`, when non-empty, restricts to colour-preserving automorphisms
/// (used to count stabilisers). Throws OracleBoundError above the bound.
AutomorphismSet automorphisms(const Graph& g, std::size_t cap = 100000,
                              const std::vector<int>& colors = {});

BigInt automorphism_count(const Graph& g, const std::vector<int>& colors = {});

// Number of automorphisms fixing v.
BigInt stabilizer_count(const Graph& g, Vertex v);

// Throws std::invalid_argument if p.size() != g.order().
bool is_automorphism(const Graph& g, const Permutation& p);

std::vector<std::vector<Vertex>> orbit_partition(const Graph& g);

// Isomorphism-invariant string: equal for two graphs iff they are isomorphic.
// Explores the full refinement search tree; meant for small graphs.
std::string canonical_form(const Graph& g);

}  // namespace oracle
}  // namespace bicaut
