#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bicaut/graph.hpp"

namespace bicaut {

// Connected graphs on n vertices with the given cyclomatic number, one per
// isomorphism class (trees plus extra edges, deduplicated by the oracle's
// canonical form).
std::vector<Graph> enumerate_connected(int n, int cyclomatic);

// Uniform random recursive tree: vertex i attaches to a random earlier one.
Graph random_tree(std::mt19937_64& rng, int n);
// Random tree plus `extra` random non-edges (fewer if the graph fills up).
Graph random_connected(std::mt19937_64& rng, int n, int extra);
Graph random_relabel(const Graph& g, std::mt19937_64& rng);

/// Random unicyclic and bicyclic graphs stratified by skeleton kind.
///
/// Each draw picks a skeleton (cycle, theta, shared vertex, dumbbell), its
/// lengths and decorations from a small pool of rooted trees, then imposes
/// random symmetry patterns (equal lengths, palindromic decorations, copied
/// cycles) so that every symmetry case shows up with useful frequency. The
/// result is randomly relabelled. Reproducible from the seed.
class StratifiedGenerator {
 public:
  explicit StratifiedGenerator(std::uint64_t seed) : rng_(seed) {}

  // A graph with min_n <= order <= max_n. `bicyclic_only` skips the
  // single-cycle stratum.
  Graph next(int min_n, int max_n, bool bicyclic_only = false);

 private:
  std::mt19937_64 rng_;
};

}  // namespace bicaut
