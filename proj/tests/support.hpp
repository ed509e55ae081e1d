#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bicaut/graph.hpp"
#include "bicaut/group_expr.hpp"

namespace bicaut::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Counts automorphisms by trying every permutation. Independent of the
// refinement oracle; only usable for n <= 8 or so.
inline long long brute_force_count(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      if (!g.has_edge(p[u], p[v])) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Stabilisers of rooted trees; realizable as tree groups.
inline GroupExpr random_tree_expr(std::mt19937_64& rng, int depth) {
  const int k = depth <= 0 ? 0 : uniform(rng, 0, 3);
  if (k == 0) return uniform(rng, 0, 3) == 0 ? GroupExpr() : GroupExpr::sym(uniform(rng, 2, 3));
  if (k == 1) return GroupExpr::sym(uniform(rng, 2, 4));
  if (k == 2) {
    return GroupExpr::product({random_tree_expr(rng, depth - 1),
                               random_tree_expr(rng, depth - 1)});
  }
  return GroupExpr::wreath(random_tree_expr(rng, depth - 1), uniform(rng, 2, 3));
}

// C x wrK4(D) (cls 1), C x b2(D,H,K) with D, H nontrivial (cls 2), or a tree
// group (otherwise).
inline GroupExpr random_class_expr(std::mt19937_64& rng, int cls) {
  switch (cls) {
    case 1:
      return GroupExpr::product({random_tree_expr(rng, 1),
                                 GroupExpr::wreath_k4(random_tree_expr(rng, 1))});
    case 2:
      return GroupExpr::product(
          {random_tree_expr(rng, 1),
           GroupExpr::b2(GroupExpr::sym(uniform(rng, 2, 3)),
                         GroupExpr::sym(uniform(rng, 2, 3)), random_tree_expr(rng, 0))});
    default:
      return random_tree_expr(rng, 3);
  }
}

inline GroupExpr random_class_expr(std::mt19937_64& rng) {
  return random_class_expr(rng, uniform(rng, 0, 2));
}

inline SmallTop random_top(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 6)) {
    case 0: return SmallTop::trivial();
    case 1: return SmallTop::cyclic(uniform(rng, 2, 7));
    case 2: return SmallTop::dihedral(uniform(rng, 3, 6));
    case 3: return SmallTop::klein();
    case 4: return SmallTop::z2_wr_z2();
    case 5: return SmallTop::s3();
    default: return SmallTop::s3_x_z2();
  }
}

// Any expression the DSL can spell, including degenerate shapes.
inline GroupExpr random_any_expr(std::mt19937_64& rng, int depth) {
  const int k = depth <= 0 ? uniform(rng, 0, 2) : uniform(rng, 0, 8);
  auto sub = [&] { return random_any_expr(rng, depth - 1); };
  switch (k) {
    case 0: return GroupExpr::trivial();
    case 1: return GroupExpr::sym(uniform(rng, 2, 6));
    case 2: return GroupExpr::dihedral(uniform(rng, 3, 9));
    case 3: {
      std::vector<GroupExpr> f(uniform(rng, 2, 3));
      for (auto& x : f) x = sub();
      return GroupExpr::product(std::move(f));
    }
    case 4: return GroupExpr::wreath(sub(), uniform(rng, 2, 4));
    case 5: return GroupExpr::wreath_k4(sub());
    case 6: return GroupExpr::b2(sub(), sub(), sub());
    case 7: return GroupExpr::semi({sub()}, random_top(rng));
    default: return GroupExpr::sym(2);
  }
}

// Theta with the edge uv and two paths u a h a' v; a cherry hangs from each
// of the eight non-edge slots, so D = H = K = Sym(2). 24 vertices.
inline Graph klein_theta_instance() {
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {4, 1},
                             {0, 5}, {5, 6}, {6, 7}, {7, 1}};
  int next = 8;
  for (Vertex slot = 0; slot < 8; ++slot) {
    edges.push_back({slot, next});
    edges.push_back({slot, next + 1});
    next += 2;
  }
  return Graph(next, edges);
}

}  // namespace bicaut::testing
