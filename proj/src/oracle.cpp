#include "bicaut/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>

namespace bicaut::oracle {

int vertex_bound() {
  if (const char* env = std::getenv("BICAUT_ORACLE_BOUND")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 64;
}

namespace {

using Coloring = std::vector<int>;
// One entry per refinement round: the sorted list of (signature, count).
using Trace = std::vector<std::vector<int>>;

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g) {}

  // Refines `colors` to the coarsest equitable partition below it. Colours
  // are renumbered by signature rank, so two runs that produce the same
  // trace produce corresponding colour classes.
  Trace refine(Coloring& colors) const {
    Trace trace;
    const int n = g_.order();
    int classes = count_classes(colors);
    while (true) {
      std::vector<std::vector<int>> sig(n);
      for (Vertex v = 0; v < n; ++v) {
        sig[v].reserve(g_.degree(v) + 1);
        sig[v].push_back(colors[v]);
        std::vector<int> nb;
        nb.reserve(g_.degree(v));
        for (Vertex y : g_.neighbors(v)) nb.push_back(colors[y]);
        std::sort(nb.begin(), nb.end());
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      std::vector<std::vector<int>> unique = sig;
      std::sort(unique.begin(), unique.end());
      std::vector<int> round;
      for (std::size_t i = 0; i < unique.size();) {
        std::size_t j = i;
        while (j < unique.size() && unique[j] == unique[i]) ++j;
        round.push_back(static_cast<int>(j - i));
        round.push_back(static_cast<int>(unique[i].size()));
        round.insert(round.end(), unique[i].begin(), unique[i].end());
        i = j;
      }
      unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
      for (Vertex v = 0; v < n; ++v) {
        colors[v] = static_cast<int>(
            std::lower_bound(unique.begin(), unique.end(), sig[v]) -
            unique.begin());
      }
      trace.push_back(std::move(round));
      const int next = static_cast<int>(unique.size());
      if (next == classes) break;
      classes = next;
    }
    return trace;
  }

  static int count_classes(const Coloring& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

 private:
  const Graph& g_;
};

Coloring individualize(Coloring colors, Vertex v) {
  const int fresh = *std::max_element(colors.begin(), colors.end()) + 1;
  colors[v] = fresh;
  return colors;
}

// Smallest colour with more than one member, or -1 when discrete.
int first_nonsingleton(const Coloring& colors) {
  std::map<int, int> sizes;
  for (int c : colors) ++sizes[c];
  for (auto [c, k] : sizes) {
    if (k > 1) return c;
  }
  return -1;
}

std::vector<Vertex> cell(const Coloring& colors, int c) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(colors.size()); ++v) {
    if (colors[v] == c) out.push_back(v);
  }
  return out;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), refiner_(g) {}

  // An automorphism carrying the (equitable) left colouring onto the right
  // one, if any.
  std::optional<Permutation> find_mapping(Coloring left, Coloring right) const {
    if (refiner_.refine(left) != refiner_.refine(right)) return std::nullopt;
    const int c = first_nonsingleton(left);
    if (c < 0) {
      std::vector<int> image(g_.order());
      std::vector<Vertex> by_color(g_.order());
      for (Vertex v = 0; v < g_.order(); ++v) by_color[right[v]] = v;
      for (Vertex v = 0; v < g_.order(); ++v) image[v] = by_color[left[v]];
      Permutation p(std::move(image));
      if (is_automorphism(g_, p)) return p;
      return std::nullopt;
    }
    const Vertex x = cell(left, c).front();
    const Coloring left_next = individualize(left, x);
    for (Vertex y : cell(right, c)) {
      if (auto p = find_mapping(left_next, individualize(right, y))) return p;
    }
    return std::nullopt;
  }

  // |Aut(G, colors)| via the stabiliser chain; appends generators.
  BigInt count(Coloring colors, std::vector<Permutation>& gens) const {
    refiner_.refine(colors);
    const int c = first_nonsingleton(colors);
    if (c < 0) return 1;
    const auto members = cell(colors, c);
    const Vertex v = members.front();
    const BigInt stabilizer = count(individualize(colors, v), gens);

    std::vector<Permutation> level;
    std::vector<Vertex> orbit{v};
    auto in_orbit = [&](Vertex w) {
      return std::find(orbit.begin(), orbit.end(), w) != orbit.end();
    };
    auto grow_orbit = [&]() {
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        auto step = [&](const Permutation& p) {
          if (!in_orbit(p[orbit[i]])) orbit.push_back(p[orbit[i]]);
        };
        for (const auto& p : level) step(p);
        for (const auto& p : gens) step(p);
      }
    };
    grow_orbit();
    const Coloring left = individualize(colors, v);
    for (Vertex w : members) {
      if (in_orbit(w)) continue;
      if (auto p = find_mapping(left, individualize(colors, w))) {
        level.push_back(std::move(*p));
        grow_orbit();
      }
    }
    gens.insert(gens.end(), level.begin(), level.end());
    return stabilizer * static_cast<unsigned>(orbit.size());
  }

  // Lexicographically least relabelled edge list over all search leaves.
  void canonical(Coloring colors, std::string& best, bool& have) const {
    refiner_.refine(colors);
    const int c = first_nonsingleton(colors);
    if (c < 0) {
      std::vector<Edge> edges;
      for (auto [u, v] : g_.edges()) {
        edges.emplace_back(std::min(colors[u], colors[v]),
                           std::max(colors[u], colors[v]));
      }
      std::sort(edges.begin(), edges.end());
      std::string s;
      for (auto [u, v] : edges) {
        s += std::to_string(u) + '-' + std::to_string(v) + ',';
      }
      if (!have || s < best) {
        best = std::move(s);
        have = true;
      }
      return;
    }
    for (Vertex x : cell(colors, c)) canonical(individualize(colors, x), best, have);
  }

 private:
  const Graph& g_;
  Refiner refiner_;
};

void check_bound(const Graph& g) {
  if (g.order() > vertex_bound()) {
    throw OracleBoundError("graph has " + std::to_string(g.order()) +
                           " vertices, oracle bound is " +
                           std::to_string(vertex_bound()));
  }
}

Coloring initial_colors(const Graph& g, const std::vector<int>& colors) {
  if (colors.empty()) return Coloring(g.order(), 0);
  if (static_cast<int>(colors.size()) != g.order()) {
    throw std::invalid_argument("colour vector length mismatch");
  }
  std::vector<int> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), colors[v]) -
        sorted.begin());
  }
  return out;
}

}  // namespace

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw std::invalid_argument("permutation length does not match graph");
  }
  for (auto [u, v] : g.edges()) {
    if (!g.has_edge(p[u], p[v])) return false;
  }
  return true;
}

AutomorphismSet automorphisms(const Graph& g, std::size_t cap,
                              const std::vector<int>& colors) {
  check_bound(g);
  AutomorphismSet out;
  if (g.order() == 0) {
    out.count = 1;
    out.elements.push_back(Permutation::identity(0));
    out.complete = true;
    return out;
  }
  Search search(g);
  out.count = search.count(initial_colors(g, colors), out.generators);
  if (out.count <= cap) {
    if (out.generators.empty()) {
      out.elements = {Permutation::identity(g.order())};
    } else {
      out.elements = *closure_elements(out.generators, cap);
    }
    out.complete = true;
  } else {
    out.elements = out.generators;
  }
  return out;
}

BigInt automorphism_count(const Graph& g, const std::vector<int>& colors) {
  check_bound(g);
  if (g.order() == 0) return 1;
  std::vector<Permutation> gens;
  return Search(g).count(initial_colors(g, colors), gens);
}

BigInt stabilizer_count(const Graph& g, Vertex v) {
  std::vector<int> colors(g.order(), 0);
  colors.at(v) = 1;
  return automorphism_count(g, colors);
}

std::vector<std::vector<Vertex>> orbit_partition(const Graph& g) {
  check_bound(g);
  std::vector<Permutation> gens;
  if (g.order() > 0) Search(g).count(Coloring(g.order(), 0), gens);
  return orbits_of(gens, g.order());
}

std::string canonical_form(const Graph& g) {
  check_bound(g);
  std::string best;
  bool have = false;
  if (g.order() > 0) Search(g).canonical(Coloring(g.order(), 0), best, have);
  return std::to_string(g.order()) + ':' + best;
}

}  // namespace bicaut::oracle
