#include "bicaut/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bicaut/oracle.hpp"
#include "bicaut/tree.hpp"

namespace bicaut {

namespace {

void extend(const Graph& t, const std::vector<Edge>& free, std::size_t from,
            int left, std::vector<Edge>& chosen, std::set<std::string>& seen,
            std::vector<Graph>& out) {
  if (left == 0) {
    auto edges = t.edges();
    edges.insert(edges.end(), chosen.begin(), chosen.end());
    Graph g(t.order(), edges);
    if (seen.insert(oracle::canonical_form(g)).second) out.push_back(std::move(g));
    return;
  }
  for (std::size_t i = from; i < free.size(); ++i) {
    chosen.push_back(free[i]);
    extend(t, free, i + 1, left - 1, chosen, seen, out);
    chosen.pop_back();
  }
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, int cyclomatic) {
  if (cyclomatic < 0) throw std::invalid_argument("negative cyclomatic number");
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (const auto& t : enumerate_trees(n)) {
    std::vector<Edge> free;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!t.has_edge(u, v)) free.emplace_back(u, v);
      }
    }
    std::vector<Edge> chosen;
    extend(t, free, 0, cyclomatic, chosen, seen, out);
  }
  return out;
}

Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(uniform(rng, 0, v - 1), v);
  return Graph(std::max(n, 0), edges);
}

Graph random_connected(std::mt19937_64& rng, int n, int extra) {
  Graph t = random_tree(rng, n);
  auto edges = t.edges();
  std::vector<Edge> free;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!t.has_edge(u, v)) free.emplace_back(u, v);
    }
  }
  std::shuffle(free.begin(), free.end(), rng);
  for (int i = 0; i < extra && i < static_cast<int>(free.size()); ++i) {
    edges.push_back(free[i]);
  }
  return Graph(n, edges);
}

Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

namespace {

// Rooted decorations, root first: none, a pendant, a pendant path of two,
// a cherry, and a spider with legs of lengths 1 and 2.
const std::vector<std::vector<Edge>>& decoration_pool() {
  static const std::vector<std::vector<Edge>> pool = {
      {},
      {{0, 1}},
      {{0, 1}, {1, 2}},
      {{0, 1}, {0, 2}},
      {{0, 1}, {0, 2}, {2, 3}},
  };
  return pool;
}

int decoration_size(int kind) {
  return static_cast<int>(decoration_pool()[kind].size());
}

class Builder {
 public:
  Vertex add() { return n_++; }
  void edge(Vertex a, Vertex b) { edges_.emplace_back(a, b); }
  void chain(const std::vector<Vertex>& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) edge(c[i], c[i + 1]);
  }
  std::vector<Vertex> fresh(int k) {
    std::vector<Vertex> out;
    for (int i = 0; i < k; ++i) out.push_back(add());
    return out;
  }
  void decorate(Vertex root, int kind) {
    std::vector<Vertex> local{root};
    for (std::size_t i = 1; i <= decoration_pool()[kind].size(); ++i) {
      local.push_back(add());
    }
    for (auto [a, b] : decoration_pool()[kind]) edge(local[a], local[b]);
  }
  int order() const { return n_; }
  Graph graph() const { return Graph(n_, edges_); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace

Graph StratifiedGenerator::next(int min_n, int max_n, bool bicyclic_only) {
  if (min_n > max_n || max_n < 3) throw std::invalid_argument("bad size bounds");
  auto& rng = rng_;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const int kind = uniform(rng, bicyclic_only ? 1 : 0, 3);
    const bool equal = coin(rng, 0.6);
    // Sequences of core vertices whose decorations get symmetry patterns;
    // hubs are decorated separately.
    std::vector<int> lengths;
    int hubs = 0;
    switch (kind) {
      case 0:  // cycle: one sequence
        lengths = {uniform(rng, 3, 8)};
        break;
      case 1: {  // theta: internal path lengths, at most one empty
        const int a = uniform(rng, 0, 4);
        lengths = {a, equal ? a : uniform(rng, 1, 4),
                   equal && coin(rng, 0.5) ? a : uniform(rng, 1, 4)};
        if (std::count(lengths.begin(), lengths.end(), 0) > 1) continue;
        hubs = 2;
        break;
      }
      case 2: {  // shared vertex: two cycles, listed without the hub
        const int a = uniform(rng, 2, 5);
        lengths = {a, equal ? a : uniform(rng, 2, 5)};
        hubs = 1;
        break;
      }
      default: {  // dumbbell: two cycles and a bridge interior
        const int a = uniform(rng, 2, 5);
        lengths = {a, equal ? a : uniform(rng, 2, 5), uniform(rng, 0, 3)};
        hubs = 2;
        break;
      }
    }
    const int pool = static_cast<int>(decoration_pool().size());
    auto pick = [&]() { return coin(rng, 0.45) ? 0 : uniform(rng, 1, pool - 1); };
    std::vector<std::vector<int>> deco;
    for (int len : lengths) {
      std::vector<int> d(len);
      for (auto& x : d) x = pick();
      deco.push_back(std::move(d));
    }
    std::vector<int> hub_deco(hubs);
    for (auto& x : hub_deco) x = pick();
    const int mode = uniform(rng, 0, 5);
    if (mode == 0) {  // bare sequences
      for (auto& d : deco) std::fill(d.begin(), d.end(), 0);
    } else if (mode == 1) {  // one decoration everywhere
      const int x = uniform(rng, 1, pool - 1);
      for (auto& d : deco) std::fill(d.begin(), d.end(), x);
    }
    if (coin(rng, 0.5)) {  // palindromic sequences
      for (auto& d : deco) {
        for (std::size_t j = 0; j < d.size() / 2; ++j) d[d.size() - 1 - j] = d[j];
      }
    }
    if (coin(rng, 0.5)) {  // copy the first sequence onto equal-length ones
      const std::size_t copies = kind == 3 ? 2 : deco.size();
      for (std::size_t i = 1; i < copies; ++i) {
        if (deco[i].size() != deco[0].size()) continue;
        deco[i] = deco[0];
        if (coin(rng, 0.3)) std::reverse(deco[i].begin(), deco[i].end());
      }
    }
    if (hubs == 2 && coin(rng, 0.5)) hub_deco[1] = hub_deco[0];

    int total = hubs;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      total += lengths[i];
      for (int x : deco[i]) total += decoration_size(x);
    }
    for (int x : hub_deco) total += decoration_size(x);
    if (total < min_n || total > max_n) continue;

    Builder b;
    std::vector<Vertex> hub_vertices = b.fresh(hubs);
    std::vector<std::vector<Vertex>> seqs;
    for (int len : lengths) seqs.push_back(b.fresh(len));
    auto around = [](Vertex h, std::vector<Vertex> s, Vertex end) {
      s.insert(s.begin(), h);
      s.push_back(end);
      return s;
    };
    switch (kind) {
      case 0: {
        auto c = seqs[0];
        c.push_back(c.front());
        b.chain(c);
        break;
      }
      case 1:
        for (const auto& s : seqs) b.chain(around(hub_vertices[0], s, hub_vertices[1]));
        break;
      case 2:
        for (const auto& s : seqs) b.chain(around(hub_vertices[0], s, hub_vertices[0]));
        break;
      default:
        b.chain(around(hub_vertices[0], seqs[0], hub_vertices[0]));
        b.chain(around(hub_vertices[1], seqs[1], hub_vertices[1]));
        b.chain(around(hub_vertices[0], seqs[2], hub_vertices[1]));
        break;
    }
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      for (std::size_t j = 0; j < seqs[i].size(); ++j) b.decorate(seqs[i][j], deco[i][j]);
    }
    for (int h = 0; h < hubs; ++h) b.decorate(hub_vertices[h], hub_deco[h]);
    return random_relabel(b.graph(), rng);
  }
  throw std::invalid_argument("no skeleton fits the size bounds");
}

}  // namespace bicaut
