#include "bicaut/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bicaut {

void require_tree(const Graph& g) {
  if (g.order() == 0) throw DomainError("empty graph is not a tree");
  if (!is_connected(g) ||
      g.size() != static_cast<std::size_t>(g.order() - 1)) {
    throw DomainError("graph is not a tree");
  }
}

Rooting::Rooting(const Graph& t, Vertex root, Vertex blocked)
    : n_(t.order()),
      root_(root),
      parent_(t.order(), kAbsent),
      children_(t.order()),
      code_(t.order()),
      group_(t.order()) {
  if (!t.contains(root)) throw InvalidVertexError("root out of range");
  parent_[root] = -1;
  preorder_.push_back(root);
  for (std::size_t i = 0; i < preorder_.size(); ++i) {
    const Vertex v = preorder_[i];
    for (Vertex y : t.neighbors(v)) {
      if (y == parent_[v] || (v == root && y == blocked)) continue;
      if (parent_[y] != kAbsent) throw DomainError("graph is not a tree");
      parent_[y] = v;
      children_[v].push_back(y);
      preorder_.push_back(y);
    }
  }
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = children_[v];
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
      return code_[a] != code_[b] ? code_[a] < code_[b] : a < b;
    });
    std::string body;
    std::vector<GroupExpr> factors;
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && code_[kids[j]] == code_[kids[i]]) ++j;
      const int k = static_cast<int>(j - i);
      factors.push_back(k == 1 ? group_[kids[i]]
                               : GroupExpr::wreath(group_[kids[i]], k));
      for (std::size_t m = i; m < j; ++m) body += code_[kids[m]];
      i = j;
    }
    code_[v] = std::to_string(body.size()) + ':' + body;
    group_[v] = normalize(GroupExpr::product(std::move(factors)));
  }
}

void Rooting::map_onto(Vertex x, const Rooting& other, Vertex y,
                       std::vector<Vertex>& image) const {
  if (code_[x] != other.code_[y]) {
    throw std::logic_error("subtrees are not isomorphic");
  }
  std::vector<std::pair<Vertex, Vertex>> stack{{x, y}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    image[a] = b;
    const auto& ka = children_[a];
    const auto& kb = other.children_[b];
    for (std::size_t i = 0; i < ka.size(); ++i) stack.emplace_back(ka[i], kb[i]);
  }
}

std::vector<Permutation> Rooting::generators() const {
  std::vector<Permutation> gens;
  for (Vertex v : preorder_) {
    const auto& kids = children_[v];
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
      if (code_[kids[i]] != code_[kids[i + 1]]) continue;
      std::vector<Vertex> image(n_);
      for (Vertex w = 0; w < n_; ++w) image[w] = w;
      map_onto(kids[i], *this, kids[i + 1], image);
      map_onto(kids[i + 1], *this, kids[i], image);
      gens.emplace_back(std::move(image));
    }
  }
  return gens;
}

AhuCode ahu_code(const RootedTree& t) {
  require_tree(t.tree);
  return Rooting(t.tree, t.root).code(t.root);
}

bool rooted_iso(const RootedTree& a, const RootedTree& b) {
  return ahu_code(a) == ahu_code(b);
}

std::optional<std::vector<Vertex>> rooted_iso_map(const RootedTree& a,
                                                  const RootedTree& b) {
  require_tree(a.tree);
  require_tree(b.tree);
  const Rooting ra(a.tree, a.root);
  const Rooting rb(b.tree, b.root);
  if (ra.code(a.root) != rb.code(b.root)) return std::nullopt;
  std::vector<Vertex> image(a.tree.order());
  ra.map_onto(a.root, rb, b.root, image);
  return image;
}

GroupExpr aut_rooted(const RootedTree& t) {
  require_tree(t.tree);
  return Rooting(t.tree, t.root).group(t.root);
}

GroupExpr aut_tree(const Graph& t) {
  require_tree(t);
  const auto c = center(t);
  if (c.size() == 1) return Rooting(t, c[0]).group(c[0]);
  const Rooting ra(t, c[0], c[1]);
  const Rooting rb(t, c[1], c[0]);
  if (ra.code(c[0]) == rb.code(c[1])) {
    return normalize(GroupExpr::wreath(ra.group(c[0]), 2));
  }
  return normalize(GroupExpr::product({ra.group(c[0]), rb.group(c[1])}));
}

std::vector<Permutation> tree_generators(const Graph& t) {
  require_tree(t);
  const auto c = center(t);
  if (c.size() == 1) return Rooting(t, c[0]).generators();
  const Rooting ra(t, c[0], c[1]);
  const Rooting rb(t, c[1], c[0]);
  auto gens = ra.generators();
  for (auto& p : rb.generators()) gens.push_back(std::move(p));
  if (ra.code(c[0]) == rb.code(c[1])) {
    std::vector<Vertex> image(t.order());
    ra.map_onto(c[0], rb, c[1], image);
    rb.map_onto(c[1], ra, c[0], image);
    gens.emplace_back(std::move(image));
  }
  return gens;
}

std::string free_tree_code(const Graph& t) {
  require_tree(t);
  const auto c = center(t);
  if (c.size() == 1) return "V" + Rooting(t, c[0]).code(c[0]);
  std::string a = Rooting(t, c[0], c[1]).code(c[0]);
  std::string b = Rooting(t, c[1], c[0]).code(c[1]);
  if (b < a) std::swap(a, b);
  return "E" + a + "|" + b;
}

std::vector<std::vector<Vertex>> vertex_orbits(const Graph& t) {
  require_tree(t);
  const auto c = center(t);
  std::vector<int> key(t.order(), -1);
  std::map<std::pair<int, AhuCode>, int> intern;
  auto descend = [&](const Rooting& r) {
    for (Vertex v : r.preorder()) {
      if (v == r.root()) continue;
      const auto k = std::make_pair(key[r.parent(v)], r.code(v));
      auto [it, fresh] = intern.emplace(k, static_cast<int>(intern.size()) + 2);
      key[v] = it->second;
    }
  };
  if (c.size() == 1) {
    key[c[0]] = 0;
    descend(Rooting(t, c[0]));
  } else {
    const Rooting ra(t, c[0], c[1]);
    const Rooting rb(t, c[1], c[0]);
    key[c[0]] = 0;
    key[c[1]] = ra.code(c[0]) == rb.code(c[1]) ? 0 : 1;
    descend(ra);
    descend(rb);
  }
  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < t.order(); ++v) groups[key[v]].push_back(v);
  std::vector<std::vector<Vertex>> orbits;
  for (auto& [k, members] : groups) orbits.push_back(std::move(members));
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

FixInfo fix_info(const Graph& t) {
  FixInfo info;
  for (const auto& orbit : vertex_orbits(t)) {
    if (orbit.size() == 1) info.fixed.push_back(orbit[0]);
  }
  std::sort(info.fixed.begin(), info.fixed.end());
  if (info.fixed.empty()) info.empty_reason = "edge-center-symmetric";
  return info;
}

BarTree bar_construction(const Graph& t) {
  if (!fix_info(t).fixed.empty()) {
    throw DomainError("bar construction needs a tree with no fixed vertex");
  }
  if (diameter(t) < 3) {
    throw DomainError("bar construction needs diameter >= 3");
  }
  const auto c = center(t);
  const Vertex u = c[0];
  const Vertex v = c[1];
  const int n = t.order();
  std::vector<Edge> edges;
  for (auto e : t.edges()) {
    if (e != Edge(std::min(u, v), std::max(u, v))) edges.push_back(e);
  }
  edges.emplace_back(u, n);
  edges.emplace_back(n, v);
  edges.emplace_back(n, n + 1);
  return {Graph(n + 2, edges), n, n + 1};
}

std::vector<Graph> enumerate_trees(int n) {
  if (n <= 0) return {};
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::set<std::string> seen;
    for (const auto& t : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, t.order());
        Graph g(t.order() + 1, edges);
        if (seen.insert(free_tree_code(g)).second) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

GroupExpr aut_forest(const Graph& forest) {
  const auto comps = connected_components(forest);
  if (forest.size() + comps.size() != static_cast<std::size_t>(forest.order())) {
    throw DomainError("graph is not a forest");
  }
  std::map<std::string, std::pair<GroupExpr, int>> classes;
  for (const auto& comp : comps) {
    const Graph sub = induced_subgraph(forest, comp);
    auto [it, fresh] =
        classes.emplace(free_tree_code(sub), std::make_pair(GroupExpr(), 0));
    if (fresh) it->second.first = aut_tree(sub);
    ++it->second.second;
  }
  std::vector<GroupExpr> factors;
  for (auto& [code, entry] : classes) {
    factors.push_back(entry.second == 1
                          ? entry.first
                          : GroupExpr::wreath(entry.first, entry.second));
  }
  return normalize(GroupExpr::product(std::move(factors)));
}

}  // namespace bicaut
