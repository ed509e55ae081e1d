#include "bicaut/bicyclic.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace bicaut {

namespace {

void add_chain(const std::vector<Vertex>& chain, std::vector<Edge>& out) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    out.emplace_back(chain[i], chain[i + 1]);
  }
}

std::vector<Vertex> closed(Vertex hub, const std::vector<Vertex>& seq) {
  std::vector<Vertex> chain{hub};
  chain.insert(chain.end(), seq.begin(), seq.end());
  chain.push_back(hub);
  return chain;
}

std::vector<Vertex> between(Vertex a, const std::vector<Vertex>& seq,
                            Vertex b) {
  std::vector<Vertex> chain{a};
  chain.insert(chain.end(), seq.begin(), seq.end());
  chain.push_back(b);
  return chain;
}

}  // namespace

std::string Skeleton::name() const {
  switch (kind) {
    case Kind::kSingleCycle: return "cycle";
    case Kind::kTheta: return "theta";
    case Kind::kSharedVertex: return "shared-vertex";
    case Kind::kDumbbell: return "dumbbell";
  }
  return "?";
}

std::vector<int> Skeleton::lengths() const {
  std::vector<int> out;
  if (kind == Kind::kSingleCycle) {
    out.push_back(static_cast<int>(paths.at(0).size()));
    return out;
  }
  for (const auto& p : paths) out.push_back(static_cast<int>(p.size()) + 1);
  return out;
}

std::vector<Edge> Skeleton::edges() const {
  std::vector<Edge> out;
  switch (kind) {
    case Kind::kSingleCycle: {
      auto chain = paths.at(0);
      chain.push_back(chain.front());
      add_chain(chain, out);
      break;
    }
    case Kind::kTheta:
      for (const auto& p : paths) add_chain(between(hubs[0], p, hubs[1]), out);
      break;
    case Kind::kSharedVertex:
      for (const auto& p : paths) add_chain(closed(hubs[0], p), out);
      break;
    case Kind::kDumbbell:
      add_chain(closed(hubs[0], paths[0]), out);
      add_chain(closed(hubs[1], paths[1]), out);
      add_chain(between(hubs[0], paths[2], hubs[1]), out);
      break;
  }
  return out;
}

namespace {

class CoreWalker {
 public:
  CoreWalker(const Graph& g, const std::vector<bool>& core) : g_(g), core_(core) {}

  int degree(Vertex v) const {
    int d = 0;
    for (Vertex y : g_.neighbors(v)) d += core_[y] ? 1 : 0;
    return d;
  }

  std::vector<Vertex> core_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex y : g_.neighbors(v)) {
      if (core_[y]) out.push_back(y);
    }
    return out;
  }

  // Follows degree-2 core vertices from `from` through `first` until a
  // vertex of another degree; returns the interior and that endpoint.
  std::pair<std::vector<Vertex>, Vertex> walk(Vertex from, Vertex first) const {
    std::vector<Vertex> seq;
    Vertex prev = from, cur = first;
    while (degree(cur) == 2) {
      seq.push_back(cur);
      Vertex next = -1;
      for (Vertex y : core_neighbors(cur)) {
        if (y != prev) next = y;
      }
      prev = cur;
      cur = next;
    }
    return {seq, cur};
  }

 private:
  const Graph& g_;
  const std::vector<bool>& core_;
};

Skeleton single_cycle(const CoreWalker& w, Vertex start) {
  Skeleton s;
  s.kind = Skeleton::Kind::kSingleCycle;
  std::vector<Vertex> seq{start};
  Vertex prev = start;
  Vertex cur = w.core_neighbors(start).front();
  while (cur != start) {
    seq.push_back(cur);
    for (Vertex y : w.core_neighbors(cur)) {
      if (y != prev) {
        prev = cur;
        cur = y;
        break;
      }
    }
  }
  s.paths.push_back(std::move(seq));
  return s;
}

Skeleton shared_vertex(const CoreWalker& w, Vertex o) {
  Skeleton s;
  s.kind = Skeleton::Kind::kSharedVertex;
  s.hubs = {o};
  std::set<Vertex> used;
  for (Vertex y : w.core_neighbors(o)) {
    if (used.count(y)) continue;
    auto [seq, end] = w.walk(o, y);
    used.insert(seq.front());
    used.insert(seq.back());
    s.paths.push_back(std::move(seq));
  }
  return s;
}

Skeleton two_hubs(const CoreWalker& w, Vertex a, Vertex b) {
  std::vector<std::vector<Vertex>> to_b, loop_a, loop_b;
  std::set<Vertex> used;
  for (Vertex y : w.core_neighbors(a)) {
    if (used.count(y)) continue;
    auto [seq, end] = w.walk(a, y);
    if (end == a) {
      used.insert(seq.front());
      used.insert(seq.back());
      loop_a.push_back(std::move(seq));
    } else {
      to_b.push_back(std::move(seq));
    }
  }
  Skeleton s;
  s.hubs = {a, b};
  if (loop_a.empty()) {
    s.kind = Skeleton::Kind::kTheta;
    std::sort(to_b.begin(), to_b.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    s.paths = std::move(to_b);
    return s;
  }
  used.clear();
  for (Vertex y : w.core_neighbors(b)) {
    if (used.count(y)) continue;
    auto [seq, end] = w.walk(b, y);
    if (end == b) {
      loop_b.push_back(std::move(seq));
      break;
    }
  }
  s.kind = Skeleton::Kind::kDumbbell;
  s.paths = {loop_a.front(), loop_b.front(), to_b.front()};
  return s;
}

}  // namespace

Decomposition extract_decomposition(const Graph& g) {
  const FamilyTag tag = classify_family(g);
  if (tag.cyclomatic != 1 && tag.cyclomatic != 2) {
    throw DomainError("cyclomatic number " + std::to_string(tag.cyclomatic) +
                      " unsupported");
  }
  const std::vector<bool> core = two_core(g);
  Decomposition d;
  d.order = g.order();
  d.core_index.assign(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (core[v]) {
      d.core_index[v] = static_cast<int>(d.core.size());
      d.core.push_back(v);
    }
  }
  for (Vertex x : d.core) {
    AttachedTree t;
    t.to_global = {x};
    std::vector<int> local(g.order(), -1);
    local[x] = 0;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < t.to_global.size(); ++i) {
      const Vertex v = t.to_global[i];
      for (Vertex y : g.neighbors(v)) {
        if (core[y] || local[y] >= 0) continue;
        local[y] = static_cast<int>(t.to_global.size());
        t.to_global.push_back(y);
        edges.emplace_back(local[v], local[y]);
      }
    }
    t.tree = Graph(static_cast<int>(t.to_global.size()), edges);
    d.attached.push_back(std::move(t));
  }

  const CoreWalker w(g, core);
  if (tag.cyclomatic == 1) {
    d.skeleton = single_cycle(w, d.core.front());
    return d;
  }
  std::vector<Vertex> branch;
  for (Vertex v : d.core) {
    const int deg = w.degree(v);
    if (deg == 4) {
      d.skeleton = shared_vertex(w, v);
      return d;
    }
    if (deg == 3) branch.push_back(v);
  }
  d.skeleton = two_hubs(w, branch.at(0), branch.at(1));
  return d;
}

Graph reconstruct(const Decomposition& d) {
  std::vector<Edge> edges = d.skeleton.edges();
  for (const auto& t : d.attached) {
    for (auto [a, b] : t.tree.edges()) {
      edges.emplace_back(t.to_global[a], t.to_global[b]);
    }
  }
  return Graph(d.order, edges);
}

// ------------------------------------------------------- top symmetries

namespace {

// Candidate skeleton automorphisms as maps on input vertices (core only).
std::vector<std::vector<Vertex>> candidates(const Decomposition& d) {
  const Skeleton& s = d.skeleton;
  std::vector<std::vector<Vertex>> out;
  auto blank = [&]() { return std::vector<Vertex>(d.order, -1); };
  auto place = [](std::vector<Vertex>& img, const std::vector<Vertex>& from,
                  const std::vector<Vertex>& to, bool reversed) {
    const std::size_t k = from.size();
    for (std::size_t j = 0; j < k; ++j) img[from[j]] = to[reversed ? k - 1 - j : j];
  };
  switch (s.kind) {
    case Skeleton::Kind::kSingleCycle: {
      const auto& c = s.paths[0];
      const int k = static_cast<int>(c.size());
      for (int t = 0; t < 2 * k; ++t) {
        auto img = blank();
        for (int i = 0; i < k; ++i) {
          const int j = t < k ? (i + t) % k : ((t - k - i) % k + k) % k;
          img[c[i]] = c[j];
        }
        out.push_back(std::move(img));
      }
      break;
    }
    case Skeleton::Kind::kTheta: {
      for (int flip = 0; flip < 2; ++flip) {
        std::array<int, 3> sigma{0, 1, 2};
        do {
          bool ok = true;
          for (int i = 0; i < 3; ++i) {
            ok = ok && s.paths[i].size() == s.paths[sigma[i]].size();
          }
          if (!ok) continue;
          auto img = blank();
          img[s.hubs[0]] = s.hubs[flip];
          img[s.hubs[1]] = s.hubs[1 - flip];
          for (int i = 0; i < 3; ++i) {
            place(img, s.paths[i], s.paths[sigma[i]], flip == 1);
          }
          out.push_back(std::move(img));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
      }
      break;
    }
    case Skeleton::Kind::kSharedVertex:
    case Skeleton::Kind::kDumbbell: {
      const bool dumbbell = s.kind == Skeleton::Kind::kDumbbell;
      for (int t = 0; t < 8; ++t) {
        const bool swap = (t >> 2) & 1;
        const bool refl[2] = {static_cast<bool>(t & 1),
                              static_cast<bool>((t >> 1) & 1)};
        if (swap && s.paths[0].size() != s.paths[1].size()) continue;
        auto img = blank();
        for (int c = 0; c < 2; ++c) {
          place(img, s.paths[c], s.paths[swap ? 1 - c : c], refl[c]);
        }
        if (dumbbell) {
          img[s.hubs[0]] = s.hubs[swap ? 1 : 0];
          img[s.hubs[1]] = s.hubs[swap ? 0 : 1];
          place(img, s.paths[2], s.paths[2], swap);
        } else {
          img[s.hubs[0]] = s.hubs[0];
        }
        out.push_back(std::move(img));
      }
      break;
    }
  }
  return out;
}

bool is_abelian(const std::vector<Permutation>& gens) {
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      if (a * b != b * a) return false;
    }
  }
  return true;
}

bool all_involutions(const std::vector<Permutation>& elems) {
  return std::all_of(elems.begin(), elems.end(),
                     [](const Permutation& p) { return (p * p).is_identity(); });
}

SmallTop name_top(const Decomposition& d, const TopSymmetry& q) {
  const int size = static_cast<int>(q.elements.size());
  if (d.skeleton.kind == Skeleton::Kind::kSingleCycle) {
    const auto& c = d.skeleton.paths[0];
    const int k = static_cast<int>(c.size());
    std::vector<int> pos(d.core.size());
    for (int i = 0; i < k; ++i) pos[d.core_index[c[i]]] = i;
    bool reflection = false;
    for (const auto& p : q.elements) {
      const int a = pos[p[d.core_index[c[0]]]];
      const int b = pos[p[d.core_index[c[1]]]];
      if ((b - a + k) % k != 1) reflection = true;
    }
    if (!reflection) return SmallTop::cyclic(size);
    if (size == 2) return SmallTop::cyclic(2);
    return SmallTop::dihedral(size / 2);
  }
  switch (size) {
    case 1: return SmallTop::trivial();
    case 2: return SmallTop::cyclic(2);
    case 4: return all_involutions(q.elements) ? SmallTop::klein() : SmallTop::cyclic(4);
    case 6: return is_abelian(q.generators) ? SmallTop::cyclic(6) : SmallTop::s3();
    case 8: return SmallTop::z2_wr_z2();
    case 12: return SmallTop::s3_x_z2();
    default: return SmallTop::cyclic(size);
  }
}

}  // namespace

TopSymmetry top_symmetries(const Decomposition& d) {
  std::vector<AhuCode> code;
  for (const auto& t : d.attached) code.push_back(Rooting(t.tree, 0).code(0));
  TopSymmetry q;
  for (const auto& img : candidates(d)) {
    std::vector<int> perm(d.core.size());
    bool ok = true;
    for (std::size_t i = 0; i < d.core.size() && ok; ++i) {
      perm[i] = d.core_index[img[d.core[i]]];
      ok = code[i] == code[perm[i]];
    }
    if (ok) q.elements.emplace_back(std::move(perm));
  }
  std::unordered_set<Permutation, PermutationHash> closure{q.elements.front()};
  for (const auto& e : q.elements) {
    if (closure.count(e)) continue;
    q.generators.push_back(e);
    const auto all = closure_elements(q.generators, q.elements.size());
    closure = {all->begin(), all->end()};
  }
  if (closure.size() != q.elements.size()) {
    throw std::logic_error("skeleton symmetries are not closed");
  }
  q.top = name_top(d, q);
  return q;
}

}  // namespace bicaut
