#include "bicaut/realizer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bicaut/tree.hpp"

namespace bicaut {

std::vector<Graph> asymmetric_trees(int k, const CatalogConstraints& c) {
  std::set<std::string> excluded;
  for (const auto& t : c.not_isomorphic_to) excluded.insert(free_tree_code(t));
  std::vector<Graph> out;
  if (k <= 0) return out;
  for (int n = std::max(c.min_size, 1); n <= c.max_size; ++n) {
    for (auto& t : enumerate_trees(n)) {
      if (!aut_tree(t).is_trivial() || excluded.count(free_tree_code(t))) continue;
      out.push_back(std::move(t));
      if (static_cast<int>(out.size()) == k) return out;
    }
  }
  throw DomainError("only " + std::to_string(out.size()) +
                    " asymmetric trees satisfy the constraints up to " +
                    std::to_string(c.max_size) + " vertices");
}

namespace {

void check_budget(const Graph& g) {
  if (g.order() > kRealizationBudget) {
    throw SizeBudgetError("realization needs more than " +
                          std::to_string(kRealizationBudget) + " vertices");
  }
}

// Root, then the tree hanging below it.
struct Rooted {
  Graph tree;
  Vertex root = 0;
};

Rooted with_children(const std::vector<Rooted>& children) {
  Rooted r{Graph(1), 0};
  for (const auto& c : children) {
    r.tree = link(r.tree, r.root, c.tree, c.root).graph;
    check_budget(r.tree);
  }
  return r;
}

// A fresh vertex above `child` carrying a pendant path of `length` vertices.
Rooted padded(const Rooted& child, int length) {
  Graph path = graphs::path(length);
  Rooted x = with_children({child});
  x.tree = link(x.tree, x.root, path, 0).graph;
  check_budget(x.tree);
  return x;
}

// Stabiliser of the root equals e (normalized, in T).
Rooted rooted(const GroupExpr& e) {
  if (e.is_trivial()) return {Graph(1), 0};
  if (const auto* s = get_if<expr::Sym>(e)) {
    return with_children(std::vector<Rooted>(s->n, Rooted{Graph(1), 0}));
  }
  if (const auto* w = get_if<expr::WreathSym>(e)) {
    return with_children(std::vector<Rooted>(w->n, rooted(w->base)));
  }
  const auto& factors = get_if<expr::Product>(e)->factors;
  std::vector<Rooted> children;
  std::map<AhuCode, int> seen;
  for (const auto& f : factors) {
    Rooted c = rooted(f);
    const int copy = seen[Rooting(c.tree, c.root).code(c.root)]++;
    children.push_back(copy == 0 ? std::move(c) : padded(c, copy));
  }
  return with_children(children);
}

int height(const Graph& t, Vertex root) {
  const auto dist = bfs_distances(t, root);
  return *std::max_element(dist.begin(), dist.end());
}

bool anchor_fixed(const Graph& t, Vertex anchor) {
  const auto fixed = fix_info(t).fixed;
  return std::binary_search(fixed.begin(), fixed.end(), anchor);
}

}  // namespace

TreeRealization realize_tree(const GroupExpr& e) {
  const GroupExpr n = normalize(e);
  if (!in_tree_class(n)) {
    throw OutsideClassError("'" + print_expr(n) + "' is not a tree group");
  }
  Rooted r = rooted(n);
  if (anchor_fixed(r.tree, r.root)) return {r.tree, r.root};
  // A pendant path longer than every other branch pins the root.
  for (int length = height(r.tree, r.root) + 1;; ++length) {
    Graph t = link(r.tree, r.root, graphs::path(length), 0).graph;
    check_budget(t);
    if (anchor_fixed(t, r.root)) return {t, r.root};
  }
}

TreeRealization fixed_anchor(const Graph& t) {
  const FixInfo info = fix_info(t);
  if (!info.fixed.empty()) {
    const auto c = center(t);
    return {t, c.size() == 1 ? c[0] : info.fixed.front()};
  }
  const BarTree bar = bar_construction(t);
  return {bar.tree, bar.v_t};
}

namespace {

class GadgetBuilder {
 public:
  GadgetBuilder(Graph base, std::vector<std::pair<std::string, Vertex>> slots)
      : g_(std::move(base)) {
    for (auto& [name, v] : slots) slots_[name] = v;
    manifest_.push_back({"gadget", "gadget", "", 0, g_.order() - 1});
  }

  // Splices t at a gadget slot through a vertex whose stabiliser is Aut(t).
  // Decorations only need a rigid rooted shape and keep their anchor.
  void attach(const std::string& slot, const TreeRealization& t,
              const std::string& term, const std::string& role) {
    if (t.tree.order() == 1) return;
    const TreeRealization a = role == "decoration" || anchor_fixed(t.tree, t.anchor)
                                  ? t
                                  : fixed_anchor(t.tree);
    const int before = g_.order();
    g_ = splice(g_, slots_.at(slot), a.tree, a.anchor).graph;
    check_budget(g_);
    manifest_.push_back({term, role, slot, before, g_.order() - 1});
  }

  Realization finish() { return {std::move(g_), std::move(manifest_)}; }

 private:
  Graph g_;
  std::map<std::string, Vertex> slots_;
  std::vector<ManifestEntry> manifest_;
};

// C4 (O, p1, p2, p3) and C5 (O, q1..q4) sharing O. Decorations at p1 and q1
// break both reflections; p2 takes the payload.
Realization tree_gadget(const GroupExpr& e, const RealizeOptions& options) {
  Graph base(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                 {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
  GadgetBuilder b(base, {{"O", 0}, {"p1", 1}, {"p2", 2}, {"p3", 3},
                         {"q1", 4}, {"q2", 5}, {"q3", 6}, {"q4", 7}});
  if (options.catalog_decorations) {
    const auto lambda = asymmetric_trees(2);
    b.attach("p1", {lambda[0], 0}, "decoration", "decoration");
    b.attach("q1", {lambda[1], 0}, "decoration", "decoration");
  } else {
    b.attach("p1", {graphs::path(2), 0}, "decoration", "decoration");
    b.attach("q1", {graphs::path(2), 0}, "decoration", "decoration");
  }
  if (!e.is_trivial()) b.attach("p2", realize_tree(e), print_expr(e), "payload");
  return b.finish();
}

// Theta u -> a1 h1 a2 -> v, u -> a3 h2 a4 -> v, u -> z -> v.
Realization klein_gadget(const GroupExpr& c, const GroupExpr& d,
                         const GroupExpr& h, const GroupExpr& k) {
  Graph base(9, {{0, 2}, {2, 3}, {3, 4}, {4, 1},
                 {0, 5}, {5, 6}, {6, 7}, {7, 1},
                 {0, 8}, {8, 1}});
  GadgetBuilder b(base, {{"u", 0}, {"v", 1}, {"a1", 2}, {"h1", 3}, {"a2", 4},
                         {"a3", 5}, {"h2", 6}, {"a4", 7}, {"z", 8}});
  const auto td = realize_tree(d);
  const auto th = realize_tree(h);
  const auto tk = realize_tree(k);
  for (const char* s : {"a1", "a2", "a3", "a4"}) b.attach(s, td, print_expr(d), "D");
  for (const char* s : {"h1", "h2"}) b.attach(s, th, print_expr(h), "H");
  for (const char* s : {"u", "v"}) b.attach(s, tk, print_expr(k), "K");
  b.attach("z", realize_tree(c), print_expr(c), "C");
  return b.finish();
}

}  // namespace

Realization realize(const GroupExpr& e, const RealizeOptions& options) {
  const GroupExpr n = normalize(e);
  const ClassTag tag = classify_class(n);
  if (tag == ClassTag::kOutsideS) {
    throw OutsideClassError("'" + print_expr(n) + "' is outside S");
  }
  if (tag == ClassTag::kT) return tree_gadget(n, options);
  std::vector<GroupExpr> factors{n};
  if (const auto* p = get_if<expr::Product>(n)) factors = p->factors;
  std::vector<GroupExpr> rest;
  GroupExpr d, h, k;
  for (const auto& f : factors) {
    if (const auto* w = get_if<expr::WreathK4>(f)) {
      d = w->base;
    } else if (const auto* b = get_if<expr::B2Semi>(f)) {
      d = b->d;
      h = b->h;
      k = b->k;
    } else {
      rest.push_back(f);
    }
  }
  return klein_gadget(normalize(GroupExpr::product(rest)), d, h, k);
}

std::string format_manifest(const std::vector<ManifestEntry>& manifest) {
  std::ostringstream out;
  for (const auto& m : manifest) {
    out << "term=" << m.term << " role=" << m.role
        << " slot=" << (m.slot.empty() ? "-" : m.slot) << " vertices=" << m.first
        << '-' << m.last << '\n';
  }
  return out.str();
}

}  // namespace bicaut
