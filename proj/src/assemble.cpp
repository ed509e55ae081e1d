#include <algorithm>
#include <optional>
#include <sstream>

#include "bicaut/bicyclic.hpp"
#include "bicaut/oracle.hpp"

namespace bicaut {

namespace {

using Kind = Skeleton::Kind;

GroupExpr prod(std::vector<GroupExpr> factors) {
  return normalize(GroupExpr::product(std::move(factors)));
}

GroupExpr wr(const GroupExpr& base, int n) {
  return normalize(GroupExpr::wreath(base, n));
}

// Fibres, codes and skeleton lookups shared by the assembly rules.
class Assembly {
 public:
  Assembly(const Decomposition& d, const TopSymmetry& q) : d_(d), q_(q) {
    for (const auto& t : d.attached) {
      Rooting r(t.tree, 0);
      fiber_.push_back(r.group(0));
      code_.push_back(r.code(0));
    }
  }

  GroupExpr run() {
    BigInt expected = q_.elements.size();
    for (const auto& f : fiber_) expected *= order(f);
    std::optional<GroupExpr> e = structural();
    if (!e) e = generic();
    if (e && order(*e) == expected) return *e;
    return fallback();
  }

  const GroupExpr& F(Vertex v) const { return fiber_[d_.core_index[v]]; }
  const AhuCode& code(Vertex v) const { return code_[d_.core_index[v]]; }

  bool palindrome(const std::vector<Vertex>& s) const {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (code(s[j]) != code(s[s.size() - 1 - j])) return false;
    }
    return true;
  }

  bool same_codes(const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                  bool reversed) const {
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (code(a[j]) != code(b[reversed ? b.size() - 1 - j : j])) return false;
    }
    return true;
  }

  bool matches(const std::vector<Vertex>& a, const std::vector<Vertex>& b) const {
    return same_codes(a, b, false) || same_codes(a, b, true);
  }

  GroupExpr all(const std::vector<Vertex>& s) const {
    std::vector<GroupExpr> f;
    for (Vertex v : s) f.push_back(F(v));
    return prod(std::move(f));
  }

  // Fibres of the first half of a sequence, and its middle (trivial when the
  // length is even).
  GroupExpr half(const std::vector<Vertex>& s) const {
    return all(std::vector<Vertex>(s.begin(), s.begin() + s.size() / 2));
  }
  GroupExpr mid(const std::vector<Vertex>& s) const {
    return s.size() % 2 ? F(s[s.size() / 2]) : GroupExpr();
  }

  // A cycle hanging from a fixed hub, with its own reflection when allowed.
  GroupExpr cycle_group(const std::vector<Vertex>& s) const {
    if (!palindrome(s)) return all(s);
    return prod({wr(half(s), 2), mid(s)});
  }

 private:
  std::optional<GroupExpr> structural() const {
    const Skeleton& s = d_.skeleton;
    switch (s.kind) {
      case Kind::kSharedVertex: {
        const auto& c0 = s.paths[0];
        const auto& c1 = s.paths[1];
        GroupExpr cycles = matches(c0, c1)
                               ? wr(cycle_group(c0), 2)
                               : prod({cycle_group(c0), cycle_group(c1)});
        return prod({F(s.hubs[0]), cycles});
      }
      case Kind::kDumbbell: {
        const auto& c0 = s.paths[0];
        const auto& c1 = s.paths[1];
        const auto& bridge = s.paths[2];
        const Vertex p = s.hubs[0], q = s.hubs[1];
        const GroupExpr ep = prod({F(p), cycle_group(c0)});
        if (code(p) == code(q) && palindrome(bridge) && matches(c0, c1)) {
          return prod({wr(prod({ep, half(bridge)}), 2), mid(bridge)});
        }
        return prod({ep, F(q), cycle_group(c1), all(bridge)});
      }
      case Kind::kTheta: return theta();
      case Kind::kSingleCycle: return cycle();
    }
    return std::nullopt;
  }

  std::optional<GroupExpr> theta() const {
    const Skeleton& s = d_.skeleton;
    const Vertex u = s.hubs[0], v = s.hubs[1];
    const bool flips = std::any_of(
        q_.elements.begin(), q_.elements.end(), [&](const Permutation& p) {
          return p[d_.core_index[u]] != d_.core_index[u];
        });
    if (!flips) {
      std::vector<GroupExpr> f{F(u), F(v)};
      std::vector<bool> done(3, false);
      for (int i = 0; i < 3; ++i) {
        if (done[i]) continue;
        int k = 0;
        for (int j = i; j < 3; ++j) {
          if (!done[j] && same_codes(s.paths[i], s.paths[j], false)) {
            done[j] = true;
            ++k;
          }
        }
        f.push_back(k == 1 ? all(s.paths[i]) : wr(all(s.paths[i]), k));
      }
      return prod(std::move(f));
    }
    if (q_.elements.size() == 12) {
      const auto& p = s.paths[0];
      if (!half(p).is_trivial()) return std::nullopt;
      return prod({wr(mid(p), 3), wr(F(u), 2)});
    }
    return std::nullopt;
  }

  std::optional<GroupExpr> cycle() const {
    const auto& c = d_.skeleton.paths[0];
    const std::size_t size = q_.elements.size();
    if (c.size() == 4 && size == 8) return wr(wr(F(c[0]), 2), 2);
    if (c.size() == 3 && size == 6) return wr(F(c[0]), 3);
    return std::nullopt;
  }

  std::optional<GroupExpr> generic() const {
    const std::size_t size = q_.elements.size();
    if (size == 1) return prod(fiber_);
    if (size == 2) {
      return normalize(GroupExpr::semi(fiber_, SmallTop::cyclic(2),
                                       {q_.elements[1].image()}));
    }
    if (q_.top == SmallTop::klein()) {
      if (auto e = klein()) return e;
    }
    // Every moved slot has a trivial fibre: the top splits off directly.
    std::vector<GroupExpr> fixed;
    for (const auto& orbit : orbits_of(q_.generators, fiber_.size())) {
      if (orbit.size() == 1) {
        fixed.push_back(fiber_[orbit[0]]);
      } else {
        for (int i : orbit) {
          if (!fiber_[i].is_trivial()) return std::nullopt;
        }
      }
    }
    GroupExpr top = normalize(GroupExpr::semi({}, q_.top));
    if (!in_tree_class(top) && !get_if<expr::Dihedral>(top)) return std::nullopt;
    fixed.push_back(top);
    return prod(std::move(fixed));
  }

  // Klein top: regular orbits give D, orbits of size 2 are sorted by the
  // involution that fixes them into H and K, fixed slots give C.
  std::optional<GroupExpr> klein() const {
    std::vector<GroupExpr> c, d;
    std::vector<std::vector<GroupExpr>> kinds(4);
    for (const auto& orbit : orbits_of(q_.generators, fiber_.size())) {
      const int rep = orbit[0];
      if (orbit.size() == 1) {
        c.push_back(fiber_[rep]);
      } else if (orbit.size() == 4) {
        d.push_back(fiber_[rep]);
      } else {
        for (int t = 1; t < 4; ++t) {
          if (q_.elements[t][rep] == rep) kinds[t].push_back(fiber_[rep]);
        }
      }
    }
    std::vector<GroupExpr> hk;
    for (int t = 1; t < 4; ++t) {
      GroupExpr k = prod(kinds[t]);
      if (!k.is_trivial()) hk.push_back(k);
    }
    if (hk.size() > 2) return std::nullopt;
    hk.resize(2);
    c.push_back(GroupExpr::b2(prod(d), hk[0], hk[1]));
    return prod(std::move(c));
  }

  GroupExpr fallback() const {
    std::vector<std::vector<int>> action;
    for (const auto& g : q_.generators) action.push_back(g.image());
    return normalize(GroupExpr::semi(fiber_, q_.top, action));
  }

  const Decomposition& d_;
  const TopSymmetry& q_;
  std::vector<GroupExpr> fiber_;
  std::vector<AhuCode> code_;
};

bool moves_any(const TopSymmetry& q, const Decomposition& d,
               const std::vector<Vertex>& fixed_part) {
  // True if some element fixes every vertex outside `fixed_part` and moves
  // a vertex of it.
  std::vector<bool> inside(d.core.size(), false);
  for (Vertex v : fixed_part) inside[d.core_index[v]] = true;
  for (const auto& p : q.elements) {
    bool moves = false, stays = true;
    for (std::size_t i = 0; i < d.core.size(); ++i) {
      if (p[i] == static_cast<int>(i)) continue;
      if (inside[i]) {
        moves = true;
      } else {
        stays = false;
      }
    }
    if (moves && stays) return true;
  }
  return false;
}

}  // namespace

GroupExpr assemble_aut(const Decomposition& d) {
  if (d.skeleton.kind == Kind::kSingleCycle) {
    throw DomainError("assemble_aut needs a bicyclic decomposition");
  }
  const TopSymmetry q = top_symmetries(d);
  return Assembly(d, q).run();
}

GroupExpr aut_unicyclic(const Decomposition& d) {
  if (d.skeleton.kind != Kind::kSingleCycle) {
    throw DomainError("aut_unicyclic needs a unicyclic decomposition");
  }
  const TopSymmetry q = top_symmetries(d);
  return Assembly(d, q).run();
}

std::string case_label(const Decomposition& d, const TopSymmetry& q) {
  const Skeleton& s = d.skeleton;
  const std::size_t size = q.elements.size();
  switch (s.kind) {
    case Kind::kSingleCycle: return "unicyclic";
    case Kind::kTheta: {
      if (q.top == SmallTop::klein()) return "lem2";
      if (size == 2) {
        const int u = d.core_index[s.hubs[0]];
        if (q.elements[1][u] != u) return "l2.3";
      }
      return "generic";
    }
    case Kind::kSharedVertex: {
      const int c0 = d.core_index[s.paths[0][0]];
      bool bare = true;
      for (const auto& p : {s.paths[0], s.paths[1]}) {
        for (Vertex v : p) bare = bare && d.attached[d.core_index[v]].tree.order() == 1;
      }
      if (bare) return s.paths[0].size() == s.paths[1].size() ? "M1" : "M6";
      bool swap = false;
      for (const auto& p : q.elements) {
        const Vertex image = d.core[p[c0]];
        swap = swap || std::find(s.paths[1].begin(), s.paths[1].end(), image) !=
                           s.paths[1].end();
      }
      if (swap) {
        if (size != 8) return "M4";
        Rooting first(d.attached[c0].tree, 0);
        for (const auto& p : {s.paths[0], s.paths[1]}) {
          for (Vertex v : p) {
            if (Rooting(d.attached[d.core_index[v]].tree, 0).code(0) !=
                first.code(0)) {
              return "M3";
            }
          }
        }
        return "M2";
      }
      const bool r0 = moves_any(q, d, s.paths[0]);
      const bool r1 = moves_any(q, d, s.paths[1]);
      if (r0 && r1) return "M7";
      if (r0 || r1) return "M8";
      return "M5";
    }
    case Kind::kDumbbell: {
      if (size == 8) return "N1";
      const bool r0 = moves_any(q, d, s.paths[0]);
      const bool r1 = moves_any(q, d, s.paths[1]);
      const int p = d.core_index[s.hubs[0]];
      const bool swap = std::any_of(q.elements.begin(), q.elements.end(),
                                    [&](const Permutation& e) { return e[p] != p; });
      if (r0 && r1 && !swap) return "N2";
      if (swap && size == 2) return "N3";
      return "generic";
    }
  }
  return "generic";
}

std::vector<Permutation> emit_generators(const Decomposition& d,
                                         const TopSymmetry& q) {
  std::vector<Rooting> roots;
  for (const auto& t : d.attached) roots.emplace_back(t.tree, 0);
  auto identity = [&]() {
    std::vector<Vertex> img(d.order);
    for (Vertex v = 0; v < d.order; ++v) img[v] = v;
    return img;
  };
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < d.attached.size(); ++i) {
    const auto& map = d.attached[i].to_global;
    for (const auto& local : roots[i].generators()) {
      auto img = identity();
      for (std::size_t a = 0; a < map.size(); ++a) img[map[a]] = map[local[a]];
      gens.emplace_back(std::move(img));
    }
  }
  for (const auto& g : q.generators) {
    auto img = identity();
    for (std::size_t i = 0; i < d.core.size(); ++i) {
      const std::size_t j = g[i];
      const auto& from = d.attached[i];
      const auto& to = d.attached[j];
      std::vector<Vertex> local(from.tree.order());
      roots[i].map_onto(0, roots[j], 0, local);
      for (std::size_t a = 0; a < local.size(); ++a) {
        img[from.to_global[a]] = to.to_global[local[a]];
      }
    }
    gens.emplace_back(std::move(img));
  }
  return gens;
}

Report analyze(const Graph& g, std::uint64_t closure_cap) {
  Report r;
  r.family = classify_family(g);
  const int c = r.family.cyclomatic;
  if (c >= 3) {
    throw DomainError("cyclomatic number " + std::to_string(c) + " unsupported");
  }
  if (c == 0) {
    r.expr = aut_tree(g);
    r.generators = tree_generators(g);
    r.case_label = "tree";
  } else {
    const Decomposition d = extract_decomposition(g);
    const TopSymmetry q = top_symmetries(d);
    r.expr = Assembly(d, q).run();
    r.generators = emit_generators(d, q);
    r.skeleton = d.skeleton.name();
    r.lengths = d.skeleton.lengths();
    r.case_label = case_label(d, q);
  }
  r.order = order(r.expr);
  r.class_tag = classify_class(r.expr);
  r.status = "verified";
  for (const auto& p : r.generators) {
    if (!oracle::is_automorphism(g, p)) r.status = "failed";
  }
  if (r.status == "verified") {
    if (r.order > closure_cap) {
      r.status = "generators-verified-order-unchecked";
    } else {
      const auto closure = closure_order(r.generators, closure_cap);
      if (!closure || BigInt(*closure) != r.order) r.status = "failed";
    }
  }
  return r;
}

std::string format_report(const Report& r) {
  std::ostringstream out;
  out << "family=" << r.family.to_string() << " skeleton=" << r.skeleton
      << " lengths=";
  if (r.lengths.empty()) out << '-';
  for (std::size_t i = 0; i < r.lengths.size(); ++i) {
    out << (i ? "," : "") << r.lengths[i];
  }
  out << " expr=" << print_expr(r.expr) << " order=" << r.order
      << " class=" << to_string(r.class_tag) << " case=" << r.case_label
      << " generators=" << r.generators.size() << " status=" << r.status;
  return out.str();
}

}  // namespace bicaut
