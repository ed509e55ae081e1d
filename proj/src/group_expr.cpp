#include "bicaut/group_expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "bicaut/error.hpp"

namespace bicaut {

SmallTop SmallTop::cyclic(int k) {
  if (k < 1) throw std::invalid_argument("cyclic order must be positive");
  if (k == 1) return trivial();
  return {Kind::kCyclic, k};
}

SmallTop SmallTop::dihedral(int k) {
  if (k < 2) throw std::invalid_argument("dihedral degree must be >= 2");
  if (k == 2) return klein();
  return {Kind::kDihedral, k};
}

BigInt SmallTop::order() const {
  switch (kind) {
    case Kind::kTrivial: return 1;
    case Kind::kCyclic: return k;
    case Kind::kDihedral: return 2 * k;
    case Kind::kKlein: return 4;
    case Kind::kZ2wrZ2: return 8;
    case Kind::kS3: return 6;
    case Kind::kS3xZ2: return 12;
  }
  return 1;
}

std::string SmallTop::name() const {
  switch (kind) {
    case Kind::kTrivial: return "1";
    case Kind::kCyclic: return "Z" + std::to_string(k);
    case Kind::kDihedral: return "D" + std::to_string(k);
    case Kind::kKlein: return "Z2xZ2";
    case Kind::kZ2wrZ2: return "Z2wrZ2";
    case Kind::kS3: return "S3";
    case Kind::kS3xZ2: return "S3xZ2";
  }
  return "1";
}

GroupExpr GroupExpr::from_node(ExprNode node) {
  return GroupExpr(std::make_shared<const ExprNode>(std::move(node)));
}

GroupExpr::GroupExpr() {
  static const auto shared =
      std::make_shared<const ExprNode>(ExprNode{expr::Trivial{}});
  node_ = shared;
}

GroupExpr GroupExpr::trivial() { return GroupExpr(); }

GroupExpr GroupExpr::sym(int n) {
  if (n < 2) throw std::invalid_argument("Sym(n) needs n >= 2");
  return from_node({expr::Sym{n}});
}

GroupExpr GroupExpr::sym_or_trivial(int n) {
  return n >= 2 ? sym(n) : trivial();
}

GroupExpr GroupExpr::product(std::vector<GroupExpr> factors) {
  return from_node({expr::Product{std::move(factors)}});
}

GroupExpr GroupExpr::wreath(GroupExpr base, int n) {
  if (n < 2) throw std::invalid_argument("wreath degree needs n >= 2");
  return from_node({expr::WreathSym{std::move(base), n}});
}

GroupExpr GroupExpr::wreath_k4(GroupExpr base) {
  return from_node({expr::WreathK4{std::move(base)}});
}

GroupExpr GroupExpr::b2(GroupExpr d, GroupExpr h, GroupExpr k) {
  return from_node({expr::B2Semi{std::move(d), std::move(h), std::move(k)}});
}

GroupExpr GroupExpr::semi(std::vector<GroupExpr> slots, SmallTop top,
                          std::vector<std::vector<int>> action) {
  for (const auto& g : action) {
    if (g.size() != slots.size()) {
      throw std::invalid_argument("top action must permute the slots");
    }
  }
  return from_node({expr::SemiTop{std::move(slots), top, std::move(action)}});
}

GroupExpr GroupExpr::dihedral(int n) {
  if (n < 3) throw std::invalid_argument("dih(n) needs n >= 3");
  return from_node({expr::Dihedral{n}});
}

bool GroupExpr::is_trivial() const {
  return std::holds_alternative<expr::Trivial>(node_->value);
}

// ---------------------------------------------------------------- order

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

}  // namespace

BigInt order(const GroupExpr& e) {
  return std::visit(
      Overloaded{
          [](const expr::Trivial&) -> BigInt { return 1; },
          [](const expr::Sym& s) -> BigInt { return factorial(s.n); },
          [](const expr::Product& p) -> BigInt {
            BigInt r = 1;
            for (const auto& f : p.factors) r *= order(f);
            return r;
          },
          [](const expr::WreathSym& w) -> BigInt {
            return boost::multiprecision::pow(order(w.base), w.n) *
                   factorial(w.n);
          },
          [](const expr::WreathK4& w) -> BigInt {
            return boost::multiprecision::pow(order(w.base), 4) * 4;
          },
          [](const expr::B2Semi& b) -> BigInt {
            return boost::multiprecision::pow(order(b.d), 4) *
                   boost::multiprecision::pow(order(b.h), 2) *
                   boost::multiprecision::pow(order(b.k), 2) * 4;
          },
          [](const expr::SemiTop& s) -> BigInt {
            BigInt r = s.top.order();
            for (const auto& f : s.slots) r *= order(f);
            return r;
          },
          [](const expr::Dihedral& d) -> BigInt { return 2 * d.n; },
      },
      e.node().value);
}

// ---------------------------------------------------------------- print

std::string print_expr(const GroupExpr& e) {
  auto product_text = [](const std::vector<GroupExpr>& factors) {
    if (factors.empty()) return std::string("1");
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += '*';
      s += print_expr(factors[i]);
    }
    return s;
  };
  return std::visit(
      Overloaded{
          [](const expr::Trivial&) -> std::string { return "1"; },
          [](const expr::Sym& s) { return "S" + std::to_string(s.n); },
          [&](const expr::Product& p) { return product_text(p.factors); },
          [](const expr::WreathSym& w) {
            return "wr(" + print_expr(w.base) + ",S" + std::to_string(w.n) +
                   ")";
          },
          [](const expr::WreathK4& w) {
            return "wrK4(" + print_expr(w.base) + ")";
          },
          [](const expr::B2Semi& b) {
            return "b2(" + print_expr(b.d) + "," + print_expr(b.h) + "," +
                   print_expr(b.k) + ")";
          },
          [&](const expr::SemiTop& s) {
            return "semi(" + product_text(s.slots) + "," + s.top.name() + ")";
          },
          [](const expr::Dihedral& d) {
            return "dih(" + std::to_string(d.n) + ")";
          },
      },
      e.node().value);
}

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  return print_expr(a) == print_expr(b);
}

// ------------------------------------------------------------ normalize

namespace {

GroupExpr normalized_product(std::vector<GroupExpr> factors) {
  std::vector<GroupExpr> flat;
  for (auto& f : factors) {
    GroupExpr n = normalize(f);
    if (n.is_trivial()) continue;
    if (const auto* p = get_if<expr::Product>(n)) {
      flat.insert(flat.end(), p->factors.begin(), p->factors.end());
    } else {
      flat.push_back(std::move(n));
    }
  }
  if (flat.empty()) return GroupExpr::trivial();
  if (flat.size() == 1) return flat.front();
  std::vector<std::pair<std::string, GroupExpr>> keyed;
  for (auto& f : flat) keyed.emplace_back(print_expr(f), std::move(f));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  flat.clear();
  for (auto& [k, f] : keyed) flat.push_back(std::move(f));
  return GroupExpr::product(std::move(flat));
}

GroupExpr normalized_wreath(const GroupExpr& base, int n) {
  GroupExpr b = normalize(base);
  if (b.is_trivial()) return GroupExpr::sym(n);
  return GroupExpr::wreath(std::move(b), n);
}

// The top as a plain expression when it has one in T (or a dihedral node).
std::optional<GroupExpr> top_expression(const SmallTop& top) {
  using K = SmallTop::Kind;
  const GroupExpr s2 = GroupExpr::sym(2);
  switch (top.kind) {
    case K::kTrivial: return GroupExpr::trivial();
    case K::kCyclic:
      if (top.k == 2) return s2;
      return std::nullopt;
    case K::kKlein: return normalized_product({s2, s2});
    case K::kZ2wrZ2: return GroupExpr::wreath(s2, 2);
    case K::kS3: return GroupExpr::sym(3);
    case K::kS3xZ2: return normalized_product({s2, GroupExpr::sym(3)});
    case K::kDihedral: return normalize(GroupExpr::dihedral(top.k));
  }
  return std::nullopt;
}

GroupExpr normalized_semi(const expr::SemiTop& s) {
  std::vector<GroupExpr> slots;
  for (const auto& f : s.slots) slots.push_back(normalize(f));
  if (s.top.order() == 1) return normalized_product(std::move(slots));
  if (!s.action.empty() && s.top.order() == 2) {
    const auto& g = s.action.front();
    std::vector<GroupExpr> fixed, reps;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == static_cast<int>(i)) {
        fixed.push_back(slots[i]);
      } else if (g[i] > static_cast<int>(i)) {
        reps.push_back(slots[i]);
      }
    }
    fixed.push_back(
        normalized_wreath(normalized_product(std::move(reps)), 2));
    return normalized_product(std::move(fixed));
  }
  GroupExpr base = normalized_product(std::move(slots));
  if (base.is_trivial()) {
    if (auto t = top_expression(s.top)) return *t;
    return GroupExpr::semi({}, s.top);
  }
  return GroupExpr::semi({std::move(base)}, s.top);
}

}  // namespace

GroupExpr normalize(const GroupExpr& e) {
  return std::visit(
      Overloaded{
          [&](const expr::Trivial&) { return e; },
          [&](const expr::Sym&) { return e; },
          [](const expr::Product& p) { return normalized_product(p.factors); },
          [](const expr::WreathSym& w) {
            return normalized_wreath(w.base, w.n);
          },
          [](const expr::WreathK4& w) {
            GroupExpr b = normalize(w.base);
            if (b.is_trivial()) {
              return normalized_product({GroupExpr::sym(2), GroupExpr::sym(2)});
            }
            return GroupExpr::wreath_k4(std::move(b));
          },
          [](const expr::B2Semi& b) {
            GroupExpr d = normalize(b.d);
            GroupExpr h = normalize(b.h);
            GroupExpr k = normalize(b.k);
            if (d.is_trivial()) {
              return normalized_product(
                  {normalized_wreath(h, 2), normalized_wreath(k, 2)});
            }
            if (h.is_trivial() && k.is_trivial()) {
              return GroupExpr::wreath_k4(std::move(d));
            }
            if (print_expr(k) < print_expr(h)) std::swap(h, k);
            return GroupExpr::b2(std::move(d), std::move(h), std::move(k));
          },
          [](const expr::SemiTop& s) { return normalized_semi(s); },
          [&](const expr::Dihedral& d) {
            if (d.n == 3) return GroupExpr::sym(3);
            if (d.n == 4) return GroupExpr::wreath(GroupExpr::sym(2), 2);
            return e;
          },
      },
      e.node().value);
}

// ------------------------------------------------------------- classify

namespace {

bool tree_shaped(const GroupExpr& e) {
  return std::visit(
      Overloaded{
          [](const expr::Trivial&) { return true; },
          [](const expr::Sym&) { return true; },
          [](const expr::Product& p) {
            return std::all_of(p.factors.begin(), p.factors.end(), tree_shaped);
          },
          [](const expr::WreathSym& w) { return tree_shaped(w.base); },
          [](const auto&) { return false; },
      },
      e.node().value);
}

}  // namespace

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::kT: return "T";
    case ClassTag::kB1: return "B1";
    case ClassTag::kB2: return "B2";
    case ClassTag::kOutsideS: return "OutsideS";
  }
  return "OutsideS";
}

bool in_tree_class(const GroupExpr& e) { return tree_shaped(normalize(e)); }

ClassTag classify_class(const GroupExpr& e) {
  const GroupExpr n = normalize(e);
  if (tree_shaped(n)) return ClassTag::kT;
  std::vector<GroupExpr> factors{n};
  if (const auto* p = get_if<expr::Product>(n)) factors = p->factors;
  const GroupExpr* special = nullptr;
  for (const auto& f : factors) {
    if (tree_shaped(f)) continue;
    if (special) return ClassTag::kOutsideS;
    special = &f;
  }
  if (const auto* w = get_if<expr::WreathK4>(*special)) {
    if (tree_shaped(w->base)) return ClassTag::kB1;
  }
  if (const auto* b = get_if<expr::B2Semi>(*special)) {
    if (tree_shaped(b->d) && tree_shaped(b->h) && tree_shaped(b->k)) {
      return ClassTag::kB2;
    }
  }
  return ClassTag::kOutsideS;
}

// ---------------------------------------------------------------- parse

namespace {

constexpr int kMaxInt = 1000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = expression();
    skip_space();
    if (pos_ < text_.size()) fail_syntax({"*", "end of input"});
    return e;
  }

 private:
  GroupExpr expression() {
    std::vector<GroupExpr> factors{factor()};
    while (accept('*')) factors.push_back(factor());
    if (factors.size() == 1) return factors.front();
    return GroupExpr::product(std::move(factors));
  }

  GroupExpr factor() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && std::isdigit(uc(text_[pos_]))) {
      const int value = integer();
      if (value != 1) fail(ExprParseError::Kind::kSyntax, start, kFactorStart);
      return GroupExpr::trivial();
    }
    const std::string name = identifier();
    if (name.empty()) fail(ExprParseError::Kind::kSyntax, start, kFactorStart);
    if (name[0] == 'S' && name.size() >= 1) {
      if (name.size() == 1) {
        fail(ExprParseError::Kind::kSyntax, start + 1, {"INT"});
      }
      if (all_digits(name, 1)) return GroupExpr::sym(sym_degree(name, start));
    }
    if (name == "wr") {
      expect('(');
      GroupExpr base = expression();
      expect(',');
      skip_space();
      const std::size_t at = pos_;
      const std::string s = identifier();
      if (s.size() < 2 || s[0] != 'S' || !all_digits(s, 1)) {
        fail(ExprParseError::Kind::kSyntax, at, {"S<n>"});
      }
      const int n = sym_degree(s, at);
      expect(')');
      return GroupExpr::wreath(std::move(base), n);
    }
    if (name == "wrK4") {
      expect('(');
      GroupExpr base = expression();
      expect(')');
      return GroupExpr::wreath_k4(std::move(base));
    }
    if (name == "b2") {
      expect('(');
      GroupExpr d = expression();
      expect(',');
      GroupExpr h = expression();
      expect(',');
      GroupExpr k = expression();
      expect(')');
      return GroupExpr::b2(std::move(d), std::move(h), std::move(k));
    }
    if (name == "semi") {
      expect('(');
      GroupExpr base = expression();
      expect(',');
      SmallTop top = parse_top();
      expect(')');
      std::vector<GroupExpr> slots;
      if (!base.is_trivial()) slots.push_back(std::move(base));
      return GroupExpr::semi(std::move(slots), top);
    }
    if (name == "dih") {
      expect('(');
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(uc(text_[pos_]))) {
        fail(ExprParseError::Kind::kSyntax, at, {"INT"});
      }
      const int n = integer();
      if (n < 3) {
        fail(ExprParseError::Kind::kArity, at, {"INT >= 3"},
             "dih(n) needs n >= 3");
      }
      expect(')');
      return GroupExpr::dihedral(n);
    }
    fail(ExprParseError::Kind::kUnknownName, start, kFactorStart,
         "unknown name '" + name + "'");
  }

  SmallTop parse_top() {
    skip_space();
    const std::size_t at = pos_;
    static const std::vector<std::string> kTops = {
        "1", "Z2", "Z2xZ2", "Z2wrZ2", "S3", "S3xZ2", "Z6", "Z<k>", "D<k>"};
    if (accept('1')) return SmallTop::trivial();
    const std::string name = identifier();
    if (name.empty()) fail(ExprParseError::Kind::kSyntax, at, kTops);
    if (name == "Z2xZ2") return SmallTop::klein();
    if (name == "Z2wrZ2") return SmallTop::z2_wr_z2();
    if (name == "S3") return SmallTop::s3();
    if (name == "S3xZ2") return SmallTop::s3_x_z2();
    if ((name[0] == 'Z' || name[0] == 'D') && name.size() > 1 &&
        all_digits(name, 1)) {
      const int k = bounded(name.substr(1), at + 1);
      if (name[0] == 'Z') {
        if (k < 2) {
          fail(ExprParseError::Kind::kArity, at, {"Z<k>, k >= 2"},
               "cyclic top needs k >= 2");
        }
        return SmallTop::cyclic(k);
      }
      if (k < 3) {
        fail(ExprParseError::Kind::kArity, at, {"D<k>, k >= 3"},
             "dihedral top needs k >= 3");
      }
      return SmallTop::dihedral(k);
    }
    fail(ExprParseError::Kind::kUnknownName, at, kTops,
         "unknown top group '" + name + "'");
  }

  int sym_degree(const std::string& name, std::size_t at) {
    const int n = bounded(name.substr(1), at + 1);
    if (n < 2) {
      fail(ExprParseError::Kind::kArity, at, {"S<n>, n >= 2"},
           "Sym(n) needs n >= 2");
    }
    return n;
  }

  int bounded(const std::string& digits, std::size_t at) {
    if (digits.size() > 4 || std::stoi(digits) > kMaxInt) {
      fail(ExprParseError::Kind::kArity, at, {"INT <= 1000"},
           "integer too large");
    }
    return std::stoi(digits);
  }

  int integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(uc(text_[pos_]))) ++pos_;
    return bounded(std::string(text_.substr(start, pos_ - start)), start);
  }

  std::string identifier() {
    if (pos_ >= text_.size() || !std::isalpha(uc(text_[pos_]))) return {};
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(uc(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool all_digits(const std::string& s, std::size_t from) {
    return std::all_of(s.begin() + from, s.end(),
                       [](char c) { return std::isdigit(uc(c)); });
  }

  static unsigned char uc(char c) { return static_cast<unsigned char>(c); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(uc(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (accept(c)) return;
    std::vector<std::string> expected{std::string(1, c)};
    // Inside a parenthesised argument the product may also continue.
    if (c == ',' || c == ')') expected.push_back("*");
    fail_syntax(std::move(expected));
  }

  [[noreturn]] void fail_syntax(std::vector<std::string> expected) {
    fail(ExprParseError::Kind::kSyntax, pos_, std::move(expected));
  }

  // `at` is a 0-based byte offset.
  [[noreturn]] void fail(ExprParseError::Kind kind, std::size_t at,
                         std::vector<std::string> expected,
                         std::string message = {}) {
    const std::size_t position = at + 1;
    if (message.empty()) {
      message = position > text_.size() ? "unexpected end of input"
                                        : "unexpected character";
    }
    std::string list;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) list += ", ";
      list += '"' + expected[i] + '"';
    }
    throw ExprParseError(kind, position, expected,
                         message + " at byte " + std::to_string(position) +
                             " (expected " + list + ")");
  }

  inline static const std::vector<std::string> kFactorStart = {
      "1", "S<n>", "wr(", "wrK4(", "b2(", "semi(", "dih("};

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace bicaut
