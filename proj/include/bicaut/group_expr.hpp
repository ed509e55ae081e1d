#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bicaut {

using BigInt = boost::multiprecision::cpp_int;

/// A small named group used as the top of a semidirect product.
struct SmallTop {
  enum class Kind { kTrivial, kCyclic, kDihedral, kKlein, kZ2wrZ2, kS3, kS3xZ2 };
  Kind kind = Kind::kTrivial;
  int k = 1;  // cyclic order, or the n of Dih(n) (order 2n)

  static SmallTop trivial() { return {}; }
  static SmallTop cyclic(int k);
  static SmallTop dihedral(int k);
  static SmallTop klein() { return {Kind::kKlein, 4}; }
  static SmallTop z2_wr_z2() { return {Kind::kZ2wrZ2, 8}; }
  static SmallTop s3() { return {Kind::kS3, 6}; }
  static SmallTop s3_x_z2() { return {Kind::kS3xZ2, 12}; }

  BigInt order() const;
  // "1", "Z2", "Z6", "D5", "Z2xZ2", "Z2wrZ2", "S3", "S3xZ2".
  std::string name() const;

  friend bool operator==(const SmallTop&, const SmallTop&) = default;
};

struct ExprNode;

/// Immutable symbolic group expression (shared structure, value semantics).
class GroupExpr {
 public:
  GroupExpr();  // the trivial group

  static GroupExpr trivial();
  static GroupExpr sym(int n);  // n >= 2
  // Sym(n) for n >= 2, trivial for n <= 1.
  static GroupExpr sym_or_trivial(int n);
  static GroupExpr product(std::vector<GroupExpr> factors);
  static GroupExpr wreath(GroupExpr base, int n);  // base wr Sym(n), n >= 2
  static GroupExpr wreath_k4(GroupExpr base);      // base wr (Z2 x Z2), regular
  static GroupExpr b2(GroupExpr d, GroupExpr h, GroupExpr k);
  // (prod slots) x| top. `action` lists generators of top as permutations of
  // slot indices; it may be empty when the action is unknown (parsed text).
  static GroupExpr semi(std::vector<GroupExpr> slots, SmallTop top,
                        std::vector<std::vector<int>> action = {});
  static GroupExpr dihedral(int n);  // Dih(n) of order 2n, n >= 3
  static GroupExpr from_node(ExprNode node);

  const ExprNode& node() const { return *node_; }
  bool is_trivial() const;

 private:
  explicit GroupExpr(std::shared_ptr<const ExprNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

namespace expr {
struct Trivial {};
struct Sym {
  int n;
};
struct Product {
  std::vector<GroupExpr> factors;
};
struct WreathSym {
  GroupExpr base;
  int n;
};
struct WreathK4 {
  GroupExpr base;
};
struct B2Semi {
  GroupExpr d, h, k;
};
struct SemiTop {
  std::vector<GroupExpr> slots;
  SmallTop top;
  std::vector<std::vector<int>> action;
};
struct Dihedral {
  int n;
};
}  // namespace expr

struct ExprNode {
  std::variant<expr::Trivial, expr::Sym, expr::Product, expr::WreathSym,
               expr::WreathK4, expr::B2Semi, expr::SemiTop, expr::Dihedral>
      value;
};

template <class T>
const T* get_if(const GroupExpr& e) {
  return std::get_if<T>(&e.node().value);
}

BigInt order(const GroupExpr& e);

/// Canonical form: flattens and sorts products, drops trivial factors, and
/// rewrites degenerate shapes into their tree-class equivalents (trivial-base
/// wreaths, Z2 tops acting by a swap, Klein shapes with trivial coordinates,
/// Dih(3) and Dih(4)). Idempotent and order-preserving.
GroupExpr normalize(const GroupExpr& e);

enum class ClassTag { kT, kB1, kB2, kOutsideS };
std::string to_string(ClassTag tag);

// Normalizes, then matches the shapes of T, C x (D wr K4), C x B2(D,H,K).
ClassTag classify_class(const GroupExpr& e);
bool in_tree_class(const GroupExpr& e);

/// DSL text. Grammar:
///   expr := factor ("*" factor)*
///   factor := "1" | "S"INT | "wr(" expr "," "S"INT ")" | "wrK4(" expr ")"
///           | "b2(" expr "," expr "," expr ")" | "semi(" expr "," top ")"
///           | "dih(" INT ")"
///   top := "1" | "Z2xZ2" | "Z2wrZ2" | "S3" | "S3xZ2" | "Z"INT | "D"INT
std::string print_expr(const GroupExpr& e);
// Throws ExprParseError.
GroupExpr parse_expr(std::string_view text);

// Structural equality of printed forms (the slot split and action of a
// semidirect node are not part of the structure).
bool operator==(const GroupExpr& a, const GroupExpr& b);

}  // namespace bicaut
