#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace motbun {

// Named atoms of the expression language.
enum class Atom {
  Unit,   // 1 = Q{0}
  MC,     // M(C)
  MbarC,  // reduced motive, M(C) = Q{0} + Mbar(C)
  M1Jac,  // weight-one part M_1(Jac C), odd
  Jac,    // M(Jac C) = Sym^* M_1(Jac C)
  BGm,    // M(B G_m) = Sym^* Q{1}
  BGmC,   // compactly supported M^c(B G_m) = sum_{i >= 1} Q{-i}
};

class MotiveExpr;
using ExprPtr = std::shared_ptr<const MotiveExpr>;

namespace node {

struct AtomNode { Atom atom; };
struct Tate { long i; };                 // Q{i}
struct ProjSpace { long dim; };          // M(P^dim)
struct Sum { std::vector<MotiveExpr> terms; };
struct Tensor { std::vector<MotiveExpr> factors; };
struct Twist { ExprPtr inner; long i; };
struct Sym { ExprPtr inner; long n; };
struct SymStar { ExprPtr inner; };
struct ZetaTwist { long i; };            // Z(C, Q{i})

}  // namespace node

// Immutable expression tree. Copies share subtrees.
class MotiveExpr {
 public:
  using Node = std::variant<node::AtomNode, node::Tate, node::ProjSpace, node::Sum, node::Tensor, node::Twist,
                            node::Sym, node::SymStar, node::ZetaTwist>;

  MotiveExpr(Atom a) : node_(node::AtomNode{a}) {}
  explicit MotiveExpr(Node n) : node_(std::move(n)) {}

  const Node& node() const noexcept { return node_; }

  template <typename T>
  const T* as() const noexcept {
    return std::get_if<T>(&node_);
  }

  friend bool operator==(const MotiveExpr& a, const MotiveExpr& b);

 private:
  Node node_;
};

// Builders. sum/tensor with a single operand return it unchanged; both throw
// InvalidArgument when given no operands.
MotiveExpr tate(long i);
MotiveExpr proj_space(long dim);
MotiveExpr sum(std::vector<MotiveExpr> terms);
MotiveExpr tensor(std::vector<MotiveExpr> factors);
MotiveExpr twist(MotiveExpr inner, long i);
MotiveExpr sym(MotiveExpr inner, long n);
MotiveExpr sym_star(MotiveExpr inner);
MotiveExpr zeta_twist(long i);

// Renders in the input grammar; parse(print(e)) == e for every e.
std::string print(const MotiveExpr& e);

// Number of nodes, for diagnostics and tests.
std::size_t node_count(const MotiveExpr& e);

}  // namespace motbun
