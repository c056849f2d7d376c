#include "motbun/motive_expr.hpp"

#include "motbun/error.hpp"

namespace motbun {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same(const ExprPtr& a, const ExprPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

bool operator==(const MotiveExpr& a, const MotiveExpr& b) {
  if (a.node_.index() != b.node_.index()) return false;
  return std::visit(
      overloaded{
          [&](const node::AtomNode& x) { return x.atom == std::get<node::AtomNode>(b.node_).atom; },
          [&](const node::Tate& x) { return x.i == std::get<node::Tate>(b.node_).i; },
          [&](const node::ProjSpace& x) { return x.dim == std::get<node::ProjSpace>(b.node_).dim; },
          [&](const node::Sum& x) { return x.terms == std::get<node::Sum>(b.node_).terms; },
          [&](const node::Tensor& x) { return x.factors == std::get<node::Tensor>(b.node_).factors; },
          [&](const node::Twist& x) {
            const auto& y = std::get<node::Twist>(b.node_);
            return x.i == y.i && same(x.inner, y.inner);
          },
          [&](const node::Sym& x) {
            const auto& y = std::get<node::Sym>(b.node_);
            return x.n == y.n && same(x.inner, y.inner);
          },
          [&](const node::SymStar& x) { return same(x.inner, std::get<node::SymStar>(b.node_).inner); },
          [&](const node::ZetaTwist& x) { return x.i == std::get<node::ZetaTwist>(b.node_).i; },
      },
      a.node_);
}

MotiveExpr tate(long i) { return MotiveExpr(node::Tate{i}); }

MotiveExpr proj_space(long dim) {
  if (dim < 0) throw Error(ErrorKind::InvalidArgument, "projective space of negative dimension");
  return MotiveExpr(node::ProjSpace{dim});
}

MotiveExpr sum(std::vector<MotiveExpr> terms) {
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "empty sum");
  if (terms.size() == 1) return terms.front();
  return MotiveExpr(node::Sum{std::move(terms)});
}

MotiveExpr tensor(std::vector<MotiveExpr> factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "empty tensor product");
  if (factors.size() == 1) return factors.front();
  return MotiveExpr(node::Tensor{std::move(factors)});
}

MotiveExpr twist(MotiveExpr inner, long i) {
  return MotiveExpr(node::Twist{std::make_shared<const MotiveExpr>(std::move(inner)), i});
}

MotiveExpr sym(MotiveExpr inner, long n) {
  if (n < 0) throw Error(ErrorKind::ArityError, "Sym^n needs n >= 0");
  return MotiveExpr(node::Sym{std::make_shared<const MotiveExpr>(std::move(inner)), n});
}

MotiveExpr sym_star(MotiveExpr inner) {
  return MotiveExpr(node::SymStar{std::make_shared<const MotiveExpr>(std::move(inner))});
}

MotiveExpr zeta_twist(long i) { return MotiveExpr(node::ZetaTwist{i}); }

namespace {

std::string atom_text(Atom a) {
  switch (a) {
    case Atom::Unit: return "1";
    case Atom::MC: return "M(C)";
    case Atom::MbarC: return "Mbar(C)";
    case Atom::M1Jac: return "M1(Jac)";
    case Atom::Jac: return "Jac";
    case Atom::BGm: return "BGm";
    case Atom::BGmC: return "BGmC";
  }
  return "?";
}

// Precedence: 0 = sum, 1 = product, 2 = factor without twist suffix
// (Sym, SymStar, Z, twisted), 3 = atom or parenthesized expression.
std::string print_prec(const MotiveExpr& e, int min_prec);

std::string as_atom(const MotiveExpr& e) { return print_prec(e, 3); }

std::string print_prec(const MotiveExpr& e, int min_prec) {
  int prec = 3;
  std::string out = std::visit(
      overloaded{
          [&](const node::AtomNode& x) { return atom_text(x.atom); },
          [&](const node::Tate& x) { return x.i == 1 ? std::string("L") : "L^" + std::to_string(x.i); },
          [&](const node::ProjSpace& x) { return "P(" + std::to_string(x.dim) + ")"; },
          [&](const node::Sum& x) {
            prec = 0;
            std::string s;
            for (std::size_t k = 0; k < x.terms.size(); ++k) s += (k ? " + " : "") + print_prec(x.terms[k], 1);
            return s;
          },
          [&](const node::Tensor& x) {
            prec = 1;
            std::string s;
            for (std::size_t k = 0; k < x.factors.size(); ++k)
              s += (k ? " * " : "") + print_prec(x.factors[k], 2);
            return s;
          },
          [&](const node::Twist& x) {
            prec = 2;
            return as_atom(*x.inner) + "{" + std::to_string(x.i) + "}";
          },
          [&](const node::Sym& x) {
            prec = 2;
            return "Sym^" + std::to_string(x.n) + "(" + print_prec(*x.inner, 0) + ")";
          },
          [&](const node::SymStar& x) {
            prec = 2;
            return "SymStar(" + print_prec(*x.inner, 0) + ")";
          },
          [&](const node::ZetaTwist& x) {
            prec = 2;
            return "Z(C,L^" + std::to_string(x.i) + ")";
          },
      },
      e.node());
  if (prec < min_prec) return "(" + out + ")";
  return out;
}

}  // namespace

std::string print(const MotiveExpr& e) { return print_prec(e, 0); }

std::size_t node_count(const MotiveExpr& e) {
  return std::visit(overloaded{
                        [](const node::Sum& x) {
                          std::size_t n = 1;
                          for (const auto& t : x.terms) n += node_count(t);
                          return n;
                        },
                        [](const node::Tensor& x) {
                          std::size_t n = 1;
                          for (const auto& t : x.factors) n += node_count(t);
                          return n;
                        },
                        [](const node::Twist& x) { return 1 + node_count(*x.inner); },
                        [](const node::Sym& x) { return 1 + node_count(*x.inner); },
                        [](const node::SymStar& x) { return 1 + node_count(*x.inner); },
                        [](const auto&) { return std::size_t{1}; },
                    },
                    e.node());
}

}  // namespace motbun
