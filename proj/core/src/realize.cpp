#include "motbun/realize.hpp"

#include <map>
#include <string>

#include "motbun/error.hpp"

namespace motbun {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void laurent(const std::string& what) {
  throw Error(ErrorKind::LaurentRequired, what + " needs a Laurent series in the Poincare realization");
}

void check_depth(long n, std::size_t depth) {
  if (n > static_cast<long>(depth))
    throw Error(ErrorKind::InsufficientDepth,
                "Sym^" + std::to_string(n) + " exceeds the depth budget " + std::to_string(depth));
}

// ---------------------------------------------------------------- Poincare

class PoincareEvaluator {
 public:
  explicit PoincareEvaluator(const PoincareContext& ctx) : ctx_(ctx), g_(ctx.genus) {}

  TruncSeries eval(const MotiveExpr& e) const {
    const std::size_t N = ctx_.order;
    return std::visit(
        overloaded{
            [&](const node::AtomNode& x) { return atom(x.atom); },
            [&](const node::Tate& x) {
              if (x.i < 0) laurent("Q{" + std::to_string(x.i) + "}");
              return TruncSeries::monomial(N, Rat(1), 2 * static_cast<std::size_t>(x.i));
            },
            [&](const node::ProjSpace& x) {
              TruncSeries s = TruncSeries::zero(N);
              for (long k = 0; k <= x.dim; ++k) s += TruncSeries::monomial(N, Rat(1), 2 * static_cast<std::size_t>(k));
              return s;
            },
            [&](const node::Sum& x) {
              TruncSeries s = TruncSeries::zero(N);
              for (const auto& t : x.terms) s += eval(t);
              return s;
            },
            [&](const node::Tensor& x) {
              TruncSeries s = TruncSeries::one(N);
              for (const auto& f : x.factors) s = s * eval(f);
              return s;
            },
            [&](const node::Twist& x) {
              if (x.i < 0) laurent("twist {" + std::to_string(x.i) + "}");
              return eval(*x.inner).shift(2 * static_cast<std::size_t>(x.i));
            },
            [&](const node::Sym& x) {
              check_depth(x.n, ctx_.depth);
              if (x.n == 0) return TruncSeries::one(N);
              const auto n = static_cast<std::size_t>(x.n);
              return sym_n(adams_of_poincare(eval(*x.inner), n), n);
            },
            [&](const node::SymStar& x) {
              const TruncSeries f = eval(*x.inner);
              if (!f[0].is_zero())
                throw Error(ErrorKind::Divergent, "Sym^* of a class with nonzero degree-0 part");
              // Sym^n has z-valuation >= n, so n <= N suffices.
              check_depth(static_cast<long>(N), ctx_.depth);
              const auto series = sym_star(adams_of_poincare(f, std::max<std::size_t>(N, 1)), N);
              TruncSeries s = TruncSeries::zero(N);
              for (const auto& c : series.coeffs) s += c;
              return s;
            },
            [&](const node::ZetaTwist& x) {
              if (x.i < 0) laurent("Z(C, Q{" + std::to_string(x.i) + "})");
              if (x.i == 0) throw Error(ErrorKind::PoleAtTwist, "Z(C, Q{0}) has a pole");
              return zeta_twist_poincare(g_, x.i).expand(N);
            },
        },
        e.node());
  }

 private:
  TruncSeries atom(Atom a) const {
    const std::size_t N = ctx_.order;
    const Rat two_g(2L * g_);
    switch (a) {
      case Atom::Unit: return TruncSeries::one(N);
      case Atom::MC: return TruncSeries(N, {Rat(1), two_g, Rat(1)});
      case Atom::MbarC: return TruncSeries(N, {Rat(0), two_g, Rat(1)});
      case Atom::M1Jac: return TruncSeries(N, {Rat(0), two_g});
      case Atom::Jac: return pow(TruncSeries(N, {Rat(1), Rat(1)}), static_cast<unsigned>(2 * g_));
      case Atom::BGm: return RatFunc(Poly{Rat(1)}, Poly{Rat(1), Rat(0), Rat(-1)}).expand(N);
      case Atom::BGmC: laurent("M^c(BG_m)");
    }
    throw Error(ErrorKind::Internal, "unknown atom");
  }

  const PoincareContext& ctx_;
  int g_;
};

// ------------------------------------------------------------------ counts

// Linear combinations sum mult * X{k} with X a Tate class, M(C), Mbar(C) or
// M_1(Jac); the classes whose Sym^* has a closed count form.
enum class LinAtom { Tate, MC, MbarC, M1 };
using Linear = std::map<std::pair<LinAtom, long>, Integer>;

bool pure_tate(const Linear& l) {
  for (const auto& [key, m] : l)
    if (key.first != LinAtom::Tate) return false;
  return true;
}

Linear linearize(const MotiveExpr& e) {
  auto unsupported = [](const std::string& what) -> Linear {
    throw Error(ErrorKind::Unsupported, "Sym^* count of " + what + " has no closed form here");
  };
  return std::visit(
      overloaded{
          [&](const node::AtomNode& x) -> Linear {
            switch (x.atom) {
              case Atom::Unit: return {{{LinAtom::Tate, 0}, 1}};
              case Atom::MC: return {{{LinAtom::MC, 0}, 1}};
              case Atom::MbarC: return {{{LinAtom::MbarC, 0}, 1}};
              case Atom::M1Jac: return {{{LinAtom::M1, 0}, 1}};
              default: return unsupported(print(MotiveExpr(x.atom)));
            }
          },
          [&](const node::Tate& x) -> Linear { return {{{LinAtom::Tate, x.i}, 1}}; },
          [&](const node::ProjSpace& x) {
            Linear l;
            for (long k = 0; k <= x.dim; ++k) l[{LinAtom::Tate, k}] += 1;
            return l;
          },
          [&](const node::Sum& x) {
            Linear l;
            for (const auto& t : x.terms)
              for (const auto& [key, m] : linearize(t)) l[key] += m;
            return l;
          },
          [&](const node::Tensor& x) {
            Linear acc{{{LinAtom::Tate, 0}, 1}};
            for (const auto& f : x.factors) {
              const Linear rhs = linearize(f);
              if (!pure_tate(acc) && !pure_tate(rhs)) return unsupported("a product of curve classes");
              const Linear& tate_side = pure_tate(acc) ? acc : rhs;
              const Linear& other = pure_tate(acc) ? rhs : acc;
              Linear out;
              for (const auto& [tk, tm] : tate_side)
                for (const auto& [ok, om] : other) out[{ok.first, ok.second + tk.second}] += tm * om;
              acc = std::move(out);
            }
            return acc;
          },
          [&](const node::Twist& x) {
            Linear l;
            for (const auto& [key, m] : linearize(*x.inner)) l[{key.first, key.second + x.i}] += m;
            return l;
          },
          [&](const auto&) -> Linear { return unsupported(print(e)); },
      },
      e.node());
}

// Zeta data of the base change to F_{q^r}.
struct Level {
  int genus;
  Rat Q;
  Poly weil;

  Rat points() const { return Q + Rat(1) + weil[1]; }
  RatFunc zeta() const { return RatFunc(weil, Poly{Rat(1), Rat(-1)} * Poly{Rat(1), -Q}); }
};

class CountEvaluator {
 public:
  explicit CountEvaluator(const CountContext& ctx) : ctx_(ctx) {}

  // Count over F_{q^r}.
  CountValue eval(const MotiveExpr& e, unsigned r) {
    const Rat Q = level(r).Q;
    return std::visit(
        overloaded{
            [&](const node::AtomNode& x) { return atom(x.atom, r); },
            [&](const node::Tate& x) { return exact(pow(Q, x.i)); },
            [&](const node::ProjSpace& x) {
              Rat s;
              for (long k = 0; k <= x.dim; ++k) s += pow(Q, k);
              return exact(s);
            },
            [&](const node::Sum& x) {
              CountValue v = exact(Rat(0));
              for (const auto& t : x.terms) {
                const CountValue w = eval(t, r);
                v.value += w.value;
                v.tail_bound += w.tail_bound;
              }
              return v;
            },
            [&](const node::Tensor& x) {
              CountValue v = exact(Rat(1));
              for (const auto& f : x.factors) {
                const CountValue w = eval(f, r);
                v.tail_bound = abs(v.value) * w.tail_bound + abs(w.value) * v.tail_bound + v.tail_bound * w.tail_bound;
                v.value *= w.value;
              }
              return v;
            },
            [&](const node::Twist& x) {
              CountValue v = eval(*x.inner, r);
              const Rat s = pow(Q, x.i);
              return CountValue{v.value * s, v.tail_bound * s};
            },
            [&](const node::Sym& x) {
              check_depth(x.n, ctx_.depth);
              if (x.n == 0) return exact(Rat(1));
              const auto n = static_cast<std::size_t>(x.n);
              std::vector<Rat> psi;
              for (std::size_t s = 1; s <= n; ++s) psi.push_back(exact_at(*x.inner, r * static_cast<unsigned>(s)));
              return exact(sym_n(AdamsClass<Rat>(std::move(psi)), n));
            },
            [&](const node::SymStar& x) { return exact(sym_star_closed(linearize(*x.inner), r)); },
            [&](const node::ZetaTwist& x) { return zeta(x.i, r); },
        },
        e.node());
  }

  Rat exact_at(const MotiveExpr& e, unsigned r) {
    const CountValue v = eval(e, r);
    if (!v.tail_bound.is_zero())
      throw Error(ErrorKind::Unsupported, "Sym of a truncated count; use the exact count mode");
    return v.value;
  }

 private:
  static CountValue exact(const Rat& v) { return CountValue{v, Rat(0)}; }

  const Level& level(unsigned r) {
    auto it = levels_.find(r);
    if (it == levels_.end()) {
      const Curve& c = ctx_.curve;
      Level l{c.genus(), pow(Rat(static_cast<long>(c.q())), static_cast<long>(r)), c.weil_over(r)};
      it = levels_.emplace(r, std::move(l)).first;
    }
    return it->second;
  }

  CountValue atom(Atom a, unsigned r) {
    const Level& c = level(r);
    const Rat& Q = c.Q;
    const Rat p = c.points();
    switch (a) {
      case Atom::Unit: return exact(Rat(1));
      case Atom::MC: return exact(p);
      case Atom::MbarC: return exact(p - Rat(1));
      case Atom::M1Jac: return exact(p - Rat(1) - Q);
      case Atom::Jac: return exact(c.weil.eval(Rat(1)));
      case Atom::BGm: throw Error(ErrorKind::Divergent, "BGm has no finite point count (sum of q^i, i >= 0)");
      case Atom::BGmC: {
        if (ctx_.truncation) {
          const long J = static_cast<long>(*ctx_.truncation);
          Rat s;
          for (long k = 1; k <= J; ++k) s += pow(Q, -k);
          return CountValue{s, pow(Q, -J) / (Q - Rat(1))};
        }
        return exact(Rat(1) / (Q - Rat(1)));
      }
    }
    throw Error(ErrorKind::Internal, "unknown atom");
  }

  CountValue zeta(long i, unsigned r) {
    if (i >= -1 && i <= 1)
      throw Error(ErrorKind::PoleAtTwist, "Z(C, Q{" + std::to_string(i) + "}) has no finite count");
    if (i >= 2) throw Error(ErrorKind::Divergent, "Z(C, Q{" + std::to_string(i) + "}) diverges in counts");
    const Level& c = level(r);
    const Rat& Q = c.Q;
    if (!ctx_.truncation) return exact(c.zeta().eval(pow(Q, i)));
    const std::size_t J = *ctx_.truncation;
    const TruncSeries counts = c.zeta().expand(J);
    Rat s;
    for (std::size_t j = 0; j <= J; ++j) s += counts[j] * pow(Q, i * static_cast<long>(j));
    // |c_j| <= A Q^j with A = Q/(Q-1) sum_k |P_k| Q^{-k}; the tail is geometric
    // with ratio Q^{i+1}.
    Rat A;
    for (std::size_t k = 0; k < c.weil.coeffs().size(); ++k) A += abs(c.weil[k]) * pow(Q, -static_cast<long>(k));
    A *= Q / (Q - Rat(1));
    const Rat rho = pow(Q, i + 1);
    const Rat bound = A * pow(rho, static_cast<long>(J) + 1) / (Rat(1) - rho);
    return CountValue{s, bound};
  }

  // prod over (X, k) of sigma_X(Q^k)^mult, where sigma_X(t) is the Sym
  // generating function of X.
  Rat sym_star_closed(const Linear& lin, unsigned r) {
    const Level& c = level(r);
    const Rat& Q = c.Q;
    const bool has_roots = c.genus > 0;
    Rat value(1);
    for (const auto& [key, mult] : lin) {
      if (mult == 0) continue;
      const auto [x, k] = key;
      const bool positive = mult > 0;
      if ((x == LinAtom::Tate && positive && k >= 0) ||
          ((x == LinAtom::MC || x == LinAtom::MbarC) && positive && k > -2) ||
          (x != LinAtom::Tate && !positive && has_roots && k > -1))
        throw Error(ErrorKind::Divergent, "Sym^* count diverges for a term twisted by {" + std::to_string(k) + "}");
      // sigma^{-1} is a polynomial in Q^k for a Tate class, so it is safe at k = 0.
      Rat inverse;
      switch (x) {
        case LinAtom::Tate: inverse = Rat(1) - pow(Q, k); break;
        case LinAtom::MC: inverse = (Rat(1) - pow(Q, k)) * (Rat(1) - pow(Q, k + 1)) / c.weil.eval(pow(Q, k)); break;
        case LinAtom::MbarC: inverse = (Rat(1) - pow(Q, k + 1)) / c.weil.eval(pow(Q, k)); break;
        case LinAtom::M1: inverse = Rat(1) / c.weil.eval(pow(Q, k)); break;
      }
      value *= pow(inverse, -mult.get_si());
    }
    return value;
  }

  const CountContext& ctx_;
  std::map<unsigned, Level> levels_;
};

}  // namespace

RatFunc zeta_twist_poincare(int genus, long i) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "Poincare zeta twist needs i >= 1");
  const auto a = static_cast<std::size_t>(2 * i);
  const Poly num = pow(Poly{Rat(1)} + Poly::monomial(Rat(1), a + 1), static_cast<unsigned>(2 * genus));
  const Poly den = (Poly{Rat(1)} - Poly::monomial(Rat(1), a)) * (Poly{Rat(1)} - Poly::monomial(Rat(1), a + 2));
  return RatFunc(num, den);
}

TruncSeries realize_poincare(const MotiveExpr& e, const PoincareContext& ctx) {
  return PoincareEvaluator(ctx).eval(e);
}

CountValue realize_count(const MotiveExpr& e, const CountContext& ctx) { return CountEvaluator(ctx).eval(e, 1); }

Realization realize(const MotiveExpr& e, const RealizationContext& ctx) {
  return std::visit(overloaded{
                        [&](const PoincareContext& p) -> Realization { return realize_poincare(e, p); },
                        [&](const CountContext& c) -> Realization { return realize_count(e, c); },
                    },
                    ctx);
}

AdamsClass<TruncSeries> to_adams(const MotiveExpr& e, const PoincareContext& ctx, std::size_t depth) {
  return adams_of_poincare(realize_poincare(e, ctx), depth);
}

AdamsClass<Rat> to_adams(const MotiveExpr& e, const CountContext& ctx, std::size_t depth) {
  CountEvaluator ev(ctx);
  std::vector<Rat> psi;
  psi.reserve(depth);
  for (std::size_t r = 1; r <= depth; ++r) psi.push_back(ev.exact_at(e, static_cast<unsigned>(r)));
  return AdamsClass<Rat>(std::move(psi));
}

}  // namespace motbun
