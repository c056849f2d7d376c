#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "motbun/curve.hpp"
#include "motbun/lambda.hpp"
#include "motbun/motive_expr.hpp"
#include "motbun/series.hpp"

namespace motbun {

// Poincare series in z with M(C) -> 1 + 2g z + z^2 and Q{i} -> z^{2i}.
struct PoincareContext {
  int genus = 0;
  std::size_t order = 8;
  // Largest Sym index (and Sym^* truncation) allowed.
  std::size_t depth = 64;
};

// Point counts over F_q. psi^r of a class is its count over F_{q^r}.
struct CountContext {
  Curve curve = Curve::projective_line(2);
  // nullopt: exact closed forms. J: partial sums through j = J for
  // Z(C, Q{i}) and M^c(B G_m), with a certified tail bound.
  std::optional<std::size_t> truncation;
  std::size_t depth = 64;
};

using RealizationContext = std::variant<PoincareContext, CountContext>;

// A count realization; |true value - value| <= tail_bound (zero when exact).
struct CountValue {
  Rat value;
  Rat tail_bound;
};

using Realization = std::variant<TruncSeries, CountValue>;

// Errors: LaurentRequired (negative twists, M^c(BG_m), Z(C, Q{i}) with i < 0),
// PoleAtTwist (Z(C, Q{0}) and, for counts, Z(C, Q{+-1})), Divergent (infinite
// sums with no convergent value such as Sym^* of a class with a constant
// term, BG_m counts), InsufficientDepth, Unsupported.
TruncSeries realize_poincare(const MotiveExpr& e, const PoincareContext& ctx);
CountValue realize_count(const MotiveExpr& e, const CountContext& ctx);
Realization realize(const MotiveExpr& e, const RealizationContext& ctx);

// Adams characters through psi^depth.
AdamsClass<TruncSeries> to_adams(const MotiveExpr& e, const PoincareContext& ctx, std::size_t depth);
AdamsClass<Rat> to_adams(const MotiveExpr& e, const CountContext& ctx, std::size_t depth);

// Closed form of Z(C, Q{i}) in the Poincare realization (i >= 1):
// (1 + z^{2i+1})^{2g} / ((1 - z^{2i})(1 - z^{2i+2})).
RatFunc zeta_twist_poincare(int genus, long i);

}  // namespace motbun
