#pragma once

#include <cstddef>
#include <vector>

#include "motbun/curve.hpp"
#include "motbun/motive_expr.hpp"
#include "motbun/rational.hpp"
#include "motbun/series.hpp"

namespace motbun {

// m = (m_0, ..., m_{n-1}) with sum m_i = nl - d.
using BIndex = std::vector<long>;
// I = (i_1, ..., i_{nl-d}) with entries in {0, ..., n-1}.
using ITuple = std::vector<long>;

// One summand (tensor_i Sym^{m_i} M(C)){sum i m_i} of M(Sym^{nl-d}(C x P^{n-1})).
struct BSummand {
  BIndex index;
  long total_twist = 0;
  MotiveExpr expr = Atom::Unit;
};

// M_{C,n} = Mbar(C) + sum_{i=1}^{n-1} M(C){i}.
MotiveExpr m_c_n(long n);

// M(Jac) * M(BG_m) * Z(C, Q{1}) * ... * Z(C, Q{n-1}).
MotiveExpr bun_closed(long n);

// sum_{i=0}^{nl-d} Sym^i(M_{C,n}) in the Poincare realization for the least
// l with nl - d >= order; checks that one more step of the inductive system
// leaves every coefficient through z^order unchanged.
TruncSeries bun_colimit(long n, long d, int genus, std::size_t order);

// The length nl - d; NegativeLength when negative.
long quot_length(long n, long d, long l);

// Sym^{nl-d}(M(C) * P(n-1)).
MotiveExpr div_motive(long n, long d, long l);

// Enumerates B_l in lexicographic order with one summand per index.
std::vector<BSummand> div_decomposition(long n, long d, long l);
std::vector<BIndex> enumerate_b(long n, long length);

// m + (n, 0, ..., 0): the only target with a nonzero transition component.
BIndex transition_support(const BIndex& m, long n);
// sum_i i * m_i
long total_twist(const BIndex& m);

struct TupleMaps {
  BIndex tau;  // tau(I)_r = #{ j : i_j = r }
  ITuple h;    // (0, ..., 0, I) with n zeros prepended
};
TupleMaps tuple_maps(const ITuple& I, long n);
// |I| = sum_j i_j
long tuple_weight(const ITuple& I);

// M(T) * (M(C) * P(n-1))^{tensor l}; l = 0 gives M(T).
MotiveExpr hecke_motive(long l, long n, const MotiveExpr& base);
// hecke_motive(nl - d, n, 1).
MotiveExpr flag_div_motive(long n, long d, long l);
// M(C) * P(n-1)
MotiveExpr kunneth_factor(long n);

// M(Jac) * M^c(BG_m){(n^2-1)(g-1)} * Z(C, Q{-2}) * ... * Z(C, Q{-n}).
MotiveExpr bun_compact(long n, int genus);

// #Jac(F_q) q^{(n^2-1)(g-1)} / (q-1) * prod_{i=2}^{n} zeta_C(i).
Rat harder_count(long n, const Curve& curve);

}  // namespace motbun
