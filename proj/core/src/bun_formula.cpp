#include "motbun/bun_formula.hpp"

#include <string>

#include "motbun/error.hpp"
#include "motbun/lambda.hpp"
#include "motbun/realize.hpp"

namespace motbun {

namespace {

void require_rank(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "rank n must be at least 1");
}

}  // namespace

MotiveExpr m_c_n(long n) {
  require_rank(n);
  std::vector<MotiveExpr> terms{Atom::MbarC};
  for (long i = 1; i < n; ++i) terms.push_back(twist(Atom::MC, i));
  return sum(std::move(terms));
}

MotiveExpr bun_closed(long n) {
  require_rank(n);
  std::vector<MotiveExpr> factors{Atom::Jac, Atom::BGm};
  for (long i = 1; i < n; ++i) factors.push_back(zeta_twist(i));
  return tensor(std::move(factors));
}

long quot_length(long n, long d, long l) {
  const long len = n * l - d;
  if (len < 0)
    throw Error(ErrorKind::NegativeLength, "nl - d = " + std::to_string(len) + " is negative");
  return len;
}

TruncSeries bun_colimit(long n, long d, int genus, std::size_t order) {
  require_rank(n);
  // Every Sym^i(M_{C,n}) has z-valuation >= i, so nl - d >= order suffices.
  long l = 0;
  while (n * l - d < static_cast<long>(order)) ++l;
  const auto len = static_cast<std::size_t>(n * l - d);
  const auto next_len = len + static_cast<std::size_t>(n);

  const PoincareContext ctx{genus, order, next_len};
  const TruncSeries generator = realize_poincare(m_c_n(n), ctx);
  const auto sigma = sym_star(adams_of_poincare(generator, next_len), next_len);

  TruncSeries at_l = TruncSeries::zero(order);
  for (std::size_t i = 0; i <= len; ++i) at_l += sigma[i];
  TruncSeries at_next = at_l;
  for (std::size_t i = len + 1; i <= next_len; ++i) at_next += sigma[i];
  if (!(at_l == at_next))
    throw Error(ErrorKind::Internal, "colimit did not stabilize through z^" + std::to_string(order));
  return at_l;
}

MotiveExpr kunneth_factor(long n) {
  require_rank(n);
  return tensor({Atom::MC, proj_space(n - 1)});
}

MotiveExpr div_motive(long n, long d, long l) { return sym(kunneth_factor(n), quot_length(n, d, l)); }

std::vector<BIndex> enumerate_b(long n, long length) {
  require_rank(n);
  if (length < 0) throw Error(ErrorKind::NegativeLength, "negative length");
  std::vector<BIndex> out;
  BIndex m(static_cast<std::size_t>(n), 0);
  // Compositions of `length` into n parts, m_0 descending first.
  auto rec = [&](auto&& self, std::size_t pos, long remaining) -> void {
    if (pos + 1 == m.size()) {
      m[pos] = remaining;
      out.push_back(m);
      return;
    }
    for (long v = remaining; v >= 0; --v) {
      m[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, length);
  return out;
}

long total_twist(const BIndex& m) {
  long t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += static_cast<long>(i) * m[i];
  return t;
}

std::vector<BSummand> div_decomposition(long n, long d, long l) {
  const long len = quot_length(n, d, l);
  std::vector<BSummand> out;
  for (const BIndex& m : enumerate_b(n, len)) {
    std::vector<MotiveExpr> factors;
    for (long mi : m) factors.push_back(sym(Atom::MC, mi));
    const long t = total_twist(m);
    MotiveExpr e = tensor(std::move(factors));
    if (t != 0) e = twist(std::move(e), t);
    out.push_back(BSummand{m, t, std::move(e)});
  }
  return out;
}

BIndex transition_support(const BIndex& m, long n) {
  require_rank(n);
  if (static_cast<long>(m.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "index has " + std::to_string(m.size()) + " entries, expected n");
  BIndex out = m;
  out[0] += n;
  return out;
}

long tuple_weight(const ITuple& I) {
  long w = 0;
  for (long i : I) w += i;
  return w;
}

TupleMaps tuple_maps(const ITuple& I, long n) {
  require_rank(n);
  TupleMaps out{BIndex(static_cast<std::size_t>(n), 0), ITuple(static_cast<std::size_t>(n), 0)};
  for (long i : I) {
    if (i < 0 || i >= n) throw Error(ErrorKind::InvalidArgument, "tuple entry outside {0, ..., n-1}");
    ++out.tau[static_cast<std::size_t>(i)];
    out.h.push_back(i);
  }
  return out;
}

MotiveExpr hecke_motive(long l, long n, const MotiveExpr& base) {
  if (l < 0) throw Error(ErrorKind::InvalidArgument, "number of modifications must be >= 0");
  std::vector<MotiveExpr> factors;
  // 1 * X = X, so a unit base is left out of the product.
  if (l == 0 || !(base == MotiveExpr(Atom::Unit))) factors.push_back(base);
  for (long k = 0; k < l; ++k) factors.push_back(kunneth_factor(n));
  return tensor(std::move(factors));
}

MotiveExpr flag_div_motive(long n, long d, long l) { return hecke_motive(quot_length(n, d, l), n, Atom::Unit); }

MotiveExpr bun_compact(long n, int genus) {
  require_rank(n);
  const long shift = (n * n - 1) * (static_cast<long>(genus) - 1);
  std::vector<MotiveExpr> factors{Atom::Jac, shift == 0 ? MotiveExpr(Atom::BGmC) : twist(Atom::BGmC, shift)};
  for (long i = 2; i <= n; ++i) factors.push_back(zeta_twist(-i));
  return tensor(std::move(factors));
}

Rat harder_count(long n, const Curve& curve) {
  require_rank(n);
  const Rat q(static_cast<long>(curve.q()));
  Rat value = Rat(jac_count(curve)) / (q - Rat(1)) * pow(q, (n * n - 1) * (curve.genus() - 1));
  for (long i = 2; i <= n; ++i) value *= zeta_special_value(curve, i);
  return value;
}

}  // namespace motbun
