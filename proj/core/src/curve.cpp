#include "motbun/curve.hpp"

#include <algorithm>

#include "motbun/error.hpp"
#include "motbun/finite_field.hpp"

namespace motbun {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::ProjectiveLine: return "p1";
    case ModelKind::HyperellipticOdd: return "hyperelliptic-odd";
    case ModelKind::HyperellipticEven: return "hyperelliptic-even";
  }
  return "?";
}

ModelKind parse_model_kind(const std::string& text) {
  if (text == "p1") return ModelKind::ProjectiveLine;
  if (text == "hyperelliptic-odd") return ModelKind::HyperellipticOdd;
  if (text == "hyperelliptic-even") return ModelKind::HyperellipticEven;
  throw Error(ErrorKind::FileFormat, "unknown model kind '" + text + "'");
}

namespace {

// Polynomials over F_p for the smoothness checks.
using ModP = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

ModP reduce(const std::vector<std::int64_t>& c, std::int64_t p) {
  ModP out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = mod(c[i], p);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

long deg(const ModP& a) { return static_cast<long>(a.size()) - 1; }

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

ModP mul(const ModP& a, const ModP& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return reduce(out, p);
}

ModP sub(ModP a, const ModP& b, std::int64_t p) {
  a.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  return reduce(a, p);
}

ModP derivative(const ModP& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  ModP out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mod(a[i] * static_cast<std::int64_t>(i), p);
  return reduce(out, p);
}

ModP polymod(ModP a, const ModP& b, std::int64_t p) {
  const std::int64_t lead_inv = inv_mod(b.back(), p);
  while (deg(a) >= deg(b)) {
    const std::int64_t f = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - f * b[j], p);
    a = reduce(a, p);
  }
  return a;
}

ModP gcd(ModP a, ModP b, std::int64_t p) {
  while (!b.empty()) {
    ModP r = polymod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

void check_smooth(const ExplicitModel& m, std::uint64_t q) {
  const auto p = static_cast<std::int64_t>(q);
  const ModP h = reduce(m.h, p), f = reduce(m.f, p);
  if (p != 2) {
    // y^2 + h y = f is smooth (affine) iff h^2 + 4f is squarefree.
    ModP minus_four_f = f;
    for (auto& c : minus_four_f) c = mod(-4 * c, p);
    const ModP disc = sub(mul(h, h, p), minus_four_f, p);
    if (disc.empty() || deg(gcd(disc, derivative(disc, p), p)) > 0)
      throw Error(ErrorKind::SingularModel, "h^2 + 4f is not squarefree");
    return;
  }
  // Characteristic 2: a singular point needs h(x) = 0 and f'(x)^2 = h'(x)^2 f(x).
  if (h.empty()) throw Error(ErrorKind::SingularModel, "h = 0 gives a singular model in characteristic 2");
  const ModP hp = derivative(h, p), fp = derivative(f, p);
  const ModP g = sub(mul(fp, fp, p), mul(mul(hp, hp, p), f, p), p);
  if (g.empty() ? deg(h) > 0 : deg(gcd(h, g, p)) > 0)
    throw Error(ErrorKind::SingularModel, "singular point over a root of h");
}

// Number of y in F with y^2 + b y = c.
std::uint64_t quadratic_solutions(const FiniteField& F, FiniteField::Elem b, FiniteField::Elem c) {
  if (F.characteristic() != 2) {
    const auto disc = F.add(F.mul(b, b), F.mul(F.from_int(4), c));
    return static_cast<std::uint64_t>(1 + F.legendre(disc));
  }
  if (b == 0) return 1;
  // y = b u turns this into u^2 + u = c / b^2.
  const auto ib = F.inv(b);
  return F.trace2(F.mul(c, F.mul(ib, ib))) == 0 ? 2 : 0;
}

std::int64_t coeff(const std::vector<std::int64_t>& c, std::size_t k) { return k < c.size() ? c[k] : 0; }

}  // namespace

int model_genus(const ExplicitModel& m, std::uint64_t q) {
  if (m.kind == ModelKind::ProjectiveLine) return 0;
  const auto p = static_cast<std::int64_t>(q);
  const long df = deg(reduce(m.f, p)), dh = deg(reduce(m.h, p));
  if (m.kind == ModelKind::HyperellipticOdd) {
    if (df < 3 || df % 2 == 0) throw Error(ErrorKind::InvalidCurve, "hyperelliptic-odd needs odd deg f >= 3");
    const long g = (df - 1) / 2;
    if (dh > g) throw Error(ErrorKind::InvalidCurve, "deg h must be at most g for hyperelliptic-odd");
    return static_cast<int>(g);
  }
  // Even model: deg f = 2g+2, or in characteristic 2 deg h = g+1 with deg f <= 2g+2.
  long g;
  if (df >= 4 && df % 2 == 0 && dh <= df / 2) {
    g = (df - 2) / 2;
  } else if (p == 2 && dh >= 2 && df <= 2 * dh) {
    g = dh - 1;
  } else {
    throw Error(ErrorKind::InvalidCurve, "degrees do not describe a hyperelliptic-even model");
  }
  return static_cast<int>(g);
}

std::uint64_t count_points(const ExplicitModel& model, std::uint64_t q, unsigned r) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < r; ++i) {
    size *= q;
    if (size > FiniteField::kMaxSize)
      throw Error(ErrorKind::TooLarge, "q^r = " + std::to_string(q) + "^" + std::to_string(r) +
                                           " exceeds the enumeration guard 10^6");
  }
  if (model.kind == ModelKind::ProjectiveLine) return size + 1;
  if (!is_prime(q)) throw Error(ErrorKind::InvalidCurve, "explicit models need a prime field size");
  const int g = model_genus(model, q);
  check_smooth(model, q);
  const FiniteField F(static_cast<std::uint32_t>(q), r);
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < F.size(); ++x) {
    count += quadratic_solutions(F, F.eval(model.h, x), F.eval(model.f, x));
  }
  if (model.kind == ModelKind::HyperellipticOdd) return count + 1;
  // Points at infinity of the even model: Y^2 + h_{g+1} Y = f_{2g+2}.
  const auto top = static_cast<std::size_t>(g + 1);
  return count + quadratic_solutions(F, F.from_int(coeff(model.h, top)), F.from_int(coeff(model.f, 2 * top)));
}

std::vector<Rat> weil_power_sums(const Poly& weil, std::size_t count) {
  // P(T) = sum c_k T^k = prod (1 - a_i T), so e_k = (-1)^k c_k.
  const long n = weil.degree();
  std::vector<Rat> e(static_cast<std::size_t>(std::max(n, 0L)) + 1);
  for (long k = 0; k <= n; ++k) e[static_cast<std::size_t>(k)] = (k % 2 ? -weil[k] : weil[k]);
  std::vector<Rat> s(count + 1);
  for (std::size_t m = 1; m <= count; ++m) {
    Rat acc;
    for (std::size_t i = 1; i < m; ++i) {
      if (i >= e.size()) break;
      const Rat term = e[i] * s[m - i];
      acc += (i % 2 ? term : -term);
    }
    if (m < e.size()) acc += (m % 2 ? Rat(1) : Rat(-1)) * Rat(static_cast<long>(m)) * e[m];
    s[m] = acc;
  }
  s.erase(s.begin());
  return s;
}

namespace {

// Elementary symmetric functions e_1..e_k from power sums s[0] = s_1, ...
std::vector<Rat> elementary_from_power_sums(const std::vector<Rat>& s, std::size_t k) {
  std::vector<Rat> e(k + 1);
  e[0] = Rat(1);
  for (std::size_t m = 1; m <= k; ++m) {
    Rat acc;
    for (std::size_t i = 1; i <= m; ++i) {
      const Rat term = e[m - i] * s[i - 1];
      acc += (i % 2 ? term : -term);
    }
    e[m] = acc / Rat(static_cast<long>(m));
  }
  return e;
}

Rat q_pow(std::uint64_t q, long e) { return pow(Rat(static_cast<long>(q)), e); }

}  // namespace

bool satisfies_functional_equation(const Poly& weil, int genus, std::uint64_t q) {
  if (weil[0] != Rat(1) || weil.degree() != 2 * genus) return false;
  for (int k = 0; k <= 2 * genus; ++k) {
    if (weil[static_cast<std::size_t>(2 * genus - k)] != q_pow(q, genus - k) * weil[static_cast<std::size_t>(k)])
      return false;
  }
  return true;
}

Poly weil_from_counts(const std::vector<Integer>& counts, int genus, std::uint64_t q) {
  if (genus < 0) throw Error(ErrorKind::InvalidArgument, "negative genus");
  const auto g = static_cast<std::size_t>(genus);
  if (counts.size() < g)
    throw Error(ErrorKind::InvalidArgument, "need at least g = " + std::to_string(g) + " point counts");
  std::vector<Rat> s;
  for (std::size_t r = 1; r <= counts.size(); ++r) {
    const Rat qr = q_pow(q, static_cast<long>(r));
    const Rat a = qr + Rat(1) - Rat(counts[r - 1]);
    // Weil bound |a| <= 2g q^{r/2}, squared to stay exact.
    if (a * a > Rat(static_cast<long>(4 * g * g)) * qr)
      throw Error(ErrorKind::InconsistentCounts,
                  "count #C(F_{q^" + std::to_string(r) + "}) = " + counts[r - 1].get_str() +
                      " violates the Weil bound for genus " + std::to_string(g));
    s.push_back(a);
  }
  const std::vector<Rat> e = elementary_from_power_sums(s, g);
  std::vector<Rat> c(2 * g + 1);
  for (std::size_t k = 0; k <= g; ++k) {
    c[k] = (k % 2 ? -e[k] : e[k]);
    if (!c[k].is_integer())
      throw Error(ErrorKind::InconsistentCounts, "non-integral Weil coefficient " + c[k].str());
  }
  for (std::size_t k = 0; k < g; ++k) c[2 * g - k] = q_pow(q, static_cast<long>(g - k)) * c[k];
  Poly weil(std::move(c));
  const std::vector<Rat> check = weil_power_sums(weil, counts.size());
  for (std::size_t r = 1; r <= counts.size(); ++r) {
    if (check[r - 1] != s[r - 1])
      throw Error(ErrorKind::InconsistentCounts,
                  "genus-" + std::to_string(g) + " numerator predicts #C(F_{q^" + std::to_string(r) + "}) = " +
                      (q_pow(q, static_cast<long>(r)) + Rat(1) - check[r - 1]).str() + " but the count is " +
                      counts[r - 1].get_str());
  }
  return weil;
}

Curve Curve::from_weil(int genus, std::uint64_t q, Poly weil) {
  if (genus < 0) throw Error(ErrorKind::InvalidCurve, "negative genus");
  if (prime_power(q).first == 0) throw Error(ErrorKind::InvalidCurve, std::to_string(q) + " is not a prime power");
  for (const auto& c : weil.coeffs())
    if (!c.is_integer()) throw Error(ErrorKind::InvalidCurve, "Weil numerator must have integer coefficients");
  if (!satisfies_functional_equation(weil, genus, q))
    throw Error(ErrorKind::InvalidCurve, "Weil numerator fails P(0) = 1, deg P = 2g or the functional equation");
  return Curve(genus, q, std::move(weil));
}

Curve Curve::projective_line(std::uint64_t q) {
  Curve c = from_weil(0, q, Poly{Rat(1)});
  c.model_ = ExplicitModel{ModelKind::ProjectiveLine, {}, {}};
  return c;
}

Curve Curve::from_spec(const CurveSpec& spec) {
  if (const auto* weil = std::get_if<Poly>(&spec.source)) return from_weil(spec.genus, spec.q, *weil);
  const auto& model = std::get<ExplicitModel>(spec.source);
  // Count as far as the enumeration guard allows, at least through 2g+2.
  std::vector<Integer> counts;
  const unsigned want = static_cast<unsigned>(2 * std::max(spec.genus, 0) + 2);
  for (unsigned r = 1; r <= want; ++r) {
    try {
      counts.emplace_back(static_cast<unsigned long>(count_points(model, spec.q, r)));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::TooLarge || r <= static_cast<unsigned>(spec.genus)) throw;
      break;
    }
  }
  Curve c = from_weil(spec.genus, spec.q, weil_from_counts(counts, spec.genus, spec.q));
  c.model_ = model;
  c.enumerated_ = std::move(counts);
  return c;
}

Rat Curve::power_sum(unsigned r) const {
  if (r == 0) return Rat(2L * genus_);
  return weil_power_sums(weil_, r).back();
}

Integer Curve::points(unsigned r) const {
  const Rat n = q_pow(q_, static_cast<long>(r)) + Rat(1) - power_sum(r);
  return n.num();
}

Poly Curve::weil_over(unsigned r) const {
  if (r == 1) return weil_;
  const auto g2 = static_cast<std::size_t>(2 * genus_);
  const std::vector<Rat> s = weil_power_sums(weil_, g2 * r);
  std::vector<Rat> sr;
  for (std::size_t k = 1; k <= g2; ++k) sr.push_back(s[k * r - 1]);
  const std::vector<Rat> e = elementary_from_power_sums(sr, g2);
  std::vector<Rat> c(g2 + 1);
  for (std::size_t k = 0; k <= g2; ++k) c[k] = (k % 2 ? -e[k] : e[k]);
  return Poly(std::move(c));
}

Curve Curve::base_change(unsigned r) const {
  std::uint64_t qr = 1;
  for (unsigned i = 0; i < r; ++i) qr *= q_;
  return Curve(genus_, qr, weil_over(r));
}

RatFunc zeta_ratfunc(const Curve& curve) {
  const Rat q(static_cast<long>(curve.q()));
  return RatFunc(curve.weil(), Poly{Rat(1), Rat(-1)} * Poly{Rat(1), -q});
}

std::vector<Integer> sym_counts(const Curve& curve, std::size_t J) {
  const TruncSeries z = zeta_ratfunc(curve).expand(J);
  std::vector<Integer> out;
  out.reserve(J + 1);
  for (std::size_t j = 0; j <= J; ++j) {
    if (!z[j].is_integer() || z[j].sign() < 0)
      throw Error(ErrorKind::NonIntegralCount, "zeta coefficient " + z[j].str() + " is not a count");
    out.push_back(z[j].num());
  }
  return out;
}

Integer jac_count(const Curve& curve) { return curve.weil().eval(Rat(1)).num(); }

Rat zeta_special_value(const Curve& curve, long i) {
  if (i == 0 || i == 1) throw Error(ErrorKind::PoleAtPoint, "zeta_C has a pole at " + std::to_string(i));
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "special values are taken at i >= 2");
  return zeta_ratfunc(curve).eval(q_pow(curve.q(), -i));
}

}  // namespace motbun
