#include "motbun/poly.hpp"

#include <ostream>

#include "motbun/error.hpp"

namespace motbun {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::scale_variable(const Rat& c) const {
  std::vector<Rat> v(c_);
  Rat power(1);
  for (auto& x : v) {
    x *= power;
    power *= c;
  }
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(Poly a, const Rat& c) {
  for (auto& x : a.c_) x *= c;
  a.trim();
  return a;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(rem.size() - b.coeffs().size() + 1);
  const Rat lead = b.leading();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rat f = rem[k + db] / lead;
    quo[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Rat(1) / x.leading());
}

Poly pow(const Poly& p, unsigned e) {
  Poly result{Rat(1)};
  Poly base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  os << '[';
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) os << (k ? ", " : "") << p.coeffs()[k];
  return os << ']';
}

}  // namespace motbun
