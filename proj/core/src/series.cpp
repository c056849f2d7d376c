#include "motbun/series.hpp"

#include <algorithm>
#include <ostream>

#include "motbun/error.hpp"

namespace motbun {

TruncSeries::TruncSeries(std::size_t order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

TruncSeries TruncSeries::monomial(std::size_t order, const Rat& c, std::size_t exponent) {
  TruncSeries s = zero(order);
  if (exponent <= order) s.c_[exponent] = c;
  return s;
}

TruncSeries TruncSeries::from_poly(std::size_t order, const Poly& p) {
  std::vector<Rat> v(p.coeffs().begin(),
                     p.coeffs().begin() + static_cast<long>(std::min(p.coeffs().size(), order + 1)));
  return TruncSeries(order, std::move(v));
}

std::size_t TruncSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return k;
  return c_.size();
}

TruncSeries TruncSeries::truncate(std::size_t order) const {
  return TruncSeries(std::min(order, this->order()), c_);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rat& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  std::vector<Rat> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return TruncSeries(n - 1, std::move(v));
}

TruncSeries TruncSeries::shift(std::size_t k) const {
  std::vector<Rat> v(c_.size());
  for (std::size_t j = 0; j + k < c_.size(); ++j) v[j + k] = c_[j];
  return TruncSeries(order(), std::move(v));
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  return std::equal(a.c_.begin(), a.c_.begin() + static_cast<long>(n), b.c_.begin());
}

TruncSeries inv(const TruncSeries& a) {
  if (a[0].is_zero()) throw Error(ErrorKind::ZeroConstantTerm, "series has zero constant term");
  const std::size_t n = a.order();
  std::vector<Rat> b(n + 1);
  const Rat a0inv = Rat(1) / a[0];
  b[0] = a0inv;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat acc;
    for (std::size_t j = 1; j <= k; ++j)
      if (!a[j].is_zero()) acc += a[j] * b[k - j];
    b[k] = -acc * a0inv;
  }
  return TruncSeries(n, std::move(b));
}

TruncSeries substitute(const TruncSeries& a, std::size_t k, const Rat& c) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "substitution exponent must be positive");
  const std::size_t order = a.order() * k;
  std::vector<Rat> v(order + 1);
  Rat scale(1);
  for (std::size_t j = 0; j <= a.order(); ++j) {
    v[j * k] = a[j] * scale;
    scale *= c;
  }
  return TruncSeries(order, std::move(v));
}

TruncSeries pow(const TruncSeries& a, unsigned e) {
  TruncSeries result = TruncSeries::one(a.order());
  TruncSeries base = a;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
  for (std::size_t k = 0; k <= s.order(); ++k) os << (k ? " " : "") << s[k];
  return os;
}

}  // namespace motbun
