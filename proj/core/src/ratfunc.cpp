#include "motbun/ratfunc.hpp"

#include <algorithm>
#include <ostream>

#include "motbun/error.hpp"

namespace motbun {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    den_ = Poly{Rat(1)};
    return;
  }
  const Poly g = gcd(num, den);
  num_ = divmod(num, g).first;
  den_ = divmod(den, g).first;
  const Rat d0 = den_[0];
  if (d0.is_zero()) throw Error(ErrorKind::PoleAtOrigin, "denominator vanishes at 0");
  num_ = num_ * (Rat(1) / d0);
  den_ = den_ * (Rat(1) / d0);
}

TruncSeries RatFunc::expand(std::size_t order) const {
  // den(0) = 1, so c_k = num_k - sum_{j>=1} den_j c_{k-j}.
  std::vector<Rat> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Rat acc = num_[k];
    const std::size_t top = std::min<std::size_t>(k, den_.coeffs().size() - 1);
    for (std::size_t j = 1; j <= top; ++j) acc -= den_[j] * c[k - j];
    c[k] = acc;
  }
  return TruncSeries(order, std::move(c));
}

Rat RatFunc::eval(const Rat& x) const {
  const Rat d = den_.eval(x);
  if (d.is_zero()) throw Error(ErrorKind::PoleAtPoint, "pole at " + x.str());
  return num_.eval(x) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  return os << '(' << f.num() << ")/(" << f.den() << ')';
}

}  // namespace motbun
