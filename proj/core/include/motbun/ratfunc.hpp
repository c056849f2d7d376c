#pragma once

#include <iosfwd>

#include "motbun/poly.hpp"
#include "motbun/series.hpp"

namespace motbun {

// Rational function num/den expandable at the origin. Normal form: the
// fraction is reduced and den(0) = 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_{Rat(1)} {}
  RatFunc(const Poly& num) : RatFunc(num, Poly{Rat(1)}) {}
  // Throws PoleAtOrigin if the reduced denominator vanishes at 0.
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  // Taylor expansion at 0 through z^order.
  TruncSeries expand(std::size_t order) const;
  // Exact value at x; throws PoleAtPoint when den(x) = 0.
  Rat eval(const Rat& x) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace motbun
