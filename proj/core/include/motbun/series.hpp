#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "motbun/poly.hpp"
#include "motbun/rational.hpp"

namespace motbun {

// Formal power series in z over Q, known exactly for exponents 0..order.
// Mixed-order arithmetic truncates to the smaller order.
class TruncSeries {
 public:
  // The zero series at order 0.
  TruncSeries() : c_(1) {}
  TruncSeries(std::size_t order, std::vector<Rat> coeffs);
  TruncSeries(std::size_t order, std::initializer_list<Rat> coeffs)
      : TruncSeries(order, std::vector<Rat>(coeffs)) {}

  static TruncSeries zero(std::size_t order) { return TruncSeries(order, std::vector<Rat>{}); }
  static TruncSeries constant(std::size_t order, const Rat& c) { return TruncSeries(order, {c}); }
  static TruncSeries one(std::size_t order) { return constant(order, Rat(1)); }
  static TruncSeries monomial(std::size_t order, const Rat& c, std::size_t exponent);
  static TruncSeries from_poly(std::size_t order, const Poly& p);

  std::size_t order() const noexcept { return c_.size() - 1; }
  const Rat& operator[](std::size_t k) const { return c_.at(k); }
  const std::vector<Rat>& coeffs() const noexcept { return c_; }
  // Smallest exponent with a nonzero coefficient, or order()+1 when zero.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() > order(); }

  TruncSeries truncate(std::size_t order) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rat& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rat& c) { return a *= c; }
  friend TruncSeries operator*(const Rat& c, TruncSeries a) { return a *= c; }
  TruncSeries operator-() const { return *this * Rat(-1); }

  // Multiplication by z^k, keeping the order.
  TruncSeries shift(std::size_t k) const;

  // Equal iff coefficients agree up to the smaller of the two orders.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  std::vector<Rat> c_;
};

// Multiplicative inverse; throws ZeroConstantTerm when a(0) = 0.
TruncSeries inv(const TruncSeries& a);

// a(c * z^k): exponent j moves to j*k with coefficient scaled by c^j. The
// result has order a.order() * k (k >= 1).
TruncSeries substitute(const TruncSeries& a, std::size_t k, const Rat& c);

TruncSeries pow(const TruncSeries& a, unsigned e);

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

}  // namespace motbun
