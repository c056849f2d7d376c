#pragma once

#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "motbun/rational.hpp"

namespace motbun {

// Dense univariate polynomial over Q. The leading coefficient is nonzero
// unless the polynomial is zero (empty coefficient vector).
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rat& c) { return Poly({c}); }
  static Poly monomial(const Rat& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  // Coefficient of T^k, zero beyond the degree.
  Rat operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const noexcept { return c_; }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  // p(c * T)
  Poly scale_variable(const Rat& c) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c);
  Poly operator-() const { return *this * Rat(-1); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Euclidean division; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned e);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace motbun
