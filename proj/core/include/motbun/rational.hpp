#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace motbun {

using Integer = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}
  Rat(long v) : v_(v) {}
  Rat(long long v) : v_(Integer(std::to_string(v))) {}
  Rat(const Integer& v) : v_(v) {}
  Rat(const Integer& num, const Integer& den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p", "p/q", decimals ("0.25") and scientific notation ("1e-9").
  static Rat parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  const mpq_class& raw() const noexcept { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "num" for integers, "num/den" otherwise.
  std::string str() const;

 private:
  mpq_class v_{0};
};

Rat abs(const Rat& x);
// x^e for any integer e; x must be nonzero when e < 0.
Rat pow(const Rat& x, long e);
// Integral value as int64; throws NonIntegralCount/TooLarge otherwise.
std::int64_t to_int64(const Rat& x);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace motbun
