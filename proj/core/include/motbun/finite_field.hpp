#pragma once

#include <cstdint>
#include <vector>

namespace motbun {

// F_{p^k} for small p^k (at most 10^6 elements). Elements are integers in
// [0, p^k) whose base-p digits are coefficients in a polynomial basis over a
// primitive modulus; multiplication goes through discrete-log tables.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxSize = 1'000'000;

  // Throws TooLarge if p^k exceeds kMaxSize, InvalidArgument if p is not prime.
  FiniteField(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return size_; }

  // Image of an integer under Z -> F_p -> F_{p^k}.
  Elem from_int(std::int64_t v) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;

  // Quadratic character (odd characteristic only): 0, 1 or -1.
  int legendre(Elem a) const;
  // Absolute trace to F_2 (characteristic 2 only): 0 or 1.
  int trace2(Elem a) const;

  // Horner evaluation of an integer-coefficient polynomial.
  Elem eval(const std::vector<std::int64_t>& coeffs, Elem x) const;

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t size_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
};

bool is_prime(std::uint64_t n);
// Returns (p, k) with n = p^k, or (0, 0) when n is not a prime power.
std::pair<std::uint64_t, std::uint32_t> prime_power(std::uint64_t n);

}  // namespace motbun
