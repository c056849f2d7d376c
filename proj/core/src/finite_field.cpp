#include "motbun/finite_field.hpp"

#include <string>
#include <utility>

#include "motbun/error.hpp"

namespace motbun {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint64_t, std::uint32_t> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return {0, 0};
  return {p, k};
}

namespace {

// Digit-wise operations on base-p encodings.
std::uint32_t digit_add(std::uint32_t a, std::uint32_t b, std::uint32_t p, int sign) {
  if (p == 2) return a ^ b;
  std::uint32_t out = 0, place = 1;
  while (a || b) {
    const std::uint32_t da = a % p, db = b % p;
    const std::uint32_t d = sign > 0 ? (da + db) % p : (da + p - db) % p;
    out += d * place;
    place *= p;
    a /= p;
    b /= p;
  }
  return out;
}

// Multiply by the generator x modulo the monic polynomial with low
// coefficients `low` (x^k = -sum low_i x^i).
std::uint32_t times_x(std::uint32_t a, const std::vector<std::uint32_t>& low, std::uint32_t p,
                      std::uint32_t size) {
  const std::uint32_t k = static_cast<std::uint32_t>(low.size());
  const std::uint32_t top = a / (size / p);
  std::uint32_t shifted = (a % (size / p)) * p;
  if (top == 0) return shifted;
  std::uint32_t out = 0, place = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t d = shifted % p;
    const std::uint32_t sub = (top * low[i]) % p;
    out += ((d + p - sub) % p) * place;
    place *= p;
    shifted /= p;
  }
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "field degree must be positive");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    size *= p;
    if (size > kMaxSize)
      throw Error(ErrorKind::TooLarge, "field of size " + std::to_string(p) + "^" + std::to_string(k) +
                                           " exceeds the enumeration guard");
  }
  size_ = static_cast<std::uint32_t>(size);
  log_.assign(size_, 0);
  exp_.assign(size_ - 1 == 0 ? 1 : size_ - 1, 0);
  if (size_ == 2) {
    exp_[0] = 1;
    log_[1] = 0;
    return;
  }
  // Search the monic polynomials of degree k for a primitive one: the powers
  // of x must run through all nonzero elements before returning to 1.
  std::vector<std::uint32_t> low(k);
  for (std::uint64_t code = 0; code < size; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      low[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (low[0] == 0) continue;
    std::uint32_t cur = 1;
    std::uint32_t steps = 0;
    bool ok = true;
    // For k = 1 the element "x" is the constant -low[0].
    do {
      exp_[steps] = cur;
      cur = times_x(cur, low, p_, size_);
      ++steps;
      if (cur == 1 && steps < size_ - 1) {
        ok = false;
        break;
      }
    } while (steps < size_ - 1);
    if (ok && cur == 1) {
      for (std::uint32_t e = 0; e < size_ - 1; ++e) log_[exp_[e]] = e;
      return;
    }
  }
  throw Error(ErrorKind::Internal, "no primitive polynomial found");
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  const std::int64_t m = static_cast<std::int64_t>(p_);
  return static_cast<Elem>(((v % m) + m) % m);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const { return digit_add(a, b, p_, 1); }
FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return digit_add(a, b, p_, -1); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
  return exp_[e % (size_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in a finite field");
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

int FiniteField::legendre(Elem a) const {
  if (p_ == 2) throw Error(ErrorKind::Internal, "quadratic character in characteristic 2");
  if (a == 0) return 0;
  return log_[a] % 2 == 0 ? 1 : -1;
}

int FiniteField::trace2(Elem a) const {
  if (p_ != 2) throw Error(ErrorKind::Internal, "F_2 trace outside characteristic 2");
  Elem acc = 0, cur = a;
  for (std::uint32_t i = 0; i < k_; ++i) {
    acc ^= cur;
    cur = mul(cur, cur);
  }
  return static_cast<int>(acc);
}

FiniteField::Elem FiniteField::eval(const std::vector<std::int64_t>& coeffs, Elem x) const {
  Elem acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, x), from_int(*it));
  return acc;
}

}  // namespace motbun
