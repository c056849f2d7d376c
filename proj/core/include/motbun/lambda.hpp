#pragma once

// Pre-lambda-ring arithmetic on realized classes. A class is presented by its
// Adams character r -> psi^r for r = 1..depth; sums, products and Tate twists
// act pointwise and Sym^n comes from Newton's recursion
//
//   n * sigma_n = sum_{r=1}^{n} psi^r * sigma_{n-r},   sigma_0 = 1.
//
// Values are Rat (point-count realizations) or TruncSeries in z (Poincare
// realizations).

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "motbun/error.hpp"
#include "motbun/rational.hpp"
#include "motbun/series.hpp"

namespace motbun {

namespace detail {

inline Rat one_like(const Rat&) { return Rat(1); }
inline TruncSeries one_like(const TruncSeries& x) { return TruncSeries::one(x.order()); }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline TruncSeries zero_like(const TruncSeries& x) { return TruncSeries::zero(x.order()); }

}  // namespace detail

template <typename V>
class AdamsClass {
 public:
  AdamsClass() = default;
  // psi[r-1] holds psi^r.
  explicit AdamsClass(std::vector<V> psi) : psi_(std::move(psi)) {}

  std::size_t depth() const noexcept { return psi_.size(); }
  // 1-based Adams index.
  const V& psi(std::size_t r) const {
    if (r == 0 || r > psi_.size())
      throw Error(ErrorKind::InsufficientDepth,
                  "psi^" + std::to_string(r) + " requested from a class of depth " + std::to_string(psi_.size()));
    return psi_[r - 1];
  }
  const std::vector<V>& values() const noexcept { return psi_; }

 private:
  std::vector<V> psi_;
};

template <typename V>
AdamsClass<V> adams_sum(const AdamsClass<V>& a, const AdamsClass<V>& b) {
  const std::size_t depth = std::min(a.depth(), b.depth());
  std::vector<V> psi;
  psi.reserve(depth);
  for (std::size_t r = 1; r <= depth; ++r) psi.push_back(a.psi(r) + b.psi(r));
  return AdamsClass<V>(std::move(psi));
}

template <typename V>
AdamsClass<V> adams_mul(const AdamsClass<V>& a, const AdamsClass<V>& b) {
  const std::size_t depth = std::min(a.depth(), b.depth());
  std::vector<V> psi;
  psi.reserve(depth);
  for (std::size_t r = 1; r <= depth; ++r) psi.push_back(a.psi(r) * b.psi(r));
  return AdamsClass<V>(std::move(psi));
}

// psi^r = c for every r; the unit and zero classes are the cases c = 1, 0.
template <typename V>
AdamsClass<V> constant_class(const V& c, std::size_t depth) {
  return AdamsClass<V>(std::vector<V>(depth, c));
}

// Point-count realization of Q{i}: psi^r = q^{i r}. Negative i is allowed.
inline AdamsClass<Rat> tate_count(long i, const Rat& q, std::size_t depth) {
  std::vector<Rat> psi;
  psi.reserve(depth);
  for (std::size_t r = 1; r <= depth; ++r) psi.push_back(pow(q, i * static_cast<long>(r)));
  return AdamsClass<Rat>(std::move(psi));
}

// Poincare realization of Q{i}: psi^r = z^{2 i r}. Throws
// NegativeTwistInPoincare for i < 0.
inline AdamsClass<TruncSeries> tate_poincare(long i, std::size_t order, std::size_t depth) {
  if (i < 0)
    throw Error(ErrorKind::NegativeTwistInPoincare,
                "Q{" + std::to_string(i) + "} has no power-series Poincare realization");
  std::vector<TruncSeries> psi;
  psi.reserve(depth);
  for (std::size_t r = 1; r <= depth; ++r)
    psi.push_back(TruncSeries::monomial(order, Rat(1), 2 * static_cast<std::size_t>(i) * r));
  return AdamsClass<TruncSeries>(std::move(psi));
}

// An odd class of dimension m in z-degree 1: psi^r = (-1)^{r+1} m z^r, whose
// Sym generating series is (1 + s z)^m.
inline AdamsClass<TruncSeries> odd_class_poincare(long m, std::size_t order, std::size_t depth) {
  std::vector<TruncSeries> psi;
  psi.reserve(depth);
  for (std::size_t r = 1; r <= depth; ++r)
    psi.push_back(TruncSeries::monomial(order, Rat(r % 2 == 1 ? m : -m), r));
  return AdamsClass<TruncSeries>(std::move(psi));
}

// Adams operation on a Poincare series: psi^r f(z) = f((-1)^{r+1} z^r),
// truncated back to the order of f. Odd degrees pick up the super sign.
inline TruncSeries poincare_adams(const TruncSeries& f, std::size_t r) {
  return substitute(f, r, Rat(r % 2 == 1 ? 1 : -1)).truncate(f.order());
}

// Adams character of a Poincare series up to the given depth.
inline AdamsClass<TruncSeries> adams_of_poincare(const TruncSeries& f, std::size_t depth) {
  std::vector<TruncSeries> psi;
  psi.reserve(depth);
  for (std::size_t r = 1; r <= depth; ++r) psi.push_back(poincare_adams(f, r));
  return AdamsClass<TruncSeries>(std::move(psi));
}

// coeffs[n] realizes Sym^n of a class; coeffs[0] = 1.
template <typename V>
struct SymSeries {
  std::vector<V> coeffs;

  std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const V& operator[](std::size_t n) const { return coeffs.at(n); }
};

// sigma_0..sigma_order by Newton's recursion. Throws InsufficientDepth when
// depth < order or the character is empty.
template <typename V>
SymSeries<V> sym_star(const AdamsClass<V>& a, std::size_t order) {
  if (a.depth() < order)
    throw Error(ErrorKind::InsufficientDepth, "Sym^" + std::to_string(order) + " needs Adams depth " +
                                                  std::to_string(order) + ", have " + std::to_string(a.depth()));
  if (a.depth() == 0) throw Error(ErrorKind::InsufficientDepth, "empty Adams character");
  std::vector<V> sigma;
  sigma.reserve(order + 1);
  sigma.push_back(detail::one_like(a.psi(1)));
  for (std::size_t n = 1; n <= order; ++n) {
    V acc = detail::zero_like(a.psi(1));
    for (std::size_t r = 1; r <= n; ++r) acc += a.psi(r) * sigma[n - r];
    sigma.push_back(acc * Rat(Integer(1), Integer(static_cast<unsigned long>(n))));
  }
  return SymSeries<V>{std::move(sigma)};
}

template <typename V>
V sym_n(const AdamsClass<V>& a, std::size_t n) {
  return sym_star(a, n)[n];
}

// Termwise Cauchy convolution of two Sym series, truncated to the shorter.
template <typename V>
SymSeries<V> convolve(const SymSeries<V>& a, const SymSeries<V>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<V> out;
  out.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    V acc = detail::zero_like(a[0]);
    for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    out.push_back(std::move(acc));
  }
  return SymSeries<V>{std::move(out)};
}

}  // namespace motbun
