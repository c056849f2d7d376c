#pragma once

// Brute-force reference computations. Nothing here goes through the
// lambda-ring engine or the formula pipelines.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "motbun/rational.hpp"

namespace motbun::oracle {

// a[r-1] = number of closed points of degree r, from p[r-1] = #X(F_{q^r}) by
// Moebius inversion of p_r = sum_{s | r} s a_s. Throws InconsistentCounts if
// some a_r is negative or non-integral.
struct ClosedPointCensus {
  std::vector<Integer> a;

  static ClosedPointCensus from_counts(const std::vector<Integer>& p);
  std::size_t depth() const noexcept { return a.size(); }
};

// Number of effective zero-cycles of degree j (multisets of closed points),
// i.e. the T^j coefficient of prod_r (1 - T^r)^{-a_r}. InsufficientCensus
// when j exceeds the census depth.
Integer divisor_count(const ClosedPointCensus& census, std::size_t j);

struct Interval {
  Rat value;  // partial sum (a lower bound: all terms are positive)
  Rat bound;  // the true sum lies in [value, value + bound]

  bool contains(const Rat& x) const { return value <= x && x <= value + bound; }
};

// Groupoid cardinality of rank-n degree-d bundles on P^1 over F_q, summing
// 1/#Aut over splitting types O(a_1) + ... + O(a_n), a_1 >= ... >= a_n, until
// the certified tail drops below tail_eps. n <= 3.
Interval split_bundle_count_p1(long n, long d, std::uint64_t q, const Rat& tail_eps);

// Same sum with the spread a_1 - a_n capped at max_spread, with its tail bound.
Interval split_bundle_partial_p1(long n, long d, std::uint64_t q, long max_spread);

// |GL_m(F_q)|
Integer gl_order(long m, std::uint64_t q);

}  // namespace motbun::oracle
