#include "motbun/oracle.hpp"

#include <string>

#include "motbun/error.hpp"

namespace motbun::oracle {

namespace {

int moebius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Integer binomial(const Integer& top, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
  return out;
}

}  // namespace

ClosedPointCensus ClosedPointCensus::from_counts(const std::vector<Integer>& p) {
  ClosedPointCensus c;
  for (std::size_t r = 1; r <= p.size(); ++r) {
    Integer acc = 0;
    for (std::size_t s = 1; s <= r; ++s)
      if (r % s == 0) acc += moebius(r / s) * p[s - 1];
    if (acc % static_cast<unsigned long>(r) != 0 || acc < 0)
      throw Error(ErrorKind::InconsistentCounts, "closed points of degree " + std::to_string(r) + ": " +
                                                     acc.get_str() + "/" + std::to_string(r));
    c.a.push_back(acc / static_cast<unsigned long>(r));
  }
  return c;
}

Integer divisor_count(const ClosedPointCensus& census, std::size_t j) {
  if (j > census.depth())
    throw Error(ErrorKind::InsufficientCensus, "degree " + std::to_string(j) + " needs closed points up to degree " +
                                                   std::to_string(j));
  std::vector<Integer> ways(j + 1, 0);
  ways[0] = 1;
  for (std::size_t r = 1; r <= j; ++r) {
    const Integer& a = census.a[r - 1];
    if (a == 0) continue;
    // Choose k points of degree r with repetition: C(a + k - 1, k) ways.
    std::vector<Integer> next(j + 1, 0);
    for (std::size_t base = 0; base <= j; ++base) {
      if (ways[base] == 0) continue;
      for (std::size_t k = 0; base + k * r <= j; ++k)
        next[base + k * r] += ways[base] * binomial(a + static_cast<unsigned long>(k) - 1, k);
    }
    ways = std::move(next);
  }
  return ways[j];
}

Integer gl_order(long m, std::uint64_t q) {
  Integer qq(static_cast<unsigned long>(q));
  Integer qm;
  mpz_pow_ui(qm.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(m));
  Integer out = 1, qi = 1;
  for (long i = 0; i < m; ++i) {
    out *= qm - qi;
    qi *= qq;
  }
  return out;
}

namespace {

Rat aut_inverse(const std::vector<long>& a, std::uint64_t q) {
  // Blocks of equal degrees contribute GL factors; each pair a_i > a_j
  // contributes Hom(O(a_j), O(a_i)) of dimension a_i - a_j + 1.
  Integer order = 1;
  std::size_t start = 0;
  while (start < a.size()) {
    std::size_t end = start;
    while (end < a.size() && a[end] == a[start]) ++end;
    order *= gl_order(static_cast<long>(end - start), q);
    start = end;
  }
  long unipotent = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) unipotent += a[i] - a[j] + 1;
  return Rat(1) / (Rat(order) * pow(Rat(static_cast<long>(q)), unipotent));
}

// Tail over spreads > max_spread: at most (s+1)^{n-2} types of spread s, each
// with 1/#Aut <= q^{-(s+1)} / (q-1)^n.
Rat tail_bound(long n, std::uint64_t q, long max_spread) {
  if (n == 1) return Rat(0);
  const Rat Q(static_cast<long>(q));
  const Rat x = Rat(1) / Q;
  const Rat pre = Rat(1) / pow(Q - Rat(1), n);
  const long K = max_spread + 2;
  if (n == 2) return pre * pow(x, K) / (Rat(1) - x);
  // sum_{k >= K} k x^k
  return pre * pow(x, K) * (Rat(K) - Rat(K - 1) * x) / pow(Rat(1) - x, 2);
}

}  // namespace

Interval split_bundle_partial_p1(long n, long d, std::uint64_t q, long max_spread) {
  if (n < 1 || n > 3) throw Error(ErrorKind::InvalidArgument, "splitting-type oracle supports 1 <= n <= 3");
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
  Rat total;
  std::vector<long> a(static_cast<std::size_t>(n));
  for (long spread = 0; spread <= max_spread; ++spread) {
    if (n == 1) {
      if (spread > 0) break;
      a[0] = d;
      total += aut_inverse(a, q);
      continue;
    }
    // Offsets of the middle entries above a_n, nonincreasing in [0, spread].
    std::vector<long> mid(static_cast<std::size_t>(n - 2), spread);
    auto visit = [&](auto&& self, std::size_t pos, long cap) -> void {
      if (pos == mid.size()) {
        long offset_sum = spread;
        for (long o : mid) offset_sum += o;
        const long rest = d - offset_sum;
        if (rest % n != 0) return;
        const long t = rest / n;
        a.front() = t + spread;
        for (std::size_t k = 0; k < mid.size(); ++k) a[k + 1] = t + mid[k];
        a.back() = t;
        total += aut_inverse(a, q);
        return;
      }
      for (long o = cap; o >= 0; --o) {
        mid[pos] = o;
        self(self, pos + 1, o);
      }
    };
    visit(visit, 0, spread);
  }
  return Interval{total, tail_bound(n, q, max_spread)};
}

Interval split_bundle_count_p1(long n, long d, std::uint64_t q, const Rat& tail_eps) {
  if (tail_eps.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "tail epsilon must be positive");
  long spread = 0;
  while (tail_bound(n, q, spread) > tail_eps) ++spread;
  return split_bundle_partial_p1(n, d, q, spread);
}

}  // namespace motbun::oracle
