#include <gtest/gtest.h>

#include <random>

#include "motbun/error.hpp"
#include "motbun/lambda.hpp"
#include "test_support.hpp"

namespace motbun {
namespace {

using testing::random_rat;

AdamsClass<Rat> cls(std::initializer_list<Rat> psi) { return AdamsClass<Rat>(std::vector<Rat>(psi)); }

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

TEST(Adams, SumAndProduct) {
  EXPECT_EQ(adams_sum(cls({3, 5}), cls({1, 1})).values(), cls({4, 6}).values());
  EXPECT_EQ(adams_sum(cls({3, 5}), constant_class(Rat(0), 2)).values(), cls({3, 5}).values());
  EXPECT_EQ(adams_mul(cls({2, 4}), cls({3, 9})).values(), cls({6, 36}).values());
  EXPECT_EQ(adams_mul(cls({2, 4}), constant_class(Rat(1), 2)).values(), cls({2, 4}).values());
}

TEST(Adams, Tate) {
  EXPECT_EQ(tate_count(1, Rat(3), 2).psi(2), Rat(9));
  EXPECT_EQ(tate_count(0, Rat(3), 4).values(), constant_class(Rat(1), 4).values());
  EXPECT_EQ(tate_count(-2, Rat(2), 1).psi(1), Rat(Integer(1), Integer(4)));
  EXPECT_THROW(tate_poincare(-1, 4, 4), Error);
  EXPECT_THROW(cls({1}).psi(2), Error);
}

TEST(Sym, NewtonIdentity) {
  const Rat p1(7), p2(-3);
  EXPECT_EQ(sym_n(cls({p1, p2}), 2), (p1 * p1 + p2) / Rat(2));
}

TEST(Sym, ProjectiveLineGivesPlane) {
  for (long q : {2, 3, 4, 5, 7}) {
    std::vector<Rat> psi;
    for (long r = 1; r <= 2; ++r) psi.push_back(pow(Rat(q), r) + Rat(1));
    EXPECT_EQ(sym_n(AdamsClass<Rat>(psi), 2), Rat(q * q + q + 1));
  }
}

TEST(Sym, EllipticSecondSymmetricPower) {
  // #E(F_2) = 3 and #E(F_4) = 9 for y^2 + y = x^3.
  const Rat p1(static_cast<long>(testing::brute_count_ell_q2(1)));
  const Rat p2(static_cast<long>(testing::brute_count_ell_q2(2)));
  EXPECT_EQ(sym_n(cls({p1, p2}), 2), Rat(9));
}

TEST(Sym, ZeroClassAndDepth) {
  const auto s = sym_star(constant_class(Rat(0), 5), 5);
  EXPECT_EQ(s[0], Rat(1));
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(s[n], Rat(0));
  EXPECT_THROW(sym_star(cls({1, 2}), 3), Error);
  EXPECT_THROW(sym_star(AdamsClass<Rat>(), 0), Error);
}

TEST(Sym, OddClassPoincare) {
  const std::size_t N = 6;
  const auto two = sym_star(odd_class_poincare(2, N, N), N);
  EXPECT_EQ(two[1], TruncSeries::monomial(N, Rat(2), 1));
  EXPECT_EQ(two[2], TruncSeries::monomial(N, Rat(1), 2));
  EXPECT_TRUE(two[3].is_zero());
  const auto zero = sym_star(odd_class_poincare(0, N, N), N);
  for (std::size_t n = 1; n <= N; ++n) EXPECT_TRUE(zero[n].is_zero());
  EXPECT_EQ(sym_n(odd_class_poincare(4, N, N), 2), TruncSeries::monomial(N, Rat(6), 2));
}

// Odd classes of dimension m: Sym^n = C(m, n) z^n.
TEST(Sym, OddClassBinomialProperty) {
  const std::size_t N = 12;
  for (long m = 0; m <= 8; ++m) {
    const auto s = sym_star(odd_class_poincare(m, N, N), N);
    for (std::size_t n = 0; n <= N; ++n) {
      const Integer c = static_cast<long>(n) <= m ? binomial(m, static_cast<long>(n)) : Integer(0);
      EXPECT_EQ(s[n], TruncSeries::monomial(N, Rat(c), n)) << "m=" << m << " n=" << n;
    }
  }
}

// Even class of dimension m concentrated in degree 0: Sym^n = C(m+n-1, n).
TEST(Sym, IntegerClassMultisetProperty) {
  for (long m = 0; m <= 6; ++m) {
    const auto s = sym_star(constant_class(Rat(m), 8), 8);
    for (long n = 1; n <= 8; ++n) EXPECT_EQ(s[n], Rat(m == 0 ? Integer(0) : binomial(m + n - 1, n)));
  }
}

TEST(Sym, SumIsConvolutionProperty) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t depth = 1 + rng() % 7;
    std::vector<Rat> a, b;
    for (std::size_t r = 0; r < depth; ++r) {
      a.push_back(random_rat(rng, 9, 4));
      b.push_back(random_rat(rng, 9, 4));
    }
    const AdamsClass<Rat> A(a), B(b);
    EXPECT_EQ(sym_star(adams_sum(A, B), depth).coeffs, convolve(sym_star(A, depth), sym_star(B, depth)).coeffs);
  }
}

TEST(PoincareAdams, SuperSign) {
  // psi^2 of 1 + 2z + z^2 sends z to -z^2.
  const TruncSeries f(6, {1, 2, 1});
  EXPECT_EQ(poincare_adams(f, 2), TruncSeries(6, {1, 0, -2, 0, 1}));
  EXPECT_EQ(poincare_adams(f, 3), TruncSeries(6, {1, 0, 0, 2, 0, 0, 1}));
}

}  // namespace
}  // namespace motbun
