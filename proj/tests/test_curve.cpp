#include <gtest/gtest.h>

#include "motbun/curve.hpp"
#include "motbun/curve_file.hpp"
#include "motbun/error.hpp"
#include "motbun/finite_field.hpp"
#include "motbun/lambda.hpp"
#include "motbun/oracle.hpp"
#include "test_support.hpp"

namespace motbun {
namespace {

using namespace motbun::testing;

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

ExplicitModel ell2_model() { return {ModelKind::HyperellipticOdd, {1}, {0, 0, 0, 1}}; }
ExplicitModel ell5_model() { return {ModelKind::HyperellipticOdd, {}, {0, 1, 0, 1}}; }

TEST(FiniteField, FieldAxiomsSmall) {
  for (auto [p, k] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {7u, 1u}}) {
    const FiniteField F(p, k);
    for (FiniteField::Elem a = 1; a < F.size(); ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
    for (FiniteField::Elem a = 0; a < F.size(); ++a)
      for (FiniteField::Elem b = 0; b < F.size(); ++b) EXPECT_EQ(F.sub(F.add(a, b), b), a);
  }
  EXPECT_EQ(kind_of([] { FiniteField(2, 20); }), ErrorKind::TooLarge);
  EXPECT_EQ(prime_power(27), (std::pair<std::uint64_t, std::uint32_t>{3, 3}));
  EXPECT_EQ(prime_power(12).first, 0u);
}

TEST(CountPoints, SpecValues) {
  EXPECT_EQ(count_points({ModelKind::ProjectiveLine, {}, {}}, 2, 1), 3u);
  EXPECT_EQ(count_points(ell2_model(), 2, 1), 3u);
  EXPECT_EQ(count_points(ell2_model(), 2, 2), 9u);
}

TEST(CountPoints, MatchesIndependentEnumeration) {
  for (unsigned r = 1; r <= 6; ++r) EXPECT_EQ(count_points(ell2_model(), 2, r), brute_count_ell_q2(r)) << r;
  for (unsigned r = 1; r <= 2; ++r) EXPECT_EQ(count_points(ell5_model(), 5, r), brute_count_ell_q5(r)) << r;
}

TEST(CountPoints, Errors) {
  EXPECT_EQ(kind_of([] { count_points(ell2_model(), 2, 20); }), ErrorKind::TooLarge);
  // y^2 = x^3 is cuspidal.
  EXPECT_EQ(kind_of([] { count_points({ModelKind::HyperellipticOdd, {}, {0, 0, 0, 1}}, 5, 1); }),
            ErrorKind::SingularModel);
  // char 2 without an h term is never smooth.
  EXPECT_EQ(kind_of([] { count_points({ModelKind::HyperellipticOdd, {}, {1, 1, 0, 1}}, 2, 1); }),
            ErrorKind::SingularModel);
}

TEST(CountPoints, EvenModelGenusTwo) {
  // y^2 = x^6 + 1 over F_5 is smooth of genus 2; its counts must assemble
  // into a valid Weil numerator.
  const ExplicitModel m{ModelKind::HyperellipticEven, {}, {1, 0, 0, 0, 0, 0, 1}};
  EXPECT_EQ(model_genus(m, 5), 2);
  std::vector<Integer> counts;
  for (unsigned r = 1; r <= 4; ++r) counts.emplace_back(static_cast<unsigned long>(count_points(m, 5, r)));
  const Poly P = weil_from_counts(counts, 2, 5);
  EXPECT_TRUE(satisfies_functional_equation(P, 2, 5));
}

TEST(WeilFromCounts, SpecExamples) {
  EXPECT_EQ(weil_from_counts({Integer(3)}, 0, 2), Poly{Rat(1)});
  EXPECT_EQ(weil_from_counts({Integer(3)}, 1, 2), (Poly{Rat(1), Rat(0), Rat(2)}));
  const long p1 = static_cast<long>(brute_count_ell_q5(1));
  const long a = 5 + 1 - p1;
  EXPECT_EQ(weil_from_counts({Integer(p1)}, 1, 5), (Poly{Rat(1), Rat(-a), Rat(5)}));
  EXPECT_EQ(ell_q5().weil(), (Poly{Rat(1), Rat(-a), Rat(5)}));
}

TEST(WeilFromCounts, Inconsistent) {
  // Above the Weil bound.
  EXPECT_EQ(kind_of([] { weil_from_counts({Integer(10)}, 1, 2); }), ErrorKind::InconsistentCounts);
  // p_2 disagrees with the P(T) forced by p_1.
  EXPECT_EQ(kind_of([] { weil_from_counts({Integer(3), Integer(7)}, 1, 2); }), ErrorKind::InconsistentCounts);
  EXPECT_EQ(kind_of([] { load_curve("genus_mismatch.json"); }), ErrorKind::InconsistentCounts);
}

TEST(WeilFromCounts, RoundTripProperty) {
  // Every admissible a for an elliptic curve over F_q.
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u}) {
    for (long a = -2; a * a <= 4 * static_cast<long>(q); ++a) {
      const Curve c = Curve::from_weil(1, q, Poly{Rat(1), Rat(-a), Rat(static_cast<long>(q))});
      std::vector<Integer> counts;
      for (unsigned r = 1; r <= 4; ++r) counts.push_back(c.points(r));
      EXPECT_EQ(weil_from_counts(counts, 1, q), c.weil());
    }
  }
}

TEST(Curve, ZetaAndSymCounts) {
  EXPECT_EQ(zeta_ratfunc(p1_q2()).expand(2), TruncSeries(2, {1, 3, 7}));
  EXPECT_EQ(zeta_ratfunc(ell_q2()).num(), (Poly{Rat(1), Rat(0), Rat(2)}));
  EXPECT_EQ(sym_counts(p1_q2(), 2), (std::vector<Integer>{1, 3, 7}));
  EXPECT_EQ(sym_counts(ell_q2(), 2), (std::vector<Integer>{1, 3, 9}));
  EXPECT_EQ(sym_counts(ell_q5(), 0), (std::vector<Integer>{1}));
}

TEST(Curve, JacobianCount) {
  EXPECT_EQ(jac_count(p1_q3()), Integer(1));
  EXPECT_EQ(jac_count(ell_q2()), Integer(3));
  EXPECT_EQ(jac_count(ell_q5()), Integer(static_cast<unsigned long>(brute_count_ell_q5(1))));
}

TEST(Curve, ZetaSpecialValues) {
  EXPECT_EQ(zeta_special_value(p1_q2(), 2), Rat(Integer(8), Integer(3)));
  EXPECT_EQ(zeta_special_value(p1_q3(), 2), Rat(Integer(27), Integer(16)));
  EXPECT_EQ(zeta_special_value(ell_q2(), 2), Rat(3));
  EXPECT_EQ(kind_of([] { zeta_special_value(p1_q2(), 1); }), ErrorKind::PoleAtPoint);
  EXPECT_EQ(kind_of([] { zeta_special_value(p1_q2(), 0); }), ErrorKind::PoleAtPoint);
}

// Partial sums of sum_j #Sym^j C(F_q) q^{-ij} approach zeta_C(i); the tail
// is bounded by a geometric majorant built from |a_k| <= C(2g,k) q^{k/2}.
TEST(Curve, SpecialValueIsLimitOfPartialSums) {
  const std::size_t J = 40;
  for (const Curve& c : test_curves()) {
    for (long i = 2; i <= 4; ++i) {
      const Rat q(static_cast<long>(c.q()));
      const auto counts = sym_counts(c, J);
      Rat partial;
      for (std::size_t j = 0; j <= J; ++j) partial += Rat(counts[j]) * pow(q, -i * static_cast<long>(j));
      // #Sym^j C <= (1 + sum_k |P_k|) * (q^{j+1} - 1)/(q - 1) <= B q^j with B below.
      Rat wsum;
      for (const Rat& w : c.weil().coeffs()) wsum += abs(w);
      const Rat B = wsum * q / (q - Rat(1));
      const Rat rho = pow(q, 1 - i);
      const Rat tail = B * pow(rho, static_cast<long>(J + 1)) / (Rat(1) - rho);
      EXPECT_LE(abs(zeta_special_value(c, i) - partial), tail);
    }
  }
}

TEST(Curve, SymCountsAgreeWithAdamsAndDivisors) {
  for (const Curve& c : test_curves()) {
    const std::size_t J = 4;
    std::vector<Rat> psi;
    std::vector<Integer> p;
    for (unsigned r = 1; r <= J; ++r) {
      psi.emplace_back(c.points(r));
      p.push_back(c.points(r));
    }
    const auto census = oracle::ClosedPointCensus::from_counts(p);
    const auto sym = sym_star(AdamsClass<Rat>(psi), J);
    const auto zeta = sym_counts(c, J);
    for (std::size_t j = 0; j <= J; ++j) {
      EXPECT_EQ(sym[j], Rat(zeta[j]));
      EXPECT_EQ(oracle::divisor_count(census, j), zeta[j]);
    }
  }
}

TEST(Curve, BaseChange) {
  const Curve e = ell_q2();
  const Curve e4 = e.base_change(2);
  EXPECT_EQ(e4.q(), 4u);
  for (unsigned r = 1; r <= 3; ++r) EXPECT_EQ(e4.points(r), e.points(2 * r));
}

TEST(CurveFile, RoundTripAndErrors) {
  const CurveSpec weil = load_curve_spec(data_path("ell_q2_weil.json"));
  EXPECT_EQ(Curve::from_spec(weil).weil(), ell_q2().weil());
  const CurveSpec model = load_curve_spec(data_path("ell_q5.json"));
  const CurveSpec again = parse_curve_spec(dump_curve_spec(model));
  EXPECT_EQ(again.genus, 1);
  EXPECT_EQ(again.q, 5u);
  EXPECT_EQ(std::get<ExplicitModel>(again.source).f, ell5_model().f);
  EXPECT_EQ(kind_of([] { load_curve_spec(data_path("bad_field.json")); }), ErrorKind::FileFormat);
  EXPECT_EQ(kind_of([] { parse_curve_spec("{\"genus\": 1, \"q\": 2}"); }), ErrorKind::FileFormat);
  EXPECT_EQ(kind_of([] { Curve::from_spec(parse_curve_spec("{\"genus\": 1, \"q\": 2, \"weil\": [1, 0, 3]}")); }),
            ErrorKind::InvalidCurve);
}

}  // namespace
}  // namespace motbun
