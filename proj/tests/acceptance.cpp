// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "motbun/bun_formula.hpp"
#include "motbun/curve.hpp"
#include "motbun/error.hpp"
#include "motbun/lambda.hpp"
#include "motbun/oracle.hpp"
#include "motbun/realize.hpp"
#include "test_support.hpp"

namespace motbun {
namespace {

using namespace motbun::testing;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string cell(std::initializer_list<long> v) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (long x : v) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ")";
  return os.str();
}

CountContext cctx(const Curve& c) { return {c, std::nullopt, 64}; }

Outcome main_theorem() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::size_t N = 24;
  for (long n = 1; n <= 3; ++n)
    for (int g = 0; g <= 3; ++g) {
      const TruncSeries closed = realize_poincare(bun_closed(n), PoincareContext{g, N, 64});
      const TruncSeries first = bun_colimit(n, 0, g, N);
      for (long d = 0; d < n; ++d) {
        const TruncSeries colimit = bun_colimit(n, d, g, N);
        o.require(colimit == closed, "colimit != closed at (n,d,g)=" + cell({n, d, g}));
        o.require(colimit == first, "colimit depends on d at (n,d,g)=" + cell({n, d, g}));
      }
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 30.0, "took " + std::to_string(secs) + "s");
  if (o.ok) o.detail = "36 cells through z^24 in " + std::to_string(secs) + "s";
  return o;
}

Outcome harder_counts() {
  Outcome o;
  for (long n = 1; n <= 3; ++n)
    for (std::uint64_t q : {2u, 3u}) {
      const Curve c = Curve::projective_line(q);
      o.require(realize_count(bun_compact(n, 0), cctx(c)).value == harder_count(n, c),
                "P1 mismatch at (n,q)=" + cell({n, static_cast<long>(q)}));
    }
  for (long n = 1; n <= 2; ++n)
    for (const Curve& c : {ell_q2(), ell_q5()})
      o.require(realize_count(bun_compact(n, 1), cctx(c)).value == harder_count(n, c),
                "elliptic mismatch at (n,q)=" + cell({n, static_cast<long>(c.q())}));
  const Rat eps = Rat::parse("1e-9");
  for (std::uint64_t q : {2u, 3u}) {
    const Rat exact = harder_count(2, Curve::projective_line(q));
    const auto iv = oracle::split_bundle_count_p1(2, 0, q, eps);
    o.require(iv.contains(exact) && iv.bound <= eps, "oracle interval misses " + exact.str());
  }
  o.require(harder_count(2, p1_q2()) == Rat(Integer(1), Integer(3)), "P1/F2 rank-2 count is not 1/3");
  if (o.ok) o.detail = "rank-2 P1/F2 count 1/3 inside oracle interval";
  return o;
}

Outcome sym_zeta_divisors() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> files{
      {"P1/F2", "p1_q2.json"}, {"P1/F3", "p1_q3.json"}, {"y^2+y=x^3/F2", "ell_q2.json"}, {"y^2=x^3+x/F5", "ell_q5.json"}};
  const std::size_t J = 4;
  for (const auto& [name, file] : files) {
    const CurveSpec spec = load_curve_spec(data_path(file));
    const Curve c = Curve::from_spec(spec);
    const auto& model = std::get<ExplicitModel>(spec.source);
    std::vector<Integer> enumerated;
    for (unsigned r = 1; r <= J; ++r) enumerated.emplace_back(static_cast<unsigned long>(count_points(model, c.q(), r)));
    const auto census = oracle::ClosedPointCensus::from_counts(enumerated);
    const auto adams = to_adams(MotiveExpr(Atom::MC), cctx(c), J);
    const auto zeta = sym_counts(c, J);
    for (std::size_t j = 0; j <= J; ++j) {
      const Rat via_sym = sym_n(adams, j);
      o.require(via_sym == Rat(zeta[j]) && zeta[j] == oracle::divisor_count(census, j),
                name + " disagrees at j=" + std::to_string(j));
    }
  }
  if (o.ok) o.detail = "4 curves, j <= 4";
  return o;
}

Outcome weil_integrity() {
  Outcome o;
  struct Case {
    std::string name;
    int genus;
    std::uint64_t q;
    ExplicitModel model;
  };
  const std::vector<Case> cases{
      {"P1/F2", 0, 2, {ModelKind::ProjectiveLine, {}, {}}},
      {"P1/F3", 0, 3, {ModelKind::ProjectiveLine, {}, {}}},
      {"y^2+y=x^3/F2", 1, 2, {ModelKind::HyperellipticOdd, {1}, {0, 0, 0, 1}}},
      {"y^2=x^3+x/F5", 1, 5, {ModelKind::HyperellipticOdd, {}, {0, 1, 0, 1}}},
      {"y^2+y=x^5/F2", 2, 2, {ModelKind::HyperellipticOdd, {1}, {0, 0, 0, 0, 0, 1}}},
      {"y^2=x^6+1/F5", 2, 5, {ModelKind::HyperellipticEven, {}, {1, 0, 0, 0, 0, 0, 1}}},
  };
  for (const auto& cs : cases) {
    const unsigned R = static_cast<unsigned>(std::max(6, 2 * cs.genus + 2));
    std::vector<Integer> counts;
    for (unsigned r = 1; r <= R; ++r) counts.emplace_back(static_cast<unsigned long>(count_points(cs.model, cs.q, r)));
    const Poly P = weil_from_counts(counts, cs.genus, cs.q);
    o.require(satisfies_functional_equation(P, cs.genus, cs.q), cs.name + ": functional equation fails");
    const Curve c = Curve::from_weil(cs.genus, cs.q, P);
    for (unsigned r = 1; r <= static_cast<unsigned>(2 * cs.genus + 2); ++r)
      o.require(c.points(r) == counts[r - 1], cs.name + ": p_" + std::to_string(r) + " not reproduced");
    try {
      const auto census = oracle::ClosedPointCensus::from_counts({counts.begin(), counts.begin() + 6});
      for (const Integer& a : census.a) o.require(a >= 0, cs.name + ": negative closed-point count");
    } catch (const Error& e) {
      o.require(false, cs.name + ": " + e.what());
    }
  }
  if (o.ok) o.detail = "6 curves, genus <= 2";
  return o;
}

Outcome quot_hecke() {
  Outcome o;
  const std::vector<Curve> curves = test_curves();
  for (long n = 1; n <= 3; ++n)
    for (long d = 0; d < n; ++d)
      for (long l = 0; n * l - d <= 6; ++l) {
        const long len = n * l - d;
        if (len < 0) continue;
        const auto summands = div_decomposition(n, d, l);
        const std::size_t depth = std::max<std::size_t>(1, static_cast<std::size_t>(len));
        const std::string where = " at (n,d,l)=" + cell({n, d, l});
        for (int g = 0; g <= 2; ++g) {
          const PoincareContext ctx{g, 14, 64};
          TruncSeries total = TruncSeries::zero(ctx.order);
          for (const auto& s : summands) total += realize_poincare(s.expr, ctx);
          const TruncSeries div = realize_poincare(div_motive(n, d, l), ctx);
          const TruncSeries flag = sym_n(to_adams(kunneth_factor(n), ctx, depth), len);
          o.require(total == div, "Poincare summands != div_motive" + where);
          o.require(div == flag, "Poincare div_motive != Sym of Kunneth factor" + where);
          o.require(realize_poincare(flag_div_motive(n, d, l), ctx) ==
                        pow(realize_poincare(kunneth_factor(n), ctx), static_cast<unsigned>(len)),
                    "Poincare flag motive != Kunneth power" + where);
        }
        for (const Curve& c : curves) {
          Rat total;
          for (const auto& s : summands) total += realize_count(s.expr, cctx(c)).value;
          const Rat div = realize_count(div_motive(n, d, l), cctx(c)).value;
          const Rat flag = sym_n(to_adams(kunneth_factor(n), cctx(c), depth), len);
          o.require(total == div, "count summands != div_motive" + where);
          o.require(div == flag, "count div_motive != Sym of Kunneth factor" + where);
        }
      }
  // Stabilization: degrees <= K frozen once nl - d >= K.
  for (long n = 1; n <= 3; ++n)
    for (int g = 0; g <= 2; ++g)
      for (long K = 0; K <= 12; ++K) {
        const PoincareContext ctx{g, static_cast<std::size_t>(K), 64};
        const long d = 0;
        const long l0 = (K + n - 1) / n;
        const TruncSeries ref = realize_poincare(div_motive(n, d, l0), ctx);
        for (long l = l0 + 1; l <= l0 + 2; ++l)
          o.require(realize_poincare(div_motive(n, d, l), ctx) == ref,
                    "no stabilization at (n,g,K)=" + cell({n, g, K}));
      }
  if (o.ok) o.detail = "nl-d <= 6 in both realizations; stabilization for K <= 12";
  return o;
}

Outcome transition_combinatorics() {
  Outcome o;
  std::size_t tuples = 0;
  for (long n = 1; n <= 3; ++n)
    for (long len = 0; len <= 5; ++len) {
      // All I in {0..n-1}^len.
      std::vector<long> I(static_cast<std::size_t>(len), 0);
      while (true) {
        ++tuples;
        const TupleMaps t = tuple_maps(I, n);
        const TupleMaps th = tuple_maps(t.h, n);
        o.require(th.tau == transition_support(t.tau, n), "tau(h(I)) != tau(I) + (n,0,...)");
        o.require(tuple_weight(t.h) == tuple_weight(I), "|h(I)| != |I|");
        std::size_t k = 0;
        while (k < I.size() && ++I[k] == n) I[k++] = 0;
        if (k == I.size()) break;
      }
      const auto source = enumerate_b(n, len);
      const auto target = enumerate_b(n, len + n);
      const std::set<BIndex> target_set(target.begin(), target.end());
      std::set<BIndex> images;
      for (const BIndex& m : source) {
        const BIndex img = transition_support(m, n);
        o.require(target_set.count(img) == 1, "transition leaves B_{l+1}");
        o.require(total_twist(img) == total_twist(m), "transition changes the twist");
        images.insert(img);
      }
      o.require(images.size() == source.size(), "transition_support not injective");
    }
  if (o.ok) o.detail = std::to_string(tuples) + " tuples";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::pair{code, out.str()};
  };
  const auto [bun_code, bun_out] = run({"verify-bun", "--n", "2", "--genus", "1", "-N", "12", "--mutate"});
  o.require(bun_code != 0, "verify-bun --mutate exited 0");
  o.require(bun_out.find("first mismatch at degree 6") != std::string::npos, "verify-bun did not name degree 6");
  const auto [count_code, count_out] = run({"verify-count", "--n", "3", "--q", "3", "--mutate"});
  o.require(count_code != 0, "verify-count --mutate exited 0");
  o.require(count_out.find("first mismatch at zeta(3)") != std::string::npos, "verify-count did not name zeta(3)");
  const auto [clean_code, clean_out] = run({"verify-bun", "--n", "2", "--genus", "1", "-N", "12"});
  o.require(clean_code == 0, "unmutated verify-bun failed");
  if (o.ok) o.detail = "both suites fail at the corrupted position";
  return o;
}

Outcome lambda_properties() {
  Outcome o;
  std::mt19937 rng(20261018);
  const std::size_t N = 10;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t depth = 1 + rng() % 8;
    const std::string where = " (instance " + std::to_string(trial) + ")";
    if (trial % 2 == 0) {
      std::vector<Rat> a, b;
      for (std::size_t r = 0; r < depth; ++r) {
        a.push_back(random_rat(rng, 20, 5));
        b.push_back(random_rat(rng, 20, 5));
      }
      const AdamsClass<Rat> A(a), B(b);
      o.require(sym_star(adams_sum(A, B), depth).coeffs == convolve(sym_star(A, depth), sym_star(B, depth)).coeffs,
                "count Sym(a+b) != convolution" + where);
      const long i = static_cast<long>(rng() % 7) - 3;
      const Rat q(static_cast<long>(2 + rng() % 7));
      const auto t = sym_star(tate_count(i, q, depth), depth);
      for (std::size_t n = 0; n <= depth; ++n)
        o.require(t[n] == pow(q, i * static_cast<long>(n)), "Sym^n(tate(i)) != tate(ni)" + where);
    } else {
      auto random_poincare = [&] {
        std::vector<Rat> c;
        for (std::size_t k = 0; k <= N; ++k) c.push_back(k < 4 ? Rat(static_cast<long>(rng() % 4)) : Rat(0));
        return adams_of_poincare(TruncSeries(N, c), depth);
      };
      const auto A = random_poincare(), B = random_poincare();
      o.require(sym_star(adams_sum(A, B), depth).coeffs == convolve(sym_star(A, depth), sym_star(B, depth)).coeffs,
                "Poincare Sym(a+b) != convolution" + where);
      const long i = static_cast<long>(rng() % 3);
      const auto t = sym_star(tate_poincare(i, N, depth), depth);
      for (std::size_t n = 0; n <= depth; ++n)
        o.require(t[n] == TruncSeries::monomial(N, Rat(1), 2 * static_cast<std::size_t>(i) * n),
                  "Poincare Sym^n(tate(i)) != tate(ni)" + where);
      const long m = static_cast<long>(rng() % 6);
      const auto odd = sym_star(odd_class_poincare(m, N, N), N);
      for (std::size_t n = static_cast<std::size_t>(m) + 1; n <= N; ++n)
        o.require(odd[n].is_zero(), "odd class Sym above its dimension is nonzero" + where);
    }
  }
  if (o.ok) o.detail = "500 instances";
  return o;
}

}  // namespace
}  // namespace motbun

int main() {
  using motbun::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 main theorem: colimit equals closed formula, d-independent", motbun::main_theorem},
      {"2 compactly supported count equals Harder's formula and the P1 oracle", motbun::harder_counts},
      {"3 Sym, zeta expansion and divisor census agree", motbun::sym_zeta_divisors},
      {"4 Weil data integrity", motbun::weil_integrity},
      {"5 Quot and Hecke identities, stabilization", motbun::quot_hecke},
      {"6 transition combinatorics", motbun::transition_combinatorics},
      {"7 negative controls", motbun::negative_controls},
      {"8 lambda-ring properties", motbun::lambda_properties},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << "  [" << o.detail << "]\n";
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
