#include <benchmark/benchmark.h>

#include "motbun/bun_formula.hpp"
#include "motbun/lambda.hpp"
#include "motbun/realize.hpp"

namespace {

using namespace motbun;

void BM_SeriesMul(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  std::vector<Rat> c;
  for (std::size_t k = 0; k <= order; ++k) c.emplace_back(static_cast<long>(k % 7) - 3);
  const TruncSeries a(order, c);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(64)->Arg(256);

void BM_SymStarPoincare(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto a = to_adams(m_c_n(3), PoincareContext{2, order, order}, order);
  for (auto _ : state) benchmark::DoNotOptimize(sym_star(a, order));
}
BENCHMARK(BM_SymStarPoincare)->Arg(8)->Arg(16)->Arg(24);

void BM_BunColimit(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(bun_colimit(n, 0, 3, 24));
}
BENCHMARK(BM_BunColimit)->DenseRange(1, 3);

void BM_HarderCountElliptic(benchmark::State& state) {
  const Curve e = Curve::from_weil(1, 5, Poly{Rat(1), Rat(-2), Rat(5)});
  const CountContext ctx{e, std::nullopt, 64};
  const MotiveExpr compact = bun_compact(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(realize_count(compact, ctx));
}
BENCHMARK(BM_HarderCountElliptic)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
