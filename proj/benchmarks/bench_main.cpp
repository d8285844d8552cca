#include "pshodge/hodge.hpp"
#include "pshodge/hurwitz.hpp"
#include "pshodge/moduli.hpp"
#include "pshodge/taut.hpp"
#include "pshodge/wk.hpp"

#include <benchmark/benchmark.h>

using namespace pshodge;

// Each iteration uses fresh engines, so these are cold-cache timings.

static void BM_OnePointedPsi(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    WkEngine wk;
    benchmark::DoNotOptimize(wk.integral(g, {3 * g - 2}));
  }
}
BENCHMARK(BM_OnePointedPsi)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

static void BM_PsiIntegralsAllKeys(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    WkEngine wk;
    // every key on Mbar_{g,3} with exponents sorted
    const int dim = moduli_dimension(g, 3);
    for (int a = 0; a <= dim; ++a)
      for (int b = a; a + b <= dim; ++b)
        if (dim - a - b >= b) benchmark::DoNotOptimize(wk.integral(g, {a, b, dim - a - b}));
    state.counters["cached"] = static_cast<double>(wk.cache_size());
  }
}
BENCHMARK(BM_PsiIntegralsAllKeys)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_TripleLambda(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  std::vector<int> lambda(static_cast<std::size_t>(g), 0);
  ++lambda[g - 1];
  ++lambda[g - 2];
  ++lambda[g - 3];
  for (auto _ : state) {
    WkEngine wk;
    HodgeEngine hodge(wk);
    benchmark::DoNotOptimize(hodge.integral({g, lambda, {}}));
  }
}
BENCHMARK(BM_TripleLambda)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_MumfordFailure(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const TautExpr f = parse_expression("(2*lambda2 - lambda1^2)*psi1^" + std::to_string(3 * g - 4));
  for (auto _ : state) {
    WkEngine wk;
    HodgeEngine hodge(wk);
    benchmark::DoNotOptimize(ps_hodge_integral(g, 1, f, hodge));
  }
}
BENCHMARK(BM_MumfordFailure)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_HatLambdaProduct(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  const TautClass a = hat_lambda(4, 2, j);
  const TautClass b = hat_lambda(4, 2, 4 - j + 1);
  for (auto _ : state) {
    TautClass c = a * b;
    benchmark::DoNotOptimize(c.size());
  }
}
BENCHMARK(BM_HatLambdaProduct)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_HurwitzBrute(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_brute({{2, 2}, m}));
  state.counters["bound"] = hurwitz_enumeration_bound({{2, 2}, m});
}
BENCHMARK(BM_HurwitzBrute)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
