#include <benchmark/benchmark.h>

#include <random>

#include "betadigits/beta_expansion.hpp"
#include "betadigits/classifier.hpp"
#include "betadigits/exchange.hpp"
#include "betadigits/linear_forms.hpp"
#include "betadigits/roots.hpp"

using namespace betadigits;

namespace {

FieldPtr field(const char* poly) { return NumberField::create(parse_int_poly(poly)); }

Embedder real_root(const FieldPtr& F) { return Embedder(isolate_roots(*F).front()); }

}  // namespace

static void BM_FieldMultiply(benchmark::State& state) {
  const FieldPtr F = field("-1,1,0,-1,0,0,0,1");
  std::vector<Rational> c(7);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(static_cast<long>(3 * i + 1), 7);
  for (auto& x : c) x.canonicalize();
  const FieldElement a = F->from_coords(c);
  FieldElement b = a.inverse();
  for (auto _ : state) {
    FieldElement p = a * b;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_FieldMultiply);

static void BM_FloorReal(benchmark::State& state) {
  const FieldPtr F = field("-1,-1,1");
  Embedder phi = real_root(F);
  const FieldElement x = F->beta().pow(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi.floor_real(x));
}
BENCHMARK(BM_FloorReal)->Arg(10)->Arg(100)->Arg(1000);

static void BM_GreedyGolden(benchmark::State& state) {
  const FieldPtr F = field("-1,-1,1");
  Embedder phi = real_root(F);
  Rational half(1, 2);
  for (auto _ : state) {
    auto g = greedy_digits(F->from_rational(half), phi, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(g.data.digits.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GreedyGolden)->Arg(1000)->Arg(10000);

namespace {

ExchangeData sparse_exchange(std::int64_t length, std::uint64_t seed) {
  DigitData d;
  d.bound = 1;
  std::mt19937_64 rng(seed);
  std::geometric_distribution<int> run(1.0 / 25);
  std::int64_t digit = 1;
  while (static_cast<std::int64_t>(d.digits.size()) < length) {
    const int len = 1 + run(rng);
    for (int i = 0; i < len && static_cast<std::int64_t>(d.digits.size()) < length; ++i) d.digits.push_back(digit);
    digit = 1 - digit;
  }
  return exchange_sequence(d);
}

}  // namespace

static void BM_RhoConvolution(benchmark::State& state) {
  const ExchangeData e = sparse_exchange(state.range(0) + 8, 11);
  for (auto _ : state) {
    RhoTable rho(e, static_cast<int>(state.range(1)), state.range(0));
    benchmark::DoNotOptimize(rho(rho.order(), state.range(0) - 1));
  }
}
BENCHMARK(BM_RhoConvolution)->Args({2000, 2})->Args({10000, 2})->Args({2000, 3});

static void BM_Sumset(benchmark::State& state) {
  const ExchangeData e = sparse_exchange(state.range(0), 5);
  for (auto _ : state) {
    Sumset s = sumset(e.support, static_cast<int>(state.range(1)), state.range(0));
    benchmark::DoNotOptimize(s.members.data());
  }
}
BENCHMARK(BM_Sumset)->Args({10000, 2})->Args({100000, 2})->Args({10000, 4});

BENCHMARK_MAIN();
