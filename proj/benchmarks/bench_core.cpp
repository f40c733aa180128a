#include <benchmark/benchmark.h>

#include "mzv/combinatorics.hpp"
#include "mzv/euler_sum.hpp"
#include "mzv/ncpoly.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/qvalue.hpp"
#include "mzv/zeta_values.hpp"

namespace {

using namespace mzv;

Word ab_power(long n) {
  Word w;
  for (long i = 0; i < n; ++i) {
    w.letters.push_back(A());
    w.letters.push_back(B());
  }
  return w;
}

void BM_ShuffleAbPowers(benchmark::State& state) {
  Word u = ab_power(state.range(0));
  Word v = ab_power(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shuffle(u, v));
}
BENCHMARK(BM_ShuffleAbPowers)->Arg(2)->Arg(3)->Arg(4);

void BM_QShuffle(benchmark::State& state) {
  Word u = Word::parse("abc");
  Word v = Word::parse("cba");
  for (auto _ : state) benchmark::DoNotOptimize(qshuffle(u, v));
}
BENCHMARK(BM_QShuffle);

void BM_StuffleCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stuffle_count(12, 12));
}
BENCHMARK(BM_StuffleCount);

void BM_ZetaOdd(benchmark::State& state) {
  Prec p = digits_to_bits(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_euler_maclaurin(3, p));
}
BENCHMARK(BM_ZetaOdd)->Arg(20)->Arg(40)->Arg(100);

void BM_MzvHolder(benchmark::State& state) {
  Composition s = Composition::parse("4,1,1");
  Prec p = digits_to_bits(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mzv_eval(s, p));
}
BENCHMARK(BM_MzvHolder)->Arg(20)->Arg(40);

void BM_EulerSumHalf(benchmark::State& state) {
  SignedComposition sc = SignedComposition::parse("2,-1,1", Rat(1, 2));
  Prec p = digits_to_bits(40);
  for (auto _ : state) benchmark::DoNotOptimize(euler_sum_eval(sc, p));
}
BENCHMARK(BM_EulerSumHalf);

void BM_GaussLegendreNodes(benchmark::State& state) {
  for (auto _ : state) {
    // bypass the cache by asking for a fresh precision each round
    static long bump = 0;
    benchmark::DoNotOptimize(gauss_legendre(32, 128 + (++bump % 7)));
  }
}
BENCHMARK(BM_GaussLegendreNodes);

void BM_QWordValue(benchmark::State& state) {
  NcPoly p = qshuffle(Word::parse("ab"), Word::parse("cb"));
  for (auto _ : state)
    benchmark::DoNotOptimize(q_word_value_exact(p, Rat(4, 5), Rat(7, 10)));
}
BENCHMARK(BM_QWordValue);

}  // namespace

BENCHMARK_MAIN();
