#include "cflab/catalog.hpp"
#include "cflab/kernels.hpp"
#include "cflab/series.hpp"
#include "cflab/verify.hpp"

#include <benchmark/benchmark.h>

using namespace cflab;

namespace {

Rational quadratic_term(long i) {
  static const Series s = quadratic_family(3);
  return s.nth(i);
}

void BM_ExactFold(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::exact_sum_fold(quadratic_term, st.range(0)));
}

void BM_ExactSplit(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::exact_sum_split(quadratic_term, st.range(0)));
}

void BM_ExactParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::exact_sum_parallel(quadratic_term, st.range(0)));
}

void BM_FixedSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::fixed_sum_serial(quadratic_term, st.range(0), 200));
}

void BM_FixedParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::fixed_sum_parallel(quadratic_term, st.range(0), 200));
}

void BM_EvalCF(benchmark::State& st) {
  Instance inst = instantiate("thm4_family", {{"k", 2}});
  for (auto _ : st) benchmark::DoNotOptimize(eval_cf(inst.cf, st.range(0), 2000000));
}

void BM_VerifySweep(benchmark::State& st) {
  VerifyOptions o;
  o.filter = "g*";
  o.parallel = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(verify_all(o));
}

}  // namespace

BENCHMARK(BM_ExactFold)->Arg(1000)->Arg(4000);
BENCHMARK(BM_ExactSplit)->Arg(1000)->Arg(4000);
BENCHMARK(BM_ExactParallel)->Arg(1000)->Arg(4000);
BENCHMARK(BM_FixedSerial)->Arg(4000);
BENCHMARK(BM_FixedParallel)->Arg(4000);
BENCHMARK(BM_EvalCF)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
