// Serial vs OpenMP kernels: matmul, Kronecker product and the suite runner.

#include <benchmark/benchmark.h>

#include <starsys/genlab.hpp>
#include <starsys/kernels.hpp>
#include <starsys/verify.hpp>

namespace {

using starsys::CMat;
using starsys::Seed;

template <CMat (*Kernel)(const CMat&, const CMat&)>
void bm_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMat a = starsys::gen_rank_r(n, n, n, Seed{1, 0});
  const CMat b = starsys::gen_rank_r(n, n, n, Seed{1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
  state.SetComplexityN(state.range(0));
}

template <CMat (*Kernel)(const CMat&, const CMat&)>
void bm_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMat a = starsys::gen_rank_r(n, n, n, Seed{2, 0});
  const CMat b = starsys::gen_rank_r(n, n, n, Seed{2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

template <starsys::Execution Exec>
void bm_suite(benchmark::State& state) {
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(starsys::run_suite("thm3.8", trials, 8, 1, {}, Exec));
}

}  // namespace

BENCHMARK(bm_matmul<starsys::kernels::matmul_serial>)->RangeMultiplier(2)->Range(8, 256);
BENCHMARK(bm_matmul<starsys::kernels::matmul_parallel>)->RangeMultiplier(2)->Range(8, 256);
BENCHMARK(bm_kron<starsys::kernels::kron_serial>)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(bm_kron<starsys::kernels::kron_parallel>)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(bm_suite<starsys::Execution::serial>)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_suite<starsys::Execution::parallel>)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
