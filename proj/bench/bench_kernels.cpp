// Serial against OpenMP versions of the two parallel kernels.

#include "lcd/genfunc.hpp"
#include "lcd/kernels.hpp"
#include "lcd/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace lcd;

namespace {

std::vector<Rational> catalan_coeffs(std::size_t n) { return catalan_series(n - 1).coeffs(); }

void BM_Convolve(benchmark::State& state, kernels::Exec exec) {
    const auto len = static_cast<std::size_t>(state.range(0));
    const auto a = catalan_coeffs(len);
    const auto b = cg_series(1, len - 1).coeffs();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve(a, b, len, exec));
}

void BM_OracleCg(benchmark::State& state, kernels::Exec exec) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_cg(n, exec));
}

void BM_OracleMacromolecular(benchmark::State& state, kernels::Exec exec) {
    const auto v = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_macromolecular(v, 2, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Convolve, serial, kernels::Exec::serial)->Arg(100)->Arg(400)->Arg(1000);
BENCHMARK_CAPTURE(BM_Convolve, parallel, kernels::Exec::parallel)->Arg(100)->Arg(400)->Arg(1000);
BENCHMARK_CAPTURE(BM_OracleCg, serial, kernels::Exec::serial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OracleCg, parallel, kernels::Exec::parallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OracleMacromolecular, serial, kernels::Exec::serial)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OracleMacromolecular, parallel, kernels::Exec::parallel)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
