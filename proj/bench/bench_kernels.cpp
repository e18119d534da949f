// Serial reference versus OpenMP kernels: exhaustive point counting over F_p
// and the theta-stability subspace scan.

#include <benchmark/benchmark.h>

#include <random>

#include "qhilb/moduli.hpp"
#include "qhilb/quiver.hpp"

using namespace qhilb;

namespace {

void BM_CountSerial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(count_exhaustive_serial(state.range(0), state.range(1), state.range(2)));
}

void BM_CountParallel(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(count_exhaustive(state.range(0), state.range(1), state.range(2)));
}

// A fixed (2,2) member over F_5 and a (2,2,2) random representation over F_3.
QuiverRep0<PrimeField> stability_input(int which)
{
    if (which == 0) return to_rep0(search(2, 2, PrimeField(5), 20000, 1, 1).at(0));
    PrimeField f(3);
    std::mt19937_64 rng(5);
    auto r = QuiverRep0<PrimeField>::zero(f, {2, 3, 2});
    for (int i = 0; i < 2; ++i) {
        r.X[i] = Matrix<PrimeField>::random(f, r.dims[i + 1], r.dims[i], rng);
        r.Y[i] = Matrix<PrimeField>::random(f, r.dims[i + 1], r.dims[i], rng);
    }
    return r;
}

void BM_StabilitySerial(benchmark::State& state)
{
    auto r = stability_input((int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theta_stable_serial(r));
}

void BM_StabilityParallel(benchmark::State& state)
{
    auto r = stability_input((int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theta_stable_bruteforce(r));
}

} // namespace

BENCHMARK(BM_CountSerial)->Args({1, 1, 7})->Args({2, 1, 3})->Args({2, 2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Args({1, 1, 7})->Args({2, 1, 3})->Args({2, 2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilitySerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilityParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
