#include <benchmark/benchmark.h>

#include "symtoep/analysis.hpp"
#include "symtoep/operators.hpp"
#include "symtoep/spaces.hpp"
#include "symtoep/symbols.hpp"

using namespace symtoep;

namespace {

// fixed banded symbol (bandwidth 2) used across the section benchmarks
FourierSymbol banded_symbol() {
    FourierSymbol::CoeffMap coeffs;
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n)
            coeffs[{m, n}] = Complex{static_cast<double>(1 + std::abs(m + n)),
                                     static_cast<double>(m * n)};
    return FourierSymbol::from_coefficients(std::move(coeffs));
}

void BM_build_toeplitz(benchmark::State& state) {
    const FourierSymbol f = banded_symbol();
    const int D = static_cast<int>(state.range(0));
    for (auto _ : state) {
        OperatorMatrix T = build_toeplitz(f, D);
        benchmark::DoNotOptimize(T.entries.data());
    }
}
BENCHMARK(BM_build_toeplitz)->Arg(16)->Arg(32)->Arg(64);

void BM_eta(benchmark::State& state) {
    const OperatorMatrix T = build_toeplitz(FourierSymbol::s(), 32);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eta(T, n));
}
BENCHMARK(BM_eta)->Arg(2)->Arg(4)->Arg(8);

void BM_spectral_norm(benchmark::State& state) {
    const OperatorMatrix T =
        build_toeplitz(banded_symbol(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectral_norm(T.entries));
}
BENCHMARK(BM_spectral_norm)->Arg(16)->Arg(32);

void BM_check_brown_halmos(benchmark::State& state) {
    const OperatorMatrix T =
        build_toeplitz(banded_symbol(), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const CheckReport rep = check_brown_halmos(T, 3);
        benchmark::DoNotOptimize(rep.residual);
    }
}
BENCHMARK(BM_check_brown_halmos)->Arg(16)->Arg(24);

void BM_szego_partial_sum(benchmark::State& state) {
    const GammaPoint w1{Complex{0.5}, Complex{0.2}};
    const GammaPoint w2{Complex{0.3}, Complex{0.1}};
    const int D = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(szego_partial_sum(w1, w2, D));
}
BENCHMARK(BM_szego_partial_sum)->Arg(20)->Arg(40)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
