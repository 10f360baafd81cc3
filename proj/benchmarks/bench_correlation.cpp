#include <benchmark/benchmark.h>

#include <divcor/dirichlet.hpp>

namespace {

using divcor::NumericShiftSet;
using divcor::SieveTable;

void BM_tau_table(benchmark::State& state) {
    const std::uint64_t X = static_cast<std::uint64_t>(state.range(0));
    SieveTable sieve(X);
    const NumericShiftSet A({0.08, -0.03});
    for (auto _ : state) benchmark::DoNotOptimize(divcor::tau_table(sieve, A, X));
}
BENCHMARK(BM_tau_table)->Arg(100000)->Arg(1000000);

void BM_correlation_sum(benchmark::State& state) {
    const std::uint64_t X = static_cast<std::uint64_t>(state.range(0));
    SieveTable sieve(X);
    const NumericShiftSet A({0.05});
    const NumericShiftSet B({-0.02});
    const double T = static_cast<double>(X) / 10.0;
    const auto& tf = divcor::TestFunction::standard_bump();
    for (auto _ : state)
        benchmark::DoNotOptimize(divcor::correlation_sum(sieve, A, B, T, X, tf, 1e-8));
}
BENCHMARK(BM_correlation_sum)->Arg(2000)->Arg(20000);

}  // namespace
