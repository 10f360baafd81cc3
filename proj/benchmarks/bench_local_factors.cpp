#include <benchmark/benchmark.h>

#include <divcor/local_factors.hpp>
#include <divcor/shifts.hpp>

namespace {

using divcor::LocalBounds;
using divcor::LocalContext;
using divcor::Rational;
using divcor::ShiftSet;

LocalContext make_ctx(std::int64_t ecut_x) {
    const LocalBounds b = divcor::compute_bounds(Rational(1, 4), Rational(1, 4), ecut_x);
    return LocalContext(12, b);
}

void BM_local_tau(benchmark::State& state) {
    const ShiftSet A({Rational(1, 12), Rational(-1, 6)});
    for (auto _ : state) {
        LocalContext ctx = make_ctx(12);
        benchmark::DoNotOptimize(ctx.tau(A, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_local_tau)->Arg(8)->Arg(16)->Arg(24);

void BM_local_sigma_closed(benchmark::State& state) {
    const ShiftSet A({Rational(1, 6), Rational(0)});
    const ShiftSet B({Rational(-1, 12)});
    const Rational alpha(1, 6), beta(-1, 12);
    for (auto _ : state) {
        LocalContext ctx = make_ctx(state.range(0));
        benchmark::DoNotOptimize(ctx.sigma_closed(A, B, alpha, beta, 2, 0));
    }
}
BENCHMARK(BM_local_sigma_closed)->Arg(8)->Arg(12);

void BM_local_qsum_ell2(benchmark::State& state) {
    const std::vector<ShiftSet> A{ShiftSet({Rational(1, 12)}), ShiftSet({Rational(-1, 12)})};
    const std::vector<ShiftSet> B{ShiftSet({Rational(0)}), ShiftSet({Rational(1, 6)})};
    const std::vector<Rational> alpha{Rational(1, 12), Rational(0)};
    const std::vector<Rational> beta{Rational(0), Rational(-1, 12)};
    for (auto _ : state) {
        const LocalBounds b =
            divcor::compute_bounds(Rational(1, 6), Rational(1, 6), state.range(0));
        LocalContext ctx(12, b);
        benchmark::DoNotOptimize(ctx.q_sum(A, B, alpha, beta));
    }
}
BENCHMARK(BM_local_qsum_ell2)->Arg(6)->Arg(8);

}  // namespace
