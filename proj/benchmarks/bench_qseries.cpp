#include <benchmark/benchmark.h>

#include <divcor/qseries.hpp>

#include <random>

namespace {

using divcor::QSeries;
using divcor::Rational;
using divcor::SeriesRing;

QSeries dense_series(const SeriesRing& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 97);
    QSeries s(ring);
    for (std::int64_t e = 0; e <= ring.cutoff; ++e)
        s = s + QSeries::monomial(ring, e, Rational(num(rng), den(rng)));
    return s;
}

void BM_qseries_mul(benchmark::State& state) {
    const SeriesRing ring{12, state.range(0), -state.range(0) * 4};
    std::mt19937_64 rng(42);
    const QSeries a = dense_series(ring, rng);
    const QSeries b = dense_series(ring, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_qseries_mul)->Arg(96)->Arg(192)->Arg(384);

void BM_qseries_mul_truncated_half(benchmark::State& state) {
    const SeriesRing ring{12, state.range(0), -state.range(0) * 4};
    std::mt19937_64 rng(42);
    const QSeries a = dense_series(ring, rng);
    const QSeries b = dense_series(ring, rng);
    const std::int64_t cap = ring.cutoff / 2;
    for (auto _ : state) benchmark::DoNotOptimize(a.mul_truncated(b, cap));
}
BENCHMARK(BM_qseries_mul_truncated_half)->Arg(96)->Arg(192)->Arg(384);

void BM_qseries_inv(benchmark::State& state) {
    const SeriesRing ring{12, state.range(0), -state.range(0) * 4};
    std::mt19937_64 rng(7);
    const QSeries a = QSeries::one(ring) + dense_series(ring, rng).shifted(1);
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_qseries_inv)->Arg(96)->Arg(192);

}  // namespace

BENCHMARK_MAIN();
