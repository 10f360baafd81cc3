#include <doctest.h>

#include <divcor/dirichlet.hpp>
#include <divcor/errors.hpp>
#include <divcor/zeta.hpp>

#include <cmath>
#include <complex>
#include <numeric>

namespace {
using divcor::NumericShiftSet;
using divcor::SieveTable;

std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t d = 0;
    for (std::uint64_t i = 1; i * i <= n; ++i)
        if (n % i == 0) d += (i * i == n) ? 1 : 2;
    return d;
}
}  // namespace

TEST_CASE("numeric shift sets validate magnitude and distinctness") {
    CHECK_NOTHROW(NumericShiftSet({0.1, -0.2}));
    CHECK_THROWS_AS(NumericShiftSet({0.6}), divcor::TailBoundViolation);
    CHECK_THROWS_AS(NumericShiftSet({0.1, 0.1}), divcor::DuplicateShift);
    CHECK_NOTHROW(NumericShiftSet({0.1, 0.1}, true));
}

TEST_CASE("tau with two zero shifts is the divisor function") {
    SieveTable sieve(5000);
    NumericShiftSet A({0.0, 0.0}, true);
    const auto table = divcor::tau_table(sieve, A, 5000);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        CHECK(table[n] == static_cast<double>(divisor_count(n)));
        CHECK(divcor::tau_global(sieve, A, n) == table[n]);
    }
}

TEST_CASE("tau is multiplicative across coprime arguments") {
    SieveTable sieve(1000000);
    NumericShiftSet A({0.12, -0.07, 0.01});
    for (std::uint64_t m = 2; m <= 700; ++m)
        for (std::uint64_t n : {std::uint64_t(m + 1), std::uint64_t(2 * m + 1)}) {
            if (std::gcd(m, n) != 1) continue;
            const double lhs = divcor::tau_global(sieve, A, m * n);
            const double rhs =
                divcor::tau_global(sieve, A, m) * divcor::tau_global(sieve, A, n);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
}

TEST_CASE("dirichlet polynomial equals the naive sum") {
    SieveTable sieve(300);
    NumericShiftSet A({0.05, -0.1});
    const std::complex<double> s(0.5, 3.0);
    std::complex<double> naive = 0.0;
    for (std::uint64_t n = 1; n <= 300; ++n)
        naive += divcor::tau_global(sieve, A, n) *
                 std::exp(-s * std::log(static_cast<double>(n)));
    const auto poly = divcor::dirichlet_poly(sieve, A, s, 300);
    CHECK(std::abs(poly - naive) < 1e-11 * std::abs(naive));
}

TEST_CASE("banded correlation sum matches the unrestricted double sum") {
    SieveTable sieve(60);
    NumericShiftSet A({0.1});
    NumericShiftSet B({-0.05});
    const double T = 20.0;
    const std::uint64_t X = 50;
    const auto& tf = divcor::TestFunction::standard_bump();
    std::complex<double> full = 0.0;
    for (std::uint64_t m = 1; m <= X; ++m)
        for (std::uint64_t n = 1; n <= X; ++n)
            full += divcor::tau_global(sieve, A, m) * divcor::tau_global(sieve, B, n) /
                    std::sqrt(double(m) * double(n)) *
                    tf.psi_hat(T / (2.0 * M_PI) * std::log(double(m) / double(n)));
    const auto banded = divcor::correlation_sum(sieve, A, B, T, X, tf, 1e-12);
    CHECK(std::abs(banded.value - full) <= banded.error_estimate + 1e-9 * std::abs(full));
}

TEST_CASE("direct integral agrees with the correlation sum at desk scale") {
    SieveTable sieve(200);
    NumericShiftSet A({0.08, -0.03});
    NumericShiftSet B({0.0});
    const double T = 50.0;
    const std::uint64_t X = 200;
    const auto& tf = divcor::TestFunction::standard_bump();
    const auto corr = divcor::correlation_sum(sieve, A, B, T, X, tf, 1e-10);
    const auto integ = divcor::direct_integral(sieve, A, B, T, X, tf, 1e-10);
    CHECK(std::abs(integ.value - corr.value) <
          1e-7 * std::max(1.0, std::abs(corr.value)));
}

TEST_CASE("singleton euler product reduces to a zeta value") {
    const auto rep = divcor::euler_b(NumericShiftSet({0.1}), NumericShiftSet({0.05}), 1.0, 1e-9);
    CHECK(std::abs(rep.value.real() - divcor::zeta_num(1.15)) < 1e-8);
    CHECK(std::abs(rep.value.imag()) < 1e-14);
}

TEST_CASE("euler product rejects divergent shift sums") {
    // min pair sum s + a + b must exceed 1/2 past the zeta line for the tail
    // to converge.
    CHECK_THROWS_AS((void)divcor::euler_b(NumericShiftSet({-0.3}), NumericShiftSet({-0.3}),
                                          1.0, 1e-8),
                    divcor::DivergentSeries);
}
