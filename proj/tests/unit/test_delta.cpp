#include <doctest.h>

#include <divcor/delta_method.hpp>

#include <cmath>
#include <numeric>

namespace {
using divcor::NumericShiftSet;
using divcor::SieveTable;

long long totient(long long q) {
    long long r = q;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            r -= r / p;
        }
    if (q > 1) r -= r / q;
    return r;
}
}  // namespace

TEST_CASE("ramanujan sums: classical special cases") {
    SieveTable sieve(500);
    for (long long h = 0; h <= 20; ++h) CHECK(divcor::ramanujan_sum(sieve, 1, h) == 1);
    for (std::uint64_t q = 2; q <= 100; ++q)
        CHECK(divcor::ramanujan_sum(sieve, q, 0) == totient(static_cast<long long>(q)));
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
        for (long long h = 1; h <= 30; ++h) {
            const long long expect = (h % static_cast<long long>(p) == 0)
                                         ? static_cast<long long>(p) - 1
                                         : -1;
            CHECK(divcor::ramanujan_sum(sieve, p, h) == expect);
        }
    }
}

TEST_CASE("ramanujan sums against the exponential-sum definition") {
    SieveTable sieve(100);
    for (std::uint64_t q = 1; q <= 40; ++q)
        for (long long h = 1; h <= 12; ++h) {
            double direct = 0.0;
            for (std::uint64_t a = 1; a <= q; ++a)
                if (std::gcd(a, q) == 1)
                    direct += std::cos(2.0 * M_PI * double(a) * double(h) / double(q));
            CHECK(static_cast<double>(divcor::ramanujan_sum(sieve, q, h)) ==
                  doctest::Approx(direct).epsilon(1e-9));
        }
}

TEST_CASE("local factor for a singleton set") {
    // With |A| = 1 the reduced set is empty: the factor is 1 at r = 0 and 0
    // for r >= 1 (an empty product times a single surviving j = 0 term).
    SieveTable sieve(100);
    NumericShiftSet A({0.1});
    CHECK(divcor::g_factor(sieve, A, 0, 2, 0) == doctest::Approx(1.0));
    CHECK(divcor::g_factor(sieve, A, 0, 2, 1) == doctest::Approx(0.0));
    CHECK(divcor::g_factor(sieve, A, 0, 5, 3) == doctest::Approx(0.0));
    CHECK(divcor::g_factor_multiplicative(sieve, A, 0, 1) == doctest::Approx(1.0));
}

TEST_CASE("multiplicative extension splits over prime powers") {
    SieveTable sieve(1000);
    NumericShiftSet A({0.05, -0.08});
    for (std::size_t idx = 0; idx < 2; ++idx) {
        const double lhs = divcor::g_factor_multiplicative(sieve, A, idx, 12);
        const double rhs = divcor::g_factor(sieve, A, idx, 2, 2) *
                           divcor::g_factor(sieve, A, idx, 3, 1);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("main term tracks the empirical correlation on a smoke instance") {
    SieveTable sieve(1200000);
    NumericShiftSet A({0.0, 0.001}, true);
    NumericShiftSet B({0.002, 0.003}, true);
    const double u = 2e5;
    const auto main = divcor::delta_main_term(sieve, A, B, 1, 1, 1, u);
    const double emp = divcor::empirical_correlation(sieve, A, B, 1, 1, 1, u);
    CHECK(main.value > 0.0);
    CHECK(std::abs(main.value - emp) < 0.2 * std::abs(emp));
}
