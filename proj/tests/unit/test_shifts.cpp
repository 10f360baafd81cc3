#include <doctest.h>

#include <divcor/shifts.hpp>

#include <algorithm>
#include <set>

namespace {
using divcor::Integer;
using divcor::Rational;
using divcor::ShiftSet;
using divcor::SwapSelection;

Integer binom(int n, int k) {
    Integer r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}
}  // namespace

TEST_CASE("shift set validation") {
    CHECK_NOTHROW(ShiftSet({Rational(1, 4), Rational(-1, 4), Rational(0)}));
    CHECK_THROWS_AS(ShiftSet({Rational(1, 4), Rational(1, 4)}), divcor::DuplicateShift);
    CHECK_THROWS_AS(ShiftSet({Rational(3, 4)}), divcor::TailBoundViolation);  // out of range
    ShiftSet a({Rational(1, 6), Rational(-1, 6)});
    CHECK_THROWS_AS((void)a.with(Rational(1, 6)), divcor::DuplicateShift);
    CHECK(a.with(Rational(0)).size() == 3);
    CHECK(a.max_abs() == Rational(1, 6));
    CHECK(a.negated().contains(Rational(1, 6)));
}

TEST_CASE("parse_rational handles fractions, integers and decimals") {
    CHECK(divcor::parse_rational("3/12") == Rational(1, 4));
    CHECK(divcor::parse_rational("-2") == Rational(-2));
    CHECK(divcor::parse_rational("-0.125") == Rational(-1, 8));
    CHECK_THROWS_AS(divcor::parse_rational("1/"), divcor::ConfigError);
    CHECK_THROWS_AS(divcor::parse_rational("x"), divcor::ConfigError);
}

TEST_CASE("swap transform preserves sizes and swaps negated elements") {
    ShiftSet A({Rational(1, 4), Rational(1, 6), Rational(1, 12)});
    ShiftSet B({Rational(-1, 3), Rational(-1, 5), Rational(-1, 7)});
    SwapSelection sel{{0, 2}, {1, 2}};
    divcor::validate_swap(A, B, sel);
    auto [a2, b2] = divcor::swap_transform(A, B, sel);
    CHECK(a2.size() == 3);
    CHECK(b2.size() == 3);
    // A loses indices 0,2 and gains the negatives of B's indices 1,2.
    CHECK(a2.contains(Rational(1, 6)));
    CHECK(a2.contains(Rational(1, 5)));
    CHECK(a2.contains(Rational(1, 7)));
    CHECK(a2.contains(Rational(1, 12)) == false);
    CHECK(a2.contains(Rational(1, 4)) == false);
    // B loses indices 1,2 and gains the negatives of A's indices 0,2.
    CHECK(b2.contains(Rational(-1, 3)));
    CHECK(b2.contains(Rational(-1, 4)));
    CHECK(b2.contains(Rational(-1, 12)));
    CHECK(b2.contains(Rational(-1, 5)) == false);
    CHECK(b2.contains(Rational(-1, 7)) == false);
}

TEST_CASE("swap with empty selection is the identity") {
    ShiftSet A({Rational(1, 4)});
    ShiftSet B({Rational(-1, 6)});
    auto [a2, b2] = divcor::swap_transform(A, B, SwapSelection{});
    CHECK(a2.values() == A.values());
    CHECK(b2.values() == B.values());
}

TEST_CASE("enumerate_swaps counts sum of squared binomials") {
    for (int k = 1; k <= 4; ++k)
        for (int cap = 0; cap <= k; ++cap) {
            Integer expect = 0;
            for (int j = 0; j <= cap; ++j) expect += binom(k, j) * binom(k, j);
            auto swaps = divcor::enumerate_swaps(static_cast<std::size_t>(k),
                                                 static_cast<std::size_t>(cap));
            CHECK(Integer(swaps.size()) == expect);
            // selections are pairwise distinct
            std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
            for (const auto& s : swaps) seen.insert({s.u_indices, s.v_indices});
            CHECK(seen.size() == swaps.size());
        }
}

TEST_CASE("ordered partitions enumerate exactly the surjections") {
    for (int k = 1; k <= 6; ++k)
        for (int l = 1; l <= std::min(k, 3); ++l) {
            auto parts = divcor::enumerate_ordered_partitions(k, l);
            CHECK(Integer(parts.size()) == divcor::surjection_count(k, l));
            for (const auto& p : parts) {
                std::set<int> used(p.block_of.begin(), p.block_of.end());
                CHECK(static_cast<int>(used.size()) == l);  // onto
                CHECK(*std::max_element(p.block_of.begin(), p.block_of.end()) == l - 1);
            }
        }
    CHECK(divcor::surjection_count(4, 2) == 14);
    CHECK(divcor::surjection_count(6, 3) == 540);
}

TEST_CASE("compositions count and content") {
    auto cs = divcor::compositions(5, 3);
    CHECK(Integer(cs.size()) == binom(5 + 2, 2));
    for (const auto& c : cs) {
        int sum = 0;
        for (int v : c) {
            CHECK(v >= 0);
            sum += v;
        }
        CHECK(sum == 5);
        CHECK(c.size() == 3);
    }
}

TEST_CASE("common denominator is the lcm") {
    ShiftSet A({Rational(1, 4), Rational(1, 6)});
    ShiftSet B({Rational(-1, 10)});
    CHECK(divcor::common_denominator({&A, &B}) == 60);
}
