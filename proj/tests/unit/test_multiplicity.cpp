#include <doctest.h>

#include <divcor/errors.hpp>
#include <divcor/multiplicity.hpp>

namespace {
using divcor::Integer;
using divcor::SwapInstance;
}  // namespace

TEST_CASE("closed-form weight") {
    CHECK(divcor::weight_w(1, 1) == 1);
    CHECK(divcor::weight_w(2, 1) == 1);
    CHECK(divcor::weight_w(2, 2) == 4);
    CHECK(divcor::weight_w(4, 2) == Integer(4) * 16);          // 2!^2 * 2^4
    CHECK(divcor::weight_w(6, 3) == Integer(36) * 729);        // 3!^2 * 3^6
    CHECK_THROWS_AS((void)divcor::weight_w(2, 3), divcor::InvalidArity);
    CHECK_THROWS_AS((void)divcor::weight_w(1, 0), divcor::InvalidArity);
}

TEST_CASE("brute-force regrouping count matches the weight for small k") {
    for (int k = 1; k <= 5; ++k)
        for (int ell = 1; ell <= k; ++ell) {
            SwapInstance inst;
            inst.k = k;
            inst.ell = ell;
            for (int i = 0; i < ell; ++i) {
                inst.u_reps.push_back(i);
                inst.v_reps.push_back(k - 1 - i);
            }
            CHECK(divcor::swap_multiplicity_bruteforce(inst) == divcor::weight_w(k, ell));
        }
}

TEST_CASE("brute-force count is independent of the representative choice") {
    SwapInstance a{4, 2, {0, 1}, {0, 1}};
    SwapInstance b{4, 2, {2, 3}, {1, 3}};
    SwapInstance c{4, 2, {0, 3}, {2, 0}};
    const Integer expect = divcor::weight_w(4, 2);
    CHECK(divcor::swap_multiplicity_bruteforce(a) == expect);
    CHECK(divcor::swap_multiplicity_bruteforce(b) == expect);
    CHECK(divcor::swap_multiplicity_bruteforce(c) == expect);
}

TEST_CASE("brute-force validates its inputs") {
    CHECK_THROWS_AS((void)divcor::swap_multiplicity_bruteforce(SwapInstance{8, 2, {0, 1}, {0, 1}}),
                    divcor::SearchSpaceTooLarge);
    CHECK_THROWS_AS((void)divcor::swap_multiplicity_bruteforce(SwapInstance{3, 2, {0, 0}, {0, 1}}),
                    divcor::InvalidArity);
    CHECK_THROWS_AS((void)divcor::swap_multiplicity_bruteforce(SwapInstance{3, 2, {0, 5}, {0, 1}}),
                    divcor::InvalidArity);
}

TEST_CASE("factorization systems carry a constant multiplicity") {
    for (const auto& [m, n, k, ell] : {std::tuple<std::uint64_t, std::uint64_t, int, int>{12, 6, 2, 1},
                                       {12, 6, 2, 2},
                                       {36, 30, 3, 2},
                                       {24, 8, 3, 3}}) {
        const auto rep = divcor::star_system_multiplicity(m, n, k, ell);
        CHECK(rep.total > 0);
        CHECK(rep.constant);
        CHECK(rep.matches_formula);
        CHECK(rep.algebra_verified);
        CHECK(rep.multiplicity == divcor::weight_w(k, ell));
    }
}
