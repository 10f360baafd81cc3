#include <doctest.h>

#include <divcor/identity_checks.hpp>
#include <divcor/instances.hpp>
#include <divcor/local_factors.hpp>
#include <divcor/shifts.hpp>

namespace {
using divcor::LocalBounds;
using divcor::LocalContext;
using divcor::LocalInstance;
using divcor::QSeries;
using divcor::Rational;
using divcor::ShiftSet;

LocalContext make_ctx(const std::vector<const ShiftSet*>& sets, const Rational& s_a,
                      const Rational& s_b, std::int64_t ecut = 8) {
    const divcor::Integer D = divcor::common_denominator(sets);
    return LocalContext(D, divcor::compute_bounds(s_a, s_b, ecut));
}
}  // namespace

TEST_CASE("tau matches direct enumeration over ordered factorizations") {
    // tau_A(p^n) = sum over compositions (e_i) of n of X^{sum e_i a_i}.
    ShiftSet A({Rational(1, 6), Rational(-1, 12), Rational(0)});
    LocalContext ctx = make_ctx({&A}, Rational(1, 6), Rational(1, 6));
    for (int n = 0; n <= 7; ++n) {
        QSeries expect(ctx.ring());
        for (const auto& comp : divcor::compositions(n, static_cast<int>(A.size()))) {
            Rational e = 0;
            for (std::size_t i = 0; i < A.size(); ++i) e += comp[i] * A[i];
            expect = expect + QSeries::monomial(ctx.ring(), ctx.yexp(e), 1);
        }
        CHECK(ctx.tau(A, n) == expect);
    }
}

TEST_CASE("tau of the singleton zero shift is the constant 1") {
    ShiftSet A({Rational(0)});
    LocalContext ctx = make_ctx({&A}, Rational(0), Rational(0));
    for (int n = 0; n <= 5; ++n) CHECK(ctx.tau(A, n) == QSeries::one(ctx.ring()));
}

TEST_CASE("zeta-factor sum form equals product form") {
    ShiftSet A({Rational(1, 4), Rational(-1, 6)});
    LocalContext ctx = make_ctx({&A}, Rational(1, 4), Rational(1, 4));
    CHECK(ctx.zed_sum(A).eq_upto(ctx.zed_prod(A), ctx.ring().cutoff));
}

TEST_CASE("correlation factor is symmetric") {
    ShiftSet A({Rational(1, 6)});
    ShiftSet B({Rational(-1, 6), Rational(0)});
    LocalContext ctx = make_ctx({&A, &B}, Rational(1, 6), Rational(1, 6));
    CHECK(ctx.cee(A, B) == ctx.cee(B, A));
}

TEST_CASE("closed sigma form equals the literal sum") {
    ShiftSet A({Rational(1, 6), Rational(0)});
    ShiftSet B({Rational(-1, 12)});
    const Rational alpha(1, 6), beta(-1, 12);
    LocalContext ctx = make_ctx({&A, &B}, Rational(1, 4), Rational(1, 4));
    for (int m = 0; m <= 3; ++m) {
        CHECK(ctx.sigma_brute(A, B, alpha, beta, m, 0)
                  .eq_upto(ctx.sigma_closed(A, B, alpha, beta, m, 0), ctx.compare_bound()));
        CHECK(ctx.sigma_brute(A, B, alpha, beta, 0, m)
                  .eq_upto(ctx.sigma_closed(A, B, alpha, beta, 0, m), ctx.compare_bound()));
    }
    CHECK_THROWS_AS((void)ctx.sigma_closed(A, B, alpha, beta, 1, 1), divcor::InvalidArity);
}

TEST_CASE("swap-sum in brute sigma mode matches closed mode") {
    std::vector<ShiftSet> A{ShiftSet({Rational(1, 12)}), ShiftSet({Rational(-1, 12)})};
    std::vector<ShiftSet> B{ShiftSet({Rational(0)}), ShiftSet({Rational(1, 6)})};
    std::vector<Rational> alpha{Rational(1, 12), Rational(0)};
    std::vector<Rational> beta{Rational(0), Rational(-1, 12)};
    LocalContext c1 = make_ctx({&A[0], &A[1], &B[0], &B[1]}, Rational(1, 6), Rational(1, 6), 6);
    LocalContext c2 = make_ctx({&A[0], &A[1], &B[0], &B[1]}, Rational(1, 6), Rational(1, 6), 6);
    QSeries closed = c1.q_sum(A, B, alpha, beta, divcor::SigmaMode::Closed);
    QSeries brute = c2.q_sum(A, B, alpha, beta, divcor::SigmaMode::Brute);
    CHECK(closed.eq_upto(brute, c1.compare_bound()));
}

TEST_CASE("identity checks pass on a fixed small instance") {
    LocalInstance inst;
    inst.A = {ShiftSet({Rational(1, 12)}), ShiftSet({Rational(-1, 6)})};
    inst.B = {ShiftSet({Rational(0)}), ShiftSet({Rational(1, 6)})};
    inst.alpha = {Rational(-1, 12), Rational(1, 12)};
    inst.beta = {Rational(1, 12), Rational(0)};
    inst.ell_prime = 1;
    inst.D = 12;
    inst.ecut_x = 8;
    inst.name = "fixed-small";
    CHECK(divcor::check_lemma1(inst, 3).pass);
    CHECK(divcor::check_lemma2(inst).pass);
    CHECK(divcor::check_lemma3(inst).pass);
    CHECK(divcor::check_theorem2(inst).pass);
    CHECK(divcor::check_theorem4(inst).pass);
    CHECK(divcor::check_truncation_soundness("theorem2", inst).pass);
}

TEST_CASE("instance generation is deterministic in the seed") {
    const auto prof = divcor::profile_by_name("medium");
    auto a = divcor::seed_instances(99, 5, prof, 1, 3, false);
    auto b = divcor::seed_instances(99, 5, prof, 1, 3, false);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].describe() == b[i].describe());
    auto c = divcor::seed_instances(100, 5, prof, 1, 3, false);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].describe() != c[i].describe()) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("generated instances respect profile constraints") {
    const auto prof = divcor::profile_by_name("medium");
    for (const auto& inst : divcor::seed_instances(5, 12, prof, 1, 3, false)) {
        CHECK(inst.ell() >= 1);
        CHECK(inst.ell() <= prof.max_blocks);
        CHECK(inst.D <= prof.max_denominator);
        for (const auto& s : inst.A) CHECK(s.size() <= prof.max_set_size);
        for (const auto& s : inst.B) CHECK(s.size() <= prof.max_set_size);
        CHECK(inst.s_max() <= Rational(1, 2));
        // the union sets the identities consume must be collision-free
        CHECK_NOTHROW((void)divcor::instance_bounds(inst));
        CHECK_NOTHROW(divcor::check_theorem2(inst));
    }
}

TEST_CASE("bounds computation rejects divergent shift magnitudes") {
    CHECK_THROWS_AS((void)divcor::compute_bounds(Rational(1, 3), Rational(1, 3), 8),
                    divcor::TailBoundViolation);
    const LocalBounds b = divcor::compute_bounds(Rational(1, 4), Rational(1, 4), 12);
    CHECK(b.cutoff_x > b.ecut_x);
    CHECK(b.index_bound > 0);
    const LocalBounds b2 = divcor::compute_bounds(Rational(1, 4), Rational(1, 4), 12, 2);
    CHECK(b2.index_bound == 2 * (b.index_bound / 1));
}
