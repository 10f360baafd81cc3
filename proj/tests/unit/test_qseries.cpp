#include <doctest.h>

#include <divcor/qseries.hpp>

#include <random>

namespace {

using divcor::QSeries;
using divcor::Rational;
using divcor::SeriesRing;

SeriesRing small_ring() { return SeriesRing{4, 40, -40}; }

QSeries random_series(const SeriesRing& ring, std::mt19937_64& rng, int max_terms = 8) {
    std::uniform_int_distribution<std::int64_t> exp_dist(-10, ring.cutoff);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 7);
    QSeries s(ring);
    std::uniform_int_distribution<int> n_dist(1, max_terms);
    const int n = n_dist(rng);
    for (int i = 0; i < n; ++i)
        s = s + QSeries::monomial(ring, exp_dist(rng), Rational(num_dist(rng), den_dist(rng)));
    return s;
}

}  // namespace

TEST_CASE("ring axioms hold on random series") {
    const SeriesRing ring = small_ring();
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        QSeries a = random_series(ring, rng);
        QSeries b = random_series(ring, rng);
        QSeries c = random_series(ring, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * QSeries::one(ring) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("multiplication against direct expansion") {
    const SeriesRing ring = small_ring();
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        QSeries a = random_series(ring, rng);
        QSeries b = random_series(ring, rng);
        QSeries expect(ring);
        for (const auto& [e1, c1] : a.terms())
            for (const auto& [e2, c2] : b.terms())
                expect = expect + QSeries::monomial(ring, e1 + e2, c1 * c2);
        CHECK(a * b == expect);
    }
}

TEST_CASE("mul_truncated agrees with full product below the cap") {
    const SeriesRing ring = small_ring();
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 30; ++rep) {
        QSeries a = random_series(ring, rng);
        QSeries b = random_series(ring, rng);
        const QSeries full = a * b;
        CHECK(a.mul_truncated(b, ring.cutoff) == full);
        const QSeries capped = a.mul_truncated(b, 5);
        for (const auto& [e, c] : capped.terms()) {
            CHECK(e <= 5);
            CHECK(c == full.coeff(e));
        }
        for (const auto& [e, c] : full.terms())
            if (e <= 5) CHECK(capped.coeff(e) == c);
    }
}

TEST_CASE("series inverse is a two-sided identity up to the cutoff") {
    const SeriesRing ring = small_ring();
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        QSeries a = QSeries::monomial(ring, 0, 1) + random_series(ring, rng, 4);
        if (a.is_zero()) continue;
        QSeries inv = a.inv();
        // With both factors truncated at the cutoff, the product is only
        // determined up to cutoff + e0 when the leading exponent e0 < 0.
        const std::int64_t bound = ring.cutoff + std::min<std::int64_t>(0, *a.min_exponent());
        CHECK((a * inv).eq_upto(QSeries::one(ring), bound));
        CHECK((inv * a).eq_upto(QSeries::one(ring), bound));
    }
}

TEST_CASE("geometric series inverse has all-ones coefficients") {
    const SeriesRing ring = small_ring();
    const QSeries f = QSeries::one(ring) - QSeries::monomial(ring, 4, 1);
    const QSeries g = f.inv();
    for (std::int64_t e = 0; e <= ring.cutoff; ++e)
        CHECK(g.coeff(e) == Rational(e % 4 == 0 ? 1 : 0));
}

TEST_CASE("cutoff drops high terms, floor aborts") {
    const SeriesRing ring = small_ring();
    CHECK(QSeries::monomial(ring, ring.cutoff + 1, 1).is_zero());
    CHECK(!QSeries::monomial(ring, ring.cutoff, 1).is_zero());
    CHECK_THROWS_AS((void)QSeries::monomial(ring, ring.floor - 1, 1),
                    divcor::ExponentFloorBreach);
}

TEST_CASE("eq_upto reports the smallest mismatching exponent") {
    const SeriesRing ring = small_ring();
    QSeries a = QSeries::monomial(ring, 2, 1) + QSeries::monomial(ring, 8, 3);
    QSeries b = QSeries::monomial(ring, 2, 1) + QSeries::monomial(ring, 8, 4) +
                QSeries::monomial(ring, 9, 1);
    divcor::Mismatch mm;
    CHECK(a.eq_upto(b, 7));
    CHECK(!a.eq_upto(b, 9, &mm));
    CHECK(mm.exponent == 8);
    CHECK(mm.lhs == Rational(3));
    CHECK(mm.rhs == Rational(4));
}

TEST_CASE("ring mismatch is rejected") {
    const SeriesRing r1 = small_ring();
    const SeriesRing r2{4, 44, -40};
    CHECK_THROWS_AS((void)(QSeries::one(r1) + QSeries::one(r2)), divcor::RingMismatch);
    CHECK_THROWS_AS((void)(QSeries::one(r1) * QSeries::one(r2)), divcor::RingMismatch);
}
