#pragma once

#include <divcor/errors.hpp>
#include <divcor/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace divcor {

// Ambient ring parameters for truncated series in Y = X^{1/D}.
// Exponents are stored in Y-units (integers); terms above `cutoff` are
// dropped, terms below `floor` abort (they signal an out-of-contract
// computation, not legitimate truncation).
struct SeriesRing {
    std::int64_t D = 1;
    std::int64_t cutoff = 0;
    std::int64_t floor = 0;

    bool operator==(const SeriesRing&) const = default;
};

struct Mismatch {
    std::int64_t exponent = 0;
    Rational lhs, rhs;
};

// Sparse exact truncated Laurent-type series with rational coefficients.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(const SeriesRing& ring) : ring_(ring) {}

    static QSeries zero(const SeriesRing& ring) { return QSeries(ring); }
    static QSeries one(const SeriesRing& ring) { return monomial(ring, 0, 1); }
    static QSeries monomial(const SeriesRing& ring, std::int64_t e, const Rational& c);

    const SeriesRing& ring() const { return ring_; }
    const std::map<std::int64_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(std::int64_t e) const;
    std::optional<std::int64_t> min_exponent() const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    // Product keeping only exponents <= max_exp (and <= the ring cutoff);
    // callers that shift the product upwards afterwards use this to avoid
    // computing coefficients that the shift would push past the cutoff.
    QSeries mul_truncated(const QSeries& o, std::int64_t max_exp) const;
    QSeries operator-() const;
    QSeries scaled(const Rational& c) const;
    // Multiply by c * Y^e.
    QSeries shifted(std::int64_t e, const Rational& c = 1) const;
    QSeries inv() const;

    bool operator==(const QSeries& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

    // Coefficientwise equality for all exponents <= bound; on failure
    // reports the smallest mismatching exponent.
    bool eq_upto(const QSeries& o, std::int64_t bound, Mismatch* out = nullptr) const;

    // Reinterpret in a ring with a smaller cutoff, dropping high terms.
    QSeries truncated(std::int64_t new_cutoff) const;

    // One line per term: "e/D : num/den", sorted by exponent.
    std::string to_string() const;

private:
    void insert(std::int64_t e, const Rational& c);
    void check_ring(const QSeries& o) const;

    SeriesRing ring_;
    std::map<std::int64_t, Rational> terms_;
};

} // namespace divcor
