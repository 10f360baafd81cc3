#include <divcor/qseries.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace divcor {

void QSeries::insert(std::int64_t e, const Rational& c) {
    if (c == 0) return;
    if (e > ring_.cutoff) return;
    if (e < ring_.floor)
        throw ExponentFloorBreach("exponent " + std::to_string(e) + " below floor " +
                                  std::to_string(ring_.floor));
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void QSeries::check_ring(const QSeries& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch("series from different rings");
}

QSeries QSeries::monomial(const SeriesRing& ring, std::int64_t e, const Rational& c) {
    QSeries s(ring);
    s.insert(e, c);
    return s;
}

Rational QSeries::coeff(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::int64_t> QSeries::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

QSeries QSeries::operator+(const QSeries& o) const {
    check_ring(o);
    QSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, c);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    check_ring(o);
    QSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, -c);
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QSeries QSeries::scaled(const Rational& c) const {
    QSeries r(ring_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

QSeries QSeries::shifted(std::int64_t e, const Rational& c) const {
    QSeries r(ring_);
    if (c == 0) return r;
    for (const auto& [f, k] : terms_) r.insert(f + e, k * c);
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const { return mul_truncated(o, ring_.cutoff); }

QSeries QSeries::mul_truncated(const QSeries& o, std::int64_t max_exp) const {
    check_ring(o);
    QSeries r(ring_);
    if (terms_.empty() || o.terms_.empty()) return r;
    const std::int64_t top = std::min(max_exp, ring_.cutoff);
    // Accumulate densely over the retained exponent window; map insertion per
    // partial product is far more expensive than the rational arithmetic.
    const std::int64_t base = terms_.begin()->first + o.terms_.begin()->first;
    if (base > top) return r;
    if (base < ring_.floor) throw ExponentFloorBreach("product exponent below ring floor");
    const std::size_t span = static_cast<std::size_t>(top - base) + 1;
    std::vector<Rational> acc(span);
    for (const auto& [e1, c1] : terms_) {
        if (e1 + o.terms_.begin()->first > top) break;
        for (const auto& [e2, c2] : o.terms_) {
            if (e1 + e2 > top) break;  // terms_ maps sorted ascending
            acc[static_cast<std::size_t>(e1 + e2 - base)] += c1 * c2;
        }
    }
    auto hint = r.terms_.end();
    for (std::size_t i = 0; i < span; ++i)
        if (!acc[i].is_zero())
            hint = r.terms_.emplace_hint(hint, base + static_cast<std::int64_t>(i),
                                         std::move(acc[i]));
    return r;
}

QSeries QSeries::inv() const {
    if (terms_.empty()) throw NotInvertible("zero series has no inverse");
    const std::int64_t e0 = terms_.begin()->first;
    const Rational a0 = terms_.begin()->second;
    if (-e0 < ring_.floor)
        throw ExponentFloorBreach("inverse leading exponent below floor");
    QSeries r(ring_);
    const std::int64_t n_off = ring_.cutoff + e0;  // offsets 0..n_off
    if (n_off < 0) return r;
    std::vector<Rational> b(static_cast<std::size_t>(n_off) + 1);
    b[0] = Rational(1) / a0;
    for (std::int64_t n = 1; n <= n_off; ++n) {
        Rational acc = 0;
        // a_{e0+m} * b_{n-m}, m >= 1
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
            std::int64_t m = it->first - e0;
            if (m > n) break;
            acc += it->second * b[static_cast<std::size_t>(n - m)];
        }
        b[static_cast<std::size_t>(n)] = -acc / a0;
    }
    for (std::int64_t n = 0; n <= n_off; ++n)
        r.insert(-e0 + n, b[static_cast<std::size_t>(n)]);
    return r;
}

bool QSeries::eq_upto(const QSeries& o, std::int64_t bound, Mismatch* out) const {
    check_ring(o);
    if (bound > ring_.cutoff) throw RingMismatch("comparison bound exceeds cutoff");
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    auto report = [&](std::int64_t e, const Rational& l, const Rational& r) {
        if (out) *out = Mismatch{e, l, r};
        return false;
    };
    while (true) {
        bool a_live = a != terms_.end() && a->first <= bound;
        bool b_live = b != o.terms_.end() && b->first <= bound;
        if (!a_live && !b_live) return true;
        if (a_live && (!b_live || a->first < b->first))
            return report(a->first, a->second, 0);
        if (b_live && (!a_live || b->first < a->first))
            return report(b->first, 0, b->second);
        if (a->second != b->second) return report(a->first, a->second, b->second);
        ++a;
        ++b;
    }
}

QSeries QSeries::truncated(std::int64_t new_cutoff) const {
    SeriesRing nr = ring_;
    nr.cutoff = new_cutoff;
    QSeries r(nr);
    for (const auto& [e, c] : terms_) {
        if (e > new_cutoff) break;
        r.terms_.emplace(e, c);
    }
    return r;
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    if (terms_.empty()) return "(zero)\n";
    for (const auto& [e, c] : terms_)
        os << e << '/' << ring_.D << " : " << c << '\n';
    return os.str();
}

} // namespace divcor
