#include "divcor/delta_method.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include "divcor/errors.hpp"
#include "divcor/zeta.hpp"

namespace divcor {

namespace {

// tau_{A'}(p^e) where A' keeps its original shift values.
double tau_pp(const std::vector<double>& shifts, double p, int e) {
    std::vector<double> v(e + 1, 0.0);
    v[0] = 1.0;
    for (double a : shifts) {
        std::vector<double> w(e + 1, 0.0);
        const double q = std::pow(p, -a);
        for (int j = 0; j <= e; ++j) {
            double qe = 1.0;
            for (int i = 0; i <= j; ++i) {
                w[j] += qe * v[j - i];
                qe *= q;
            }
        }
        v.swap(w);
    }
    return v[e];
}

std::vector<std::uint64_t> divisors(std::uint64_t n, const SieveTable& sieve) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : sieve.factor(n)) {
        const std::size_t base = out.size();
        std::uint64_t pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    return out;
}

}  // namespace

long long ramanujan_sum(const SieveTable& sieve, std::uint64_t q, long long h) {
    if (q == 0) throw ConfigError("ramanujan_sum: q must be positive");
    const std::uint64_t ha = h < 0 ? static_cast<std::uint64_t>(-h) : static_cast<std::uint64_t>(h);
    long long out = 0;
    for (std::uint64_t d : (ha == 0 ? divisors(q, sieve) : divisors(std::gcd(q, ha), sieve))) {
        if (q % d != 0) continue;
        out += static_cast<long long>(d) * sieve.mobius(q / d);
    }
    return out;
}

double g_factor(const SieveTable& sieve, const NumericShiftSet& A, std::size_t alpha_idx,
                std::uint64_t p, int r, double tol) {
    (void)sieve;
    if (alpha_idx >= A.shifts.size()) throw InvalidArity("g_factor: shift index out of range");
    const double alpha = A.shifts[alpha_idx];
    std::vector<double> rest;
    for (std::size_t i = 0; i < A.shifts.size(); ++i)
        if (i != alpha_idx) rest.push_back(A.shifts[i]);

    const double pd = static_cast<double>(p);
    double prefac = 1.0;
    for (double ah : rest) prefac *= 1.0 - std::pow(pd, -(1.0 + ah - alpha));

    const double w = 1.0 - alpha;
    double acc = 0.0, prev = 0.0;
    for (int j = 0;; ++j) {
        const double term = tau_pp(rest, pd, j + r) * std::pow(pd, -j * w);
        acc += term;
        if (j >= 4) {
            const double ratio = prev != 0.0 ? std::abs(term / prev) : 0.0;
            if (ratio < 1.0 && std::abs(term) * ratio / (1.0 - ratio) < tol * std::max(1.0, std::abs(acc)))
                break;
        }
        if (j > 200) throw TailBoundViolation("g_factor: series failed to settle");
        prev = term;
    }
    return prefac * acc;
}

double g_factor_multiplicative(const SieveTable& sieve, const NumericShiftSet& A,
                               std::size_t alpha_idx, std::uint64_t n) {
    double out = 1.0;
    for (const auto& [p, e] : sieve.factor(n)) out *= g_factor(sieve, A, alpha_idx, p, e);
    return out;
}

DeltaReport delta_main_term(const SieveTable& sieve, const NumericShiftSet& A,
                            const NumericShiftSet& B, std::uint64_t M, std::uint64_t N,
                            long long h, double u, std::uint64_t q_max) {
    if (h == 0) throw ConfigError("delta_main_term: h must be nonzero");
    if (std::gcd(M, N) != 1) throw ConfigError("delta_main_term: (M,N) must be coprime");
    const std::uint64_t ha = h < 0 ? static_cast<std::uint64_t>(-h) : static_cast<std::uint64_t>(h);

    // Memoized multiplicative G values keyed by (side, shift index, modulus).
    std::map<std::tuple<int, std::size_t, std::uint64_t>, double> gmemo;
    auto g_mult = [&](int side, const NumericShiftSet& S, std::size_t idx, std::uint64_t n) {
        const auto key = std::make_tuple(side, idx, n);
        auto it = gmemo.find(key);
        if (it != gmemo.end()) return it->second;
        const double v = g_factor_multiplicative(sieve, S, idx, n);
        gmemo.emplace(key, v);
        return v;
    };

    double total = 0.0, tail = 0.0;
    for (std::size_t ia = 0; ia < A.shifts.size(); ++ia) {
        for (std::size_t ib = 0; ib < B.shifts.size(); ++ib) {
            const double alpha = A.shifts[ia], beta = B.shifts[ib];
            double zpart = 1.0;
            for (std::size_t i = 0; i < A.shifts.size(); ++i)
                if (i != ia) zpart *= zeta_num(1.0 + A.shifts[i] - alpha);
            for (std::size_t i = 0; i < B.shifts.size(); ++i)
                if (i != ib) zpart *= zeta_num(1.0 + B.shifts[i] - beta);
            const double pre = std::pow(u, -alpha - beta) *
                               std::pow(static_cast<double>(M), beta - 1.0) *
                               std::pow(static_cast<double>(N), -beta) * zpart;

            double dsum = 0.0, dtail = 0.0;
            for (std::uint64_t d : divisors(ha, sieve)) {
                const double dfac = std::pow(static_cast<double>(d), -(1.0 - alpha - beta));
                double qsum = 0.0, qlast = 0.0;
                for (std::uint64_t q = 1; q <= q_max; ++q) {
                    const int mu = sieve.mobius(q);
                    if (mu == 0) continue;
                    const std::uint64_t qd = q * d;
                    const std::uint64_t g1 = std::gcd(qd, M), g2 = std::gcd(qd, N);
                    const double term =
                        mu * std::pow(static_cast<double>(g1), 1.0 - beta) *
                        std::pow(static_cast<double>(g2), 1.0 - alpha) *
                        std::pow(static_cast<double>(q), -(2.0 - alpha - beta)) *
                        g_mult(0, A, ia, qd / g2) * g_mult(1, B, ib, qd / g1);
                    qsum += term;
                    if (q > q_max / 2) qlast += std::abs(term);
                }
                dsum += dfac * qsum;
                dtail += dfac * 2.0 * qlast;  // geometric window extrapolation
            }
            total += pre * dsum;
            tail += std::abs(pre) * dtail;
        }
    }
    return DeltaReport{total, tail};
}

double empirical_correlation(const SieveTable& sieve, const NumericShiftSet& A,
                             const NumericShiftSet& B, std::uint64_t M, std::uint64_t N,
                             long long h, double u, double delta) {
    if (std::gcd(M, N) != 1) throw ConfigError("empirical_correlation: (M,N) must be coprime");
    const auto m_lo = static_cast<std::uint64_t>(std::ceil(u * (1.0 - delta)));
    const auto m_hi = static_cast<std::uint64_t>(std::floor(u * (1.0 + delta)));
    if (m_hi > sieve.x_max() ||
        (static_cast<double>(m_hi) * static_cast<double>(N) - static_cast<double>(h)) /
                static_cast<double>(M) >
            static_cast<double>(sieve.x_max()))
        throw OutOfSieveRange("empirical_correlation: window exceeds sieve range");

    double acc = 0.0;
    for (std::uint64_t m = std::max<std::uint64_t>(m_lo, 1); m <= m_hi; ++m) {
        const long long num = static_cast<long long>(m) * static_cast<long long>(N) - h;
        if (num <= 0 || num % static_cast<long long>(M) != 0) continue;
        const auto n = static_cast<std::uint64_t>(num / static_cast<long long>(M));
        acc += tau_global(sieve, A, m) * tau_global(sieve, B, n);
    }
    return acc / (2.0 * delta * u);
}

}  // namespace divcor
