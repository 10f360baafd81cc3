#include "divcor/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "divcor/errors.hpp"
#include "divcor/zeta.hpp"

namespace divcor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// tau_A(p^e) by convolving the geometric local factors of the shifts.
std::vector<double> tau_prime_power(const std::vector<double>& shifts, double p, int e_max) {
    std::vector<double> v(e_max + 1, 0.0);
    v[0] = 1.0;
    for (double a : shifts) {
        const double q = std::pow(p, -a);
        std::vector<double> w(e_max + 1, 0.0);
        for (int j = 0; j <= e_max; ++j) {
            double qe = 1.0;
            for (int e = 0; e <= j; ++e) {
                w[j] += qe * v[j - e];
                qe *= q;
            }
        }
        v.swap(w);
    }
    return v;
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.clear();
    weights.clear();
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes.push_back(x);
        weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
}

std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& terms,
                                  std::size_t lo, std::size_t hi) {
    if (hi - lo <= 64) {
        std::complex<double> s{0.0, 0.0};
        for (std::size_t i = lo; i < hi; ++i) s += terms[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

}  // namespace

NumericShiftSet::NumericShiftSet(std::vector<double> s, bool allow_coinciding)
    : shifts(std::move(s)) {
    for (double v : shifts)
        if (!(std::abs(v) <= 0.5)) throw TailBoundViolation("numeric shift exceeds 1/2");
    if (!allow_coinciding)
        for (std::size_t i = 0; i < shifts.size(); ++i)
            for (std::size_t j = i + 1; j < shifts.size(); ++j)
                if (std::abs(shifts[i] - shifts[j]) < 1e-12)
                    throw DuplicateShift("coinciding numeric shifts");
}

double NumericShiftSet::max_abs() const {
    double m = 0.0;
    for (double v : shifts) m = std::max(m, std::abs(v));
    return m;
}

double tau_global(const SieveTable& sieve, const NumericShiftSet& A, std::uint64_t n) {
    double out = 1.0;
    for (const auto& [p, e] : sieve.factor(n))
        out *= tau_prime_power(A.shifts, static_cast<double>(p), e)[e];
    return out;
}

std::vector<double> tau_table(const SieveTable& sieve, const NumericShiftSet& A,
                              std::uint64_t X) {
    if (X > sieve.x_max()) throw OutOfSieveRange("tau_table: X beyond sieve range");
    std::vector<double> t(X + 1, 0.0);
    if (X >= 1) t[1] = 1.0;
    for (std::uint64_t n = 2; n <= X; ++n) {
        const std::uint64_t p = sieve.spf(n);
        std::uint64_t m = n;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        t[n] = t[m] * tau_prime_power(A.shifts, static_cast<double>(p), e)[e];
    }
    return t;
}

std::complex<double> dirichlet_poly(const SieveTable& sieve, const NumericShiftSet& A,
                                    std::complex<double> s, std::uint64_t X) {
    const std::vector<double> tau = tau_table(sieve, A, X);
    std::vector<std::complex<double>> terms(X);
    for (std::uint64_t n = 1; n <= X; ++n)
        terms[n - 1] = tau[n] * std::exp(-s * std::log(static_cast<double>(n)));
    return pairwise_sum(terms, 0, terms.size());
}

MomentReport correlation_sum(const SieveTable& sieve, const NumericShiftSet& A,
                             const NumericShiftSet& B, double T, std::uint64_t X,
                             const TestFunction& tf, double eps) {
    const double lam = tf.lambda(eps);
    const double w = kTwoPi * lam / T;  // band: |log(m/n)| <= w
    const std::vector<double> ta = tau_table(sieve, A, X);
    const std::vector<double> tb = tau_table(sieve, B, X);
    std::vector<double> lg(X + 1, 0.0), rs(X + 1, 0.0);
    for (std::uint64_t n = 1; n <= X; ++n) {
        lg[n] = std::log(static_cast<double>(n));
        rs[n] = 1.0 / std::sqrt(static_cast<double>(n));
    }

    const double scale = T / kTwoPi;
    const double grow = std::exp(w);
    const double psi0 = tf.psi_hat(0.0).real();
    long double acc_re = 0.0L, acc_im = 0.0L;
    double sa = 0.0, sb = 0.0;  // for the discarded-tail bound
    for (std::uint64_t m = 1; m <= X; ++m) {
        sa += std::abs(ta[m]) * rs[m];
        sb += std::abs(tb[m]) * rs[m];
        const auto n_hi = std::min<std::uint64_t>(
            X, static_cast<std::uint64_t>(static_cast<double>(m) * grow));
        double pre = 0.0, pim = 0.0;
        for (std::uint64_t n = m + 1; n <= n_hi; ++n) {
            const std::complex<double> ph = tf.psi_hat(scale * (lg[m] - lg[n]));
            const double wt = rs[m] * rs[n];
            const double c1 = ta[m] * tb[n], c2 = ta[n] * tb[m];
            pre += wt * ((c1 + c2) * ph.real());
            pim += wt * ((c1 - c2) * ph.imag());
        }
        acc_re += pre + ta[m] * tb[m] / static_cast<double>(m) * psi0;
        acc_im += pim;
    }

    MomentReport r;
    r.method = "correlation_sum";
    r.value = {static_cast<double>(acc_re), static_cast<double>(acc_im)};
    r.error_estimate = eps * sa * sb;
    return r;
}

MomentReport direct_integral(const SieveTable& sieve, const NumericShiftSet& A,
                             const NumericShiftSet& B, double T, std::uint64_t X,
                             const TestFunction& tf, double tol) {
    const std::vector<double> ta = tau_table(sieve, A, X);
    const std::vector<double> tb = tau_table(sieve, B, X);
    std::vector<double> ca(X + 1), cb(X + 1), lg(X + 1);
    for (std::uint64_t n = 1; n <= X; ++n) {
        const double r = 1.0 / std::sqrt(static_cast<double>(n));
        ca[n] = ta[n] * r;
        cb[n] = tb[n] * r;
        lg[n] = std::log(static_cast<double>(n));
    }

    auto integrand = [&](double u) {  // u = t/T in [1, 2]
        const double t = u * T;
        std::complex<double> da{0.0, 0.0}, db{0.0, 0.0};
        for (std::uint64_t n = 1; n <= X; ++n) {
            const double phase = t * lg[n];
            const std::complex<double> e{std::cos(phase), std::sin(phase)};
            da += ca[n] * std::conj(e);  // n^{-it}
            db += cb[n] * std::conj(e);
        }
        return tf.psi(u) * da * std::conj(db);
    };

    // Composite 16-point Gauss-Legendre on [1,2]; the integrand oscillates at
    // ~ T log X / (2 pi) cycles over the unit window, so size panels to keep
    // well under one cycle each, then double as a convergence witness.
    static std::vector<double> gx, gw;
    if (gx.empty()) gauss_legendre(16, gx, gw);

    const double cycles = T * lg[X] / kTwoPi;
    int panels = 1 << std::max(5, static_cast<int>(std::ceil(std::log2(cycles * 2.0 + 16.0))));

    auto quad = [&](int np) {
        std::complex<double> s{0.0, 0.0};
        const double h = 1.0 / np;
        for (int i = 0; i < np; ++i) {
            const double mid = 1.0 + (i + 0.5) * h;
            std::complex<double> ps{0.0, 0.0};
            for (std::size_t g = 0; g < gx.size(); ++g)
                ps += gw[g] * integrand(mid + 0.5 * h * gx[g]);
            s += ps * (0.5 * h);
        }
        return s;  // the 1/T normalization is absorbed by the u = t/T substitution
    };

    std::complex<double> v1 = quad(panels), v2 = quad(panels * 2);
    int doublings = 0;
    while (std::abs(v2 - v1) > tol * std::max(1.0, std::abs(v2)) && doublings < 3) {
        panels *= 2;
        v1 = v2;
        v2 = quad(panels * 2);
        ++doublings;
    }
    if (std::abs(v2 - v1) > 100 * tol * std::max(1.0, std::abs(v2)))
        throw QuadratureNonConvergence("direct_integral: panel doubling failed to settle");

    MomentReport r;
    r.method = "direct_integral";
    r.value = v2;
    r.error_estimate = std::abs(v2 - v1);
    return r;
}

namespace {

// Correction factor at one prime for euler_b.  y_min is the smallest pair sum
// s + a_i + b_j; terms of the local series decay at least like p^{-j y_min}.
double local_correction(const std::vector<double>& a, const std::vector<double>& b, double s,
                        double p, double y_min) {
    const int J = std::min(64, 6 + static_cast<int>(std::ceil(44.0 / (y_min * std::log(p)))));
    const std::vector<double> ta = tau_prime_power(a, p, J);
    const std::vector<double> tb = tau_prime_power(b, p, J);
    const double q = std::pow(p, -s);
    double sum = 0.0, qj = 1.0;
    for (int j = 0; j <= J; ++j) {
        const double term = ta[j] * tb[j] * qj;
        sum += term;
        if (j > 4 && std::abs(term) < 1e-18 * std::abs(sum)) break;
        qj *= q;
    }
    double prod = 1.0;
    for (double ai : a)
        for (double bj : b) prod *= 1.0 - std::pow(p, -(s + ai + bj));
    return sum * prod;
}

const std::vector<std::uint32_t>& primes_upto_cap() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t cap = 1u << 23;
        std::vector<bool> comp(cap, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < cap; ++i) {
            if (comp[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j < cap; j += i) comp[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace

MomentReport euler_b(const NumericShiftSet& A, const NumericShiftSet& B, double s,
                     double tail_tol) {
    double y_min = 1e300;
    double zeta_part = 1.0;
    for (double a : A.shifts)
        for (double b : B.shifts) {
            const double y = s + a + b;
            y_min = std::min(y_min, y);
            zeta_part *= zeta_num(y);
        }
    if (2.0 * y_min <= 1.0 + 1e-9)
        throw DivergentSeries("euler_b: correction product does not converge");

    // Dyadic prime windows; extrapolate the log-tail geometrically.
    const std::uint64_t p_cap = 1 << 23;  // ~8.4e6
    std::uint64_t lo = 2, hi = 1 << 14;
    double log_corr = 0.0;
    double prev_window = -1.0, last_window = -1.0;
    double tail = 1e300;
    const auto& primes = primes_upto_cap();
    std::size_t idx = 0;
    while (lo < p_cap) {
        double wsum = 0.0;
        for (; idx < primes.size() && primes[idx] < hi; ++idx) {
            const double c = local_correction(A.shifts, B.shifts, s, primes[idx], y_min);
            const double lc = std::log(c);
            log_corr += lc;
            wsum += std::abs(lc);
        }
        prev_window = last_window;
        last_window = wsum;
        if (prev_window > 0.0 && last_window > 0.0) {
            const double q = std::min(0.9, last_window / prev_window);
            tail = last_window * q / (1.0 - q);
        } else if (last_window == 0.0) {
            tail = 0.0;
        }
        if (tail <= tail_tol) break;
        lo = hi;
        hi *= 2;
    }

    MomentReport r;
    r.method = "euler_b";
    r.value = zeta_part * std::exp(log_corr);
    r.error_estimate = std::abs(r.value) * (std::isfinite(tail) ? tail : 1.0);
    return r;
}

MomentReport recipe_predict(const NumericShiftSet& A, const NumericShiftSet& B, double T,
                            double X, const TestFunction& tf) {
    const std::size_t k = A.shifts.size();
    if (k == 0 || B.shifts.size() != k) throw InvalidArity("recipe needs equal nonempty sets");
    const std::size_t ell = std::min<std::size_t>(
        k, static_cast<std::size_t>(std::floor(std::log(X) / std::log(T) + 1e-12)));

    static std::vector<double> nodes, weights;
    if (nodes.empty()) gauss_legendre(64, nodes, weights);

    auto weight_integral = [&](double S) {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double t = 1.5 + 0.5 * nodes[i];
            acc += 0.5 * weights[i] * tf.psi(t) * std::pow(t * T / kTwoPi, -S);
        }
        return acc;
    };

    // Enumerate swap subsets U of A-indices and V of B-indices, |U| = |V| <= ell.
    std::complex<double> total{0.0, 0.0};
    double err = 0.0;
    for (std::uint32_t mu = 0; mu < (1u << k); ++mu) {
        const int ru = __builtin_popcount(mu);
        if (static_cast<std::size_t>(ru) > ell) continue;
        for (std::uint32_t mv = 0; mv < (1u << k); ++mv) {
            if (__builtin_popcount(mv) != ru) continue;
            std::vector<double> a2, b2;
            double S = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                if (mu & (1u << i)) S += A.shifts[i];
                else a2.push_back(A.shifts[i]);
                if (mv & (1u << i)) S += B.shifts[i];
                else b2.push_back(B.shifts[i]);
            }
            for (std::size_t i = 0; i < k; ++i) {
                if (mv & (1u << i)) a2.push_back(-B.shifts[i]);
                if (mu & (1u << i)) b2.push_back(-A.shifts[i]);
            }
            const MomentReport bee = euler_b(NumericShiftSet(a2, true),
                                             NumericShiftSet(b2, true), 1.0, 1e-7);
            const double wi = weight_integral(S);
            total += wi * bee.value;
            err += std::abs(wi) * bee.error_estimate;
        }
    }

    MomentReport r;
    r.method = "recipe";
    r.value = total;
    r.error_estimate = err;
    return r;
}

}  // namespace divcor
