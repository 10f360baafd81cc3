#include <divcor/local_factors.hpp>

#include <algorithm>

namespace divcor {

namespace {

std::int64_t ceil_rational(const Rational& r) {
    Integer n = numer(r), d = denom(r);
    Integer q = n / d;
    if (n > 0 && n % d != 0) q += 1;
    return q.convert_to<std::int64_t>();
}

} // namespace

LocalBounds compute_bounds(const Rational& s_a, const Rational& s_b,
                           std::int64_t ecut_x, std::int64_t scale) {
    if (s_a < 0 || s_b < 0) throw TailBoundViolation("negative side maximum");
    const Rational pull = std::max(s_a, s_b);
    const Rational growth = 1 - s_a - s_b;  // min X-exponent gain per index step
    if (growth <= 0 || pull >= growth)
        throw TailBoundViolation("index bounds require max(s_a,s_b) < 1 - s_a - s_b");
    LocalBounds b;
    b.s_a = s_a;
    b.s_b = s_b;
    b.ecut_x = ecut_x;
    b.scale = scale;
    // A partial block product sitting at exponent e can still be pulled down by
    // at most pull = max(s_a, s_b) per unit of remaining negative block depth,
    // and that depth is itself bounded by cutoff/growth.  Iterate the implied
    // inequality
    //   slack >= ceil(pull * (ecut + slack) / growth) + 2
    // to its (monotone, hence existing since pull < growth) fixed point.
    b.neg_slack_x = 2;
    for (;;) {
        const std::int64_t cutoff = ecut_x + b.neg_slack_x;
        const std::int64_t depth = ceil_rational(Rational(cutoff) / growth) + 2;
        const std::int64_t next = ceil_rational(pull * depth) + 2;
        if (next <= b.neg_slack_x) break;
        b.neg_slack_x = next;
    }
    b.cutoff_x = ecut_x + b.neg_slack_x;
    b.index_bound = (ceil_rational(Rational(b.cutoff_x) / growth) + 2) * scale;
    return b;
}

LocalContext::LocalContext(const Integer& D, const LocalBounds& bounds) : bounds_(bounds) {
    ring_.D = D.convert_to<std::int64_t>();
    if (ring_.D <= 0) throw RingMismatch("denominator scale must be positive");
    ring_.cutoff = bounds_.cutoff_x * ring_.D;
    // Loose guard: legitimate negative exponents stay far above this.
    ring_.floor = -(bounds_.cutoff_x * 4 + 64) * ring_.D;
}

std::int64_t LocalContext::yexp(const Rational& r) const {
    Rational scaled = r * ring_.D;
    if (denom(scaled) != 1)
        throw RingMismatch("shift " + std::to_string(to_double(r)) +
                           " not representable at scale D=" + std::to_string(ring_.D));
    return numer(scaled).convert_to<std::int64_t>();
}

const QSeries& LocalContext::tau(const ShiftSet& A, int n) {
    std::vector<Rational> key = A.values();
    std::sort(key.begin(), key.end());
    auto& arr = tau_memo_[key];
    if (static_cast<std::size_t>(n) < arr.size()) return arr[static_cast<std::size_t>(n)];
    // (Re)build the whole array by convolving one geometric factor per shift:
    // tau_{A u {a}}(p^m) = sum_e X^{e a} tau_A(p^{m-e}).  Grow geometrically so
    // that callers sweeping n upwards pay amortized, not quadratic, rebuilds.
    const std::size_t target = std::max<std::size_t>(static_cast<std::size_t>(n) + 1,
                                                     2 * arr.size() + 8);
    std::vector<QSeries> cur(target, QSeries::zero(ring_));
    cur[0] = QSeries::one(ring_);
    for (const auto& a : key) {
        const std::int64_t ya = yexp(a);
        std::vector<QSeries> next(cur.size(), QSeries::zero(ring_));
        for (std::size_t m = 0; m < cur.size(); ++m) {
            QSeries acc(ring_);
            for (std::size_t e = 0; e <= m; ++e)
                acc = acc + cur[m - e].shifted(static_cast<std::int64_t>(e) * ya);
            next[m] = std::move(acc);
        }
        cur = std::move(next);
    }
    arr = std::move(cur);
    return arr[static_cast<std::size_t>(n)];
}

QSeries LocalContext::tau_shifted(const ShiftSet& A, const Rational& gamma, int n) {
    return tau(A, n).shifted(static_cast<std::int64_t>(n) * yexp(gamma));
}

QSeries LocalContext::zed_sum(const ShiftSet& A) {
    const std::int64_t yA = y_min(A);
    const std::int64_t J =
        k_run(bounds_.index_bound, 0, [&](std::int64_t j) { return j * (yA + ring_.D); });
    tau(A, static_cast<int>(J));
    QSeries acc(ring_);
    for (std::int64_t j = 0; j <= J; ++j)
        acc = acc + tau(A, static_cast<int>(j)).shifted(j * ring_.D);
    return acc;
}

QSeries LocalContext::zed_prod(const ShiftSet& A) {
    QSeries acc = QSeries::one(ring_);
    for (const auto& a : A.values()) {
        QSeries factor = QSeries::one(ring_) - QSeries::monomial(ring_, ring_.D + yexp(a), 1);
        acc = acc * factor.inv();
    }
    return acc;
}

QSeries LocalContext::cee(const ShiftSet& A, const ShiftSet& B) {
    const std::int64_t yAB = y_min(A) + y_min(B) + ring_.D;
    const std::int64_t M_run =
        k_run(bounds_.index_bound, 0, [&](std::int64_t M) { return M * yAB; });
    tau(A, static_cast<int>(M_run));
    tau(B, static_cast<int>(M_run));
    QSeries acc(ring_);
    for (std::int64_t M = 0; M <= M_run; ++M) {
        const std::int64_t top = ring_.cutoff - M * ring_.D;
        QSeries term =
            tau(A, static_cast<int>(M)).mul_truncated(tau(B, static_cast<int>(M)), top);
        acc = acc + term.shifted(M * ring_.D);
    }
    return acc;
}

void LocalContext::check_sigma_args(int M, int N) const {
    if (M < 0 || N < 0 || std::min(M, N) != 0)
        throw InvalidArity("Sigma requires min(M,N) = 0");
}

QSeries LocalContext::sigma_brute(const ShiftSet& A, const ShiftSet& B,
                                  const Rational& alpha, const Rational& beta, int M, int N) {
    check_sigma_args(M, N);
    const std::int64_t I = bounds_.index_bound;
    // tails: T(t) = sum_j A_{-alpha}(j+t) X^j,  U(t) = sum_k B_{-beta}(k+t) X^k
    // Index caps carry an extra M+N margin: fixed small indices can push the
    // minimal exponent down before the per-step growth bound takes over.
    const std::int64_t J = I + M + N + 4;
    std::map<std::int64_t, QSeries> tail_a, tail_b;
    auto tail = [&](std::map<std::int64_t, QSeries>& memo, const ShiftSet& S,
                    const Rational& gamma, std::int64_t t) -> const QSeries& {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        QSeries acc(ring_);
        for (std::int64_t j = 0; j <= J; ++j)
            acc = acc + tau_shifted(S, gamma, static_cast<int>(j + t)).shifted(j * ring_.D);
        return memo.emplace(t, std::move(acc)).first->second;
    };
    const std::int64_t yab = yexp(alpha + beta);
    const std::int64_t d_max = std::max(M, N) + I + 4;
    QSeries acc(ring_);
    for (int q = 0; q <= 1; ++q) {
        for (std::int64_t d = 0; d <= d_max; ++d) {
            const std::int64_t qd = q + d;
            const std::int64_t min_m = std::min<std::int64_t>(qd, M);
            const std::int64_t min_n = std::min<std::int64_t>(qd, N);
            const QSeries& ta = tail(tail_a, A, -alpha, qd - min_n);
            const QSeries& tb = tail(tail_b, B, -beta, qd - min_m);
            const std::int64_t w = d * yab + (2 * q + d - min_m - min_n) * ring_.D;
            QSeries term =
                ta.mul_truncated(tb, ring_.cutoff - w).shifted(w, q ? Rational(-1) : Rational(1));
            acc = acc + term;
        }
    }
    return acc;
}

// Exact minimal Y-exponent tau(S, n) can reach: all n prime powers on the
// smallest shift.
std::int64_t LocalContext::y_min(const ShiftSet& S) const {
    std::int64_t m = yexp(S.values().front());
    for (const auto& v : S.values()) m = std::min(m, yexp(v));
    return m;
}

// Largest index K <= cap whose sweep term can still touch the retained
// exponent range: `lead(K)` bounds the term's minimal exponent from below and
// grows by at least (1 - s_a - s_b) * D per step, `relief` is how far above
// the cutoff a term may sit before a trailing downward shift.  The cap is
// proportional to `scale` so soundness witnesses genuinely double the sweep.
std::int64_t LocalContext::k_run(std::int64_t cap, std::int64_t relief,
                                 const std::function<std::int64_t(std::int64_t)>& lead) const {
    std::int64_t K = 0;
    while (K < cap && lead(K + 1) <= ring_.cutoff + relief) ++K;
    return K;
}

QSeries LocalContext::sigma_closed(const ShiftSet& A, const ShiftSet& B,
                                   const Rational& alpha, const Rational& beta, int M, int N) {
    check_sigma_args(M, N);
    const ShiftSet Aaug = A.with(-beta);
    const ShiftSet Baug = B.with(-alpha);
    const std::int64_t yA = y_min(A), yB = y_min(B), yAa = y_min(Aaug), yBa = y_min(Baug);
    if (N != 0) {
        // Sigma_{A,B,alpha,beta}(0,N) = Sigma_{B,A,beta,alpha}(N,0) by symmetry
        // of the defining sum; use the mirrored closed form directly.
        const std::int64_t relief = std::max<std::int64_t>(0, -N * yexp(alpha));
        auto lead = [&](std::int64_t K) {
            return std::min({K * yAa + (K + N) * yB, K * yA + (K + N) * yB,
                             K * yA + (K + N) * yBa}) +
                   K * ring_.D;
        };
        const std::int64_t K_run = k_run(bounds_.index_bound + N + 4, relief, lead);
        // Warm the tau memos so the references below stay valid across calls.
        tau(Aaug, static_cast<int>(K_run));
        tau(A, static_cast<int>(K_run));
        tau(B, static_cast<int>(K_run + N));
        tau(Baug, static_cast<int>(K_run + N));
        QSeries s(ring_);
        for (std::int64_t K = 0; K <= K_run; ++K) {
            const std::int64_t top = ring_.cutoff + relief - K * ring_.D;
            QSeries c =
                tau(Aaug, static_cast<int>(K)).mul_truncated(tau(B, static_cast<int>(K + N)), top) -
                tau(A, static_cast<int>(K)).mul_truncated(tau(B, static_cast<int>(K + N)), top) +
                tau(A, static_cast<int>(K)).mul_truncated(tau(Baug, static_cast<int>(K + N)), top);
            s = s + c.shifted(K * ring_.D);
        }
        return s.shifted(N * yexp(alpha));
    }
    const std::int64_t relief = std::max<std::int64_t>(0, -M * yexp(beta));
    auto lead = [&](std::int64_t K) {
        return std::min({K * yBa + (K + M) * yA, K * yB + (K + M) * yA,
                         K * yB + (K + M) * yAa}) +
               K * ring_.D;
    };
    const std::int64_t K_run = k_run(bounds_.index_bound + M + 4, relief, lead);
    tau(Baug, static_cast<int>(K_run));
    tau(B, static_cast<int>(K_run));
    tau(A, static_cast<int>(K_run + M));
    tau(Aaug, static_cast<int>(K_run + M));
    QSeries s(ring_);
    for (std::int64_t K = 0; K <= K_run; ++K) {
        const std::int64_t top = ring_.cutoff + relief - K * ring_.D;
        QSeries c =
            tau(Baug, static_cast<int>(K)).mul_truncated(tau(A, static_cast<int>(K + M)), top) -
            tau(B, static_cast<int>(K)).mul_truncated(tau(A, static_cast<int>(K + M)), top) +
            tau(B, static_cast<int>(K)).mul_truncated(tau(Aaug, static_cast<int>(K + M)), top);
        s = s + c.shifted(K * ring_.D);
    }
    return s.shifted(M * yexp(beta));
}

QSeries LocalContext::kappa_block(const ShiftSet& A, const ShiftSet& B, std::int64_t delta) {
    const std::int64_t M = std::max<std::int64_t>(delta, 0);
    const std::int64_t N = std::max<std::int64_t>(-delta, 0);
    const std::int64_t yA = y_min(A), yB = y_min(B);
    auto lead = [&](std::int64_t K) {
        return (K + M) * yA + (K + N) * yB + (K + M) * ring_.D;
    };
    if (lead(0) > ring_.cutoff) return QSeries::zero(ring_);
    const std::int64_t K_run = k_run(bounds_.index_bound + M + N + 4, 0, lead);
    tau(A, static_cast<int>(K_run + M));
    tau(B, static_cast<int>(K_run + N));
    QSeries acc(ring_);
    for (std::int64_t K = 0; K <= K_run; ++K) {
        const std::int64_t top = ring_.cutoff - (K + M) * ring_.D;
        QSeries term = tau(A, static_cast<int>(K + M))
                           .mul_truncated(tau(B, static_cast<int>(K + N)), top);
        acc = acc + term.shifted((K + M) * ring_.D);
    }
    return acc;
}

QSeries LocalContext::sigma_block(const ShiftSet& A, const ShiftSet& B,
                                  const Rational& alpha, const Rational& beta,
                                  std::int64_t delta, SigmaMode mode) {
    const int M = static_cast<int>(std::max<std::int64_t>(delta, 0));
    const int N = static_cast<int>(std::max<std::int64_t>(-delta, 0));
    QSeries sig = (mode == SigmaMode::Closed) ? sigma_closed(A, B, alpha, beta, M, N)
                                              : sigma_brute(A, B, alpha, beta, M, N);
    // weight X^{M(1-beta) - N alpha}
    const std::int64_t w = M * (ring_.D - yexp(beta)) - N * yexp(alpha);
    return sig.shifted(w);
}

QSeries LocalContext::convolve_delta_zero(
    const std::vector<std::map<std::int64_t, QSeries>>& blocks) {
    const std::int64_t I = bounds_.index_bound;
    // A partial product at net index d and minimal exponent e can only reach a
    // retained coefficient if the remaining blocks, which must net -d, leave
    // e within the cutoff: they raise exponents by at least d*(1-s_a) when
    // d < 0 and lower them by at most d*s_b when d > 0.
    auto limit_y = [&](std::int64_t d) {
        const Rational lim = (Rational(bounds_.cutoff_x) +
                              (d >= 0 ? Rational(d * bounds_.s_b)
                                      : Rational(d * (1 - bounds_.s_a)))) *
                             ring_.D;
        const Integer n = numer(lim), d2 = denom(lim);
        Integer q = n / d2;
        if (n < 0 && n % d2 != 0) q -= 1;
        return q.convert_to<std::int64_t>();
    };
    std::map<std::int64_t, QSeries> acc;
    acc.emplace(0, QSeries::one(ring_));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::int64_t reach = static_cast<std::int64_t>(blocks.size() - 1 - i) * I;
        std::map<std::int64_t, QSeries> next;
        for (const auto& [da, sa] : acc) {
            if (sa.is_zero()) continue;
            for (const auto& [db, sb] : blocks[i]) {
                const std::int64_t d = da + db;
                if (d > reach || d < -reach) continue;  // cannot return to 0
                const std::int64_t lim = limit_y(d);
                if (*sa.min_exponent() + *sb.min_exponent() > lim) continue;
                QSeries prod = sa.mul_truncated(sb, lim);
                if (prod.is_zero()) continue;
                auto [it, fresh] = next.emplace(d, prod);
                if (!fresh) it->second = it->second + prod;
            }
        }
        acc = std::move(next);
    }
    auto it = acc.find(0);
    return it == acc.end() ? QSeries::zero(ring_) : it->second;
}

QSeries LocalContext::q_sum(const std::vector<ShiftSet>& A, const std::vector<ShiftSet>& B,
                            const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                            SigmaMode mode) {
    const std::size_t ell = A.size();
    if (ell == 0 || B.size() != ell || alpha.size() != ell || beta.size() != ell)
        throw InvalidArity("q_sum needs matching nonempty lists");
    std::vector<std::map<std::int64_t, QSeries>> blocks(ell);
    for (std::size_t j = 0; j < ell; ++j)
        for (std::int64_t d = -bounds_.index_bound; d <= bounds_.index_bound; ++d) {
            QSeries s = sigma_block(A[j], B[j], alpha[j], beta[j], d, mode);
            if (!s.is_zero()) blocks[j].emplace(d, std::move(s));
        }
    return convolve_delta_zero(blocks);
}

QSeries LocalContext::eff(const std::vector<ShiftSet>& A, const std::vector<ShiftSet>& B) {
    const std::size_t ell = A.size();
    if (ell == 0 || B.size() != ell) throw InvalidArity("eff needs matching nonempty lists");
    std::vector<std::map<std::int64_t, QSeries>> blocks(ell);
    for (std::size_t j = 0; j < ell; ++j)
        for (std::int64_t d = -bounds_.index_bound; d <= bounds_.index_bound; ++d) {
            QSeries s = kappa_block(A[j], B[j], d);
            if (!s.is_zero()) blocks[j].emplace(d, std::move(s));
        }
    return convolve_delta_zero(blocks);
}

namespace {
ShiftSet union_all(const std::vector<ShiftSet>& sets) {
    ShiftSet u;
    for (const auto& s : sets) u = u.unite(s);
    return u;
}
} // namespace

QSeries LocalContext::theorem2_rhs(const std::vector<ShiftSet>& A,
                                   const std::vector<ShiftSet>& B,
                                   const std::vector<Rational>& alpha,
                                   const std::vector<Rational>& beta) {
    return theorem4_rhs(A, B, alpha, beta, A.size());
}

QSeries LocalContext::theorem4_rhs(const std::vector<ShiftSet>& A,
                                   const std::vector<ShiftSet>& B,
                                   const std::vector<Rational>& alpha,
                                   const std::vector<Rational>& beta,
                                   std::size_t ell_prime) {
    const std::size_t ell = A.size();
    if (ell == 0 || B.size() != ell) throw InvalidArity("mismatched block lists");
    if (ell_prime < 1 || ell_prime > ell) throw InvalidArity("need 1 <= l' <= l");
    if (alpha.size() < ell_prime || beta.size() < ell_prime)
        throw InvalidArity("need l' swap shifts");
    ShiftSet ua = union_all(A);
    ShiftSet ub = union_all(B);
    for (std::size_t j = 0; j < ell_prime; ++j) {
        ua = ua.with(-beta[j]);
        ub = ub.with(-alpha[j]);
    }
    QSeries rhs = cee(ua, ub);
    for (std::size_t j = 0; j < ell_prime; ++j) {
        const std::int64_t e = ring_.D - yexp(alpha[j] + beta[j]);
        rhs = rhs * (QSeries::one(ring_) - QSeries::monomial(ring_, e, 1));
    }
    return rhs;
}

QSeries LocalContext::lemma3_expand(const std::vector<ShiftSet>& A,
                                    const std::vector<ShiftSet>& B,
                                    const std::vector<Rational>& alpha,
                                    const std::vector<Rational>& beta) {
    const std::size_t ell = A.size();
    if (ell == 0 || B.size() != ell || alpha.size() != ell || beta.size() != ell)
        throw InvalidArity("lemma3_expand needs matching nonempty lists");
    const ShiftSet ua = union_all(A);
    const ShiftSet ub = union_all(B);
    QSeries acc(ring_);
    const unsigned full = (1u << ell) - 1u;
    for (unsigned j1 = 0; j1 <= full; ++j1) {
        const unsigned rest = full & ~j1;
        // iterate submasks j2 of the complement of j1 (disjointness)
        unsigned j2 = rest;
        while (true) {
            ShiftSet a = ua, b = ub;
            int sz = 0;
            for (std::size_t j = 0; j < ell; ++j) {
                if (j1 & (1u << j)) { a = a.with(-beta[j]); ++sz; }
                if (j2 & (1u << j)) { b = b.with(-alpha[j]); ++sz; }
            }
            const int sign = ((static_cast<int>(ell) + sz) % 2) ? -1 : 1;
            acc = acc + cee(a, b).scaled(sign);
            if (j2 == 0) break;
            j2 = (j2 - 1) & rest;
        }
    }
    return acc;
}

QSeries LocalContext::qprime_sum(const std::vector<ShiftSet>& A,
                                 const std::vector<ShiftSet>& B,
                                 const std::vector<Rational>& alpha,
                                 const std::vector<Rational>& beta,
                                 std::size_t ell_prime, SigmaMode mode) {
    const std::size_t ell = A.size();
    if (ell == 0 || B.size() != ell) throw InvalidArity("mismatched block lists");
    if (ell_prime < 1 || ell_prime > ell) throw InvalidArity("need 1 <= l' <= l");
    if (alpha.size() < ell_prime || beta.size() < ell_prime)
        throw InvalidArity("need l' swap shifts");
    std::vector<std::map<std::int64_t, QSeries>> blocks(ell);
    for (std::size_t j = 0; j < ell; ++j)
        for (std::int64_t d = -bounds_.index_bound; d <= bounds_.index_bound; ++d) {
            QSeries s = (j < ell_prime) ? sigma_block(A[j], B[j], alpha[j], beta[j], d, mode)
                                        : kappa_block(A[j], B[j], d);
            if (!s.is_zero()) blocks[j].emplace(d, std::move(s));
        }
    return convolve_delta_zero(blocks);
}

} // namespace divcor
