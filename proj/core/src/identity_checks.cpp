#include "divcor/identity_checks.hpp"

#include <chrono>

#include "divcor/errors.hpp"

namespace divcor {

namespace {

Rational abs_rat(const Rational& r) { return r < 0 ? Rational(-r) : r; }

class Timer {
public:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

IdentityReport make_report(const std::string& identity, const LocalInstance& inst,
                           const LocalBounds& b) {
    IdentityReport r;
    r.identity = identity;
    r.instance = inst.describe();
    r.D = inst.D.convert_to<std::int64_t>();
    r.ecut_x = b.ecut_x;
    r.cutoff_x = b.cutoff_x;
    r.index_bound = b.index_bound;
    return r;
}

bool compare(LocalContext& ctx, const QSeries& lhs, const QSeries& rhs, std::int64_t bound,
             IdentityReport& r, const std::string& what) {
    Mismatch m;
    if (lhs.eq_upto(rhs, bound, &m)) return true;
    r.pass = false;
    r.mismatch = m;
    r.detail = what;
    (void)ctx;
    return false;
}

}  // namespace

LocalBounds instance_bounds(const LocalInstance& inst, std::int64_t scale) {
    Rational sa = 0, sb = 0;
    for (const auto& S : inst.A)
        for (const auto& v : S.values()) sa = std::max(sa, abs_rat(v));
    for (const auto& S : inst.B)
        for (const auto& v : S.values()) sb = std::max(sb, abs_rat(v));
    for (std::size_t j = 0; j < inst.ell_prime; ++j) {
        sa = std::max(sa, abs_rat(inst.beta[j]));
        sb = std::max(sb, abs_rat(inst.alpha[j]));
    }
    return compute_bounds(sa, sb, inst.ecut_x, scale);
}

IdentityReport check_lemma1(const LocalInstance& inst, int mn_max) {
    Timer t;
    const LocalBounds b = instance_bounds(inst);
    LocalContext ctx(inst.D, b);
    IdentityReport r = make_report("lemma1", inst, b);
    r.pass = true;
    for (int m = 0; m <= mn_max && r.pass; ++m) {
        QSeries brute = ctx.sigma_brute(inst.A[0], inst.B[0], inst.alpha[0], inst.beta[0], m, 0);
        QSeries closed = ctx.sigma_closed(inst.A[0], inst.B[0], inst.alpha[0], inst.beta[0], m, 0);
        r.pass = compare(ctx, brute, closed, ctx.compare_bound(), r,
                         "sigma(M,0) at M=" + std::to_string(m));
    }
    for (int n = 1; n <= mn_max && r.pass; ++n) {
        QSeries brute = ctx.sigma_brute(inst.A[0], inst.B[0], inst.alpha[0], inst.beta[0], 0, n);
        QSeries closed = ctx.sigma_closed(inst.A[0], inst.B[0], inst.alpha[0], inst.beta[0], 0, n);
        r.pass = compare(ctx, brute, closed, ctx.compare_bound(), r,
                         "sigma(0,N) at N=" + std::to_string(n));
    }
    r.seconds = t.elapsed();
    return r;
}

IdentityReport check_lemma2(const LocalInstance& inst) {
    Timer t;
    const LocalBounds b = instance_bounds(inst);
    LocalContext ctx(inst.D, b);
    IdentityReport r = make_report("lemma2", inst, b);
    ShiftSet ua = inst.A[0], ub = inst.B[0];
    for (std::size_t j = 1; j < inst.ell(); ++j) {
        ua = ua.unite(inst.A[j]);
        ub = ub.unite(inst.B[j]);
    }
    r.pass = compare(ctx, ctx.eff(inst.A, inst.B), ctx.cee(ua, ub), ctx.compare_bound(), r,
                     "F vs C(unions)");
    r.seconds = t.elapsed();
    return r;
}

IdentityReport check_lemma3(const LocalInstance& inst) {
    Timer t;
    const LocalBounds b = instance_bounds(inst);
    LocalContext ctx(inst.D, b);
    IdentityReport r = make_report("lemma3", inst, b);
    r.pass = compare(ctx, ctx.lemma3_expand(inst.A, inst.B, inst.alpha, inst.beta),
                     ctx.theorem2_rhs(inst.A, inst.B, inst.alpha, inst.beta),
                     ctx.compare_bound(), r, "inclusion-exclusion vs product form");
    r.seconds = t.elapsed();
    return r;
}

IdentityReport check_theorem2(const LocalInstance& inst, SigmaMode mode) {
    Timer t;
    const LocalBounds b = instance_bounds(inst);
    LocalContext ctx(inst.D, b);
    IdentityReport r = make_report("theorem2", inst, b);
    r.pass = compare(ctx, ctx.q_sum(inst.A, inst.B, inst.alpha, inst.beta, mode),
                     ctx.theorem2_rhs(inst.A, inst.B, inst.alpha, inst.beta),
                     ctx.compare_bound(), r, "Q vs product form");
    r.seconds = t.elapsed();
    return r;
}

IdentityReport check_theorem4(const LocalInstance& inst, SigmaMode mode) {
    Timer t;
    const LocalBounds b = instance_bounds(inst);
    LocalContext ctx(inst.D, b);
    IdentityReport r = make_report("theorem4", inst, b);
    r.pass = compare(ctx,
                     ctx.qprime_sum(inst.A, inst.B, inst.alpha, inst.beta, inst.ell_prime, mode),
                     ctx.theorem4_rhs(inst.A, inst.B, inst.alpha, inst.beta, inst.ell_prime),
                     ctx.compare_bound(), r, "Q' vs product form");
    r.seconds = t.elapsed();
    return r;
}

IdentityReport check_truncation_soundness(const std::string& which, const LocalInstance& inst) {
    Timer t;
    const LocalBounds b1 = instance_bounds(inst, 1);
    const LocalBounds b2 = instance_bounds(inst, 2);
    LocalContext c1(inst.D, b1), c2(inst.D, b2);
    IdentityReport r = make_report("soundness:" + which, inst, b1);
    // Compare through the full internal cutoff: doubling the index bounds must
    // not change anything that was retained.
    const std::int64_t bound = c1.ring().cutoff;

    auto run = [&](LocalContext& ctx) -> std::vector<QSeries> {
        std::vector<QSeries> out;
        if (which == "lemma1") {
            for (int m = 0; m <= 3; ++m)
                out.push_back(
                    ctx.sigma_brute(inst.A[0], inst.B[0], inst.alpha[0], inst.beta[0], m, 0));
            for (int n = 1; n <= 3; ++n)
                out.push_back(
                    ctx.sigma_brute(inst.A[0], inst.B[0], inst.alpha[0], inst.beta[0], 0, n));
        } else if (which == "lemma2") {
            out.push_back(ctx.eff(inst.A, inst.B));
        } else if (which == "lemma3") {
            out.push_back(ctx.lemma3_expand(inst.A, inst.B, inst.alpha, inst.beta));
        } else if (which == "theorem2") {
            out.push_back(ctx.q_sum(inst.A, inst.B, inst.alpha, inst.beta));
        } else if (which == "theorem4") {
            out.push_back(
                ctx.qprime_sum(inst.A, inst.B, inst.alpha, inst.beta, inst.ell_prime));
        } else {
            throw ConfigError("unknown soundness target: " + which);
        }
        return out;
    };

    std::vector<QSeries> base = run(c1), doubled = run(c2);
    r.pass = true;
    for (std::size_t i = 0; i < base.size() && r.pass; ++i)
        r.pass = compare(c1, base[i], doubled[i], bound,
                         r, "series #" + std::to_string(i) + " changed under doubled bounds");
    r.seconds = t.elapsed();
    return r;
}

}  // namespace divcor
