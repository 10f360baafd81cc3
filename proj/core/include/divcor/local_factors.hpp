#pragma once

#include <divcor/qseries.hpp>
#include <divcor/shifts.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace divcor {

// Truncation bookkeeping for single-prime series work.
//
// With s_a = max |shift| over the first-argument side (the A_j together with
// every -beta_j) and s_b its mirror, every unit step of any structural index
// (M_j, N_j, d, j, k, K, kappa) raises the minimal X-exponent of its term
// by at least 1 - s_a - s_b, so indices can be capped soundly.  Negative
// exponents come from the finitely many leading tau monomials of negative
// blocks and are bounded by neg_slack_x; internal arithmetic therefore runs
// at cutoff_x = ecut_x + neg_slack_x so that no coefficient at X-order
// <= ecut_x is contaminated by truncation from above.
struct LocalBounds {
    Rational s_a, s_b;
    std::int64_t ecut_x = 12;   // X-order up to which identities are compared
    std::int64_t scale = 1;     // index-bound multiplier (soundness witness)

    std::int64_t index_bound = 0;  // cap for every structural index
    std::int64_t neg_slack_x = 0;
    std::int64_t cutoff_x = 0;     // internal arithmetic cutoff, X-units
};

LocalBounds compute_bounds(const Rational& s_a, const Rational& s_b,
                           std::int64_t ecut_x, std::int64_t scale = 1);

enum class SigmaMode {
    Closed,  // the (M,0)/(0,N) three-sum reduction (verified separately)
    Brute,   // the literal sum over q in {0,1} and d,j,k >= 0
};

// Arithmetic of Euler factors at one (suppressed) prime: X = 1/p, ring in
// Y = X^{1/D}.  Memoizes tau arrays; one context per verification job (not
// internally thread-safe, but contexts are independent).
class LocalContext {
public:
    LocalContext(const Integer& D, const LocalBounds& bounds);

    const SeriesRing& ring() const { return ring_; }
    const LocalBounds& bounds() const { return bounds_; }
    std::int64_t D() const { return ring_.D; }
    // Comparison bound in Y-units: identities asserted to X-order ecut_x.
    std::int64_t compare_bound() const { return bounds_.ecut_x * ring_.D; }

    // Exact Y-exponent of X^r (throws RingMismatch if r*D is not integral).
    std::int64_t yexp(const Rational& r) const;

    // A(n) = tau_A(p^n) as a series in Y.
    const QSeries& tau(const ShiftSet& A, int n);
    // A_gamma(n) = X^{n*gamma} A(n).
    QSeries tau_shifted(const ShiftSet& A, const Rational& gamma, int n);

    // Z(A) = sum_j A(j) X^j  and  prod_{a in A}(1 - X^{1+a})^{-1}.
    QSeries zed_sum(const ShiftSet& A);
    QSeries zed_prod(const ShiftSet& A);

    // C(A,B) = sum_M A(M) B(M) X^M.
    QSeries cee(const ShiftSet& A, const ShiftSet& B);

    // Sigma_{A,B,alpha,beta}(M,N), min(M,N) = 0.
    QSeries sigma_brute(const ShiftSet& A, const ShiftSet& B,
                        const Rational& alpha, const Rational& beta, int M, int N);
    QSeries sigma_closed(const ShiftSet& A, const ShiftSet& B,
                         const Rational& alpha, const Rational& beta, int M, int N);

    // F(A_1..A_l; B_1..B_l): brute sum over min(M_i,N_i)=0, sum M = sum N, K_i.
    QSeries eff(const std::vector<ShiftSet>& A, const std::vector<ShiftSet>& B);

    // Q: sum over admissible (M_j,N_j) of prod Sigma_j X^{M_j(1-beta_j)-N_j alpha_j}.
    QSeries q_sum(const std::vector<ShiftSet>& A, const std::vector<ShiftSet>& B,
                  const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                  SigmaMode mode = SigmaMode::Closed);

    // prod_j (1 - X^{1-alpha_j-beta_j}) C(A_1 u..u A_l u {-beta_j}, B u {-alpha_j}).
    QSeries theorem2_rhs(const std::vector<ShiftSet>& A, const std::vector<ShiftSet>& B,
                         const std::vector<Rational>& alpha, const std::vector<Rational>& beta);

    // (-1)^l sum over disjoint J1,J2 of (-1)^{|J1|+|J2|} C(A u -beta_{J1}, B u -alpha_{J2}).
    QSeries lemma3_expand(const std::vector<ShiftSet>& A, const std::vector<ShiftSet>& B,
                          const std::vector<Rational>& alpha, const std::vector<Rational>& beta);

    // Q': blocks 1..l' carry Sigma factors and weights, blocks l'+1..l carry
    // kappa-sums A_i(M_i+kappa) B_i(N_i+kappa) X^{M_i+kappa}.
    QSeries qprime_sum(const std::vector<ShiftSet>& A, const std::vector<ShiftSet>& B,
                       const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                       std::size_t ell_prime, SigmaMode mode = SigmaMode::Closed);

    QSeries theorem4_rhs(const std::vector<ShiftSet>& A, const std::vector<ShiftSet>& B,
                         const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                         std::size_t ell_prime);

private:
    // Per-block factor of the delta-indexed convolution; delta = M - N with
    // min(M,N) = 0, so (M,N) = (max(delta,0), max(-delta,0)).
    QSeries kappa_block(const ShiftSet& A, const ShiftSet& B, std::int64_t delta);
    QSeries sigma_block(const ShiftSet& A, const ShiftSet& B,
                        const Rational& alpha, const Rational& beta,
                        std::int64_t delta, SigmaMode mode);
    // Convolve per-block delta-series, keeping only total delta = 0.
    QSeries convolve_delta_zero(const std::vector<std::map<std::int64_t, QSeries>>& blocks);
    void check_sigma_args(int M, int N) const;
    std::int64_t y_min(const ShiftSet& S) const;
    std::int64_t k_run(std::int64_t cap, std::int64_t relief,
                       const std::function<std::int64_t(std::int64_t)>& lead) const;

    SeriesRing ring_;
    LocalBounds bounds_;
    std::map<std::vector<Rational>, std::vector<QSeries>> tau_memo_;
};

} // namespace divcor
