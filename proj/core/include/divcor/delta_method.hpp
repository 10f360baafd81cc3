#pragma once

#include <cstdint>

#include "divcor/dirichlet.hpp"
#include "divcor/sieve.hpp"

namespace divcor {

// Ramanujan sum c_q(h) = sum_{d | (q,h)} d mu(q/d).
long long ramanujan_sum(const SieveTable& sieve, std::uint64_t q, long long h);

// G_A(w, p^r) = prod_{a' in A'} (1 - p^{-(w + a')}) * sum_j tau_{A'}(p^{j+r}) p^{-jw},
// where A' = A with the distinguished shift (index alpha_idx) removed and the
// remaining shifts lowered by that shift's value.
double g_factor(const SieveTable& sieve, const NumericShiftSet& A, std::size_t alpha_idx,
                std::uint64_t p, int r, double tol = 1e-14);
// Multiplicative extension of g_factor to a general modulus n.
double g_factor_multiplicative(const SieveTable& sieve, const NumericShiftSet& A,
                               std::size_t alpha_idx, std::uint64_t n);

// Main-term prediction for the averaged correlation
//   (1/u) sum_m tau_A(m) tau_B(n) V(m/u) W(n/u)  over  M n = N m + h,
// in the box-weight normalization (V = W = indicator of [1,2] scaled; see the
// matching empirical_correlation).  q-sum truncated at q_max with a reported
// tail estimate.
struct DeltaReport {
    double value = 0.0;
    double tail_estimate = 0.0;
};
DeltaReport delta_main_term(const SieveTable& sieve, const NumericShiftSet& A,
                            const NumericShiftSet& B, std::uint64_t M, std::uint64_t N,
                            long long h, double u, std::uint64_t q_max = 10000);

// Empirical average: (1/u) sum over solutions of M n = N m + h with
// m/(N u) in [1, 1+delta), n/(M u) matching, of tau_A(m) tau_B(n),
// normalized per unit window (delta defaults to 0.05).
double empirical_correlation(const SieveTable& sieve, const NumericShiftSet& A,
                             const NumericShiftSet& B, std::uint64_t M, std::uint64_t N,
                             long long h, double u, double delta = 0.05);

}  // namespace divcor
