#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "divcor/sieve.hpp"
#include "divcor/test_function.hpp"

namespace divcor {

// Double-precision shift set for the global (numeric) side.  Coinciding
// shifts are rejected unless explicitly allowed (they are fine numerically
// everywhere except at zeta poles, which the callees guard themselves).
struct NumericShiftSet {
    std::vector<double> shifts;

    explicit NumericShiftSet(std::vector<double> s, bool allow_coinciding = false);
    std::size_t size() const { return shifts.size(); }
    double max_abs() const;
};

struct MomentReport {
    std::string method;
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;  // heuristic bound on truncation/tail error
};

// tau_A(n) = sum_{n = prod n_i} prod n_i^{-a_i}.
double tau_global(const SieveTable& sieve, const NumericShiftSet& A, std::uint64_t n);
// Table of tau_A(n) for n = 0..X (index 0 unused), filled multiplicatively.
std::vector<double> tau_table(const SieveTable& sieve, const NumericShiftSet& A, std::uint64_t X);

// D_A(s; X) = sum_{n <= X} tau_A(n) n^{-s}, blockwise pairwise summation.
std::complex<double> dirichlet_poly(const SieveTable& sieve, const NumericShiftSet& A,
                                    std::complex<double> s, std::uint64_t X);

// sum_{m,n <= X} tau_A(m) tau_B(n) (mn)^{-1/2} psi_hat((T/2pi) log(m/n)),
// restricted to the band where |psi_hat| can exceed eps; the discarded tail
// is bounded and reported in error_estimate.
MomentReport correlation_sum(const SieveTable& sieve, const NumericShiftSet& A,
                             const NumericShiftSet& B, double T, std::uint64_t X,
                             const TestFunction& tf, double eps = 1e-8);

// (1/T) int psi(t/T) D_A(1/2+it; X) D_B(1/2-it; X) dt over t in [T, 2T],
// composite Gauss-Legendre with one doubling step as a convergence witness.
MomentReport direct_integral(const SieveTable& sieve, const NumericShiftSet& A,
                             const NumericShiftSet& B, double T, std::uint64_t X,
                             const TestFunction& tf, double tol = 1e-9);

// B(A, B; s) = prod_{i,j} zeta(s + a_i + b_j) corrected by an Euler product;
// prime cutoff grows until the estimated log-tail is below tail_tol or the
// internal cap is reached (the achieved bound lands in error_estimate).
MomentReport euler_b(const NumericShiftSet& A, const NumericShiftSet& B, double s,
                     double tail_tol = 1e-8);

// Swap-sum prediction for the weighted moment: ell = max swaps from T^ell <= X.
MomentReport recipe_predict(const NumericShiftSet& A, const NumericShiftSet& B, double T,
                            double X, const TestFunction& tf);

}  // namespace divcor
