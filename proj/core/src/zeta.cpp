#include "divcor/zeta.hpp"

#include <cmath>
#include <vector>

#include "divcor/errors.hpp"

namespace divcor {

namespace {

// Borwein's Chebyshev weights d_k for the alternating (eta) series.
std::vector<double> borwein_weights(int n) {
    std::vector<double> d(n + 1);
    double term = 1.0;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0 equals 1/n
    double acc = 1.0;
    // Build iteratively: t_0 = 1, t_{i} = t_{i-1} * (n+i-1)(n-i+1)*4 / ((2i-1)(2i))
    d[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i - 1.0) * (2.0 * i));
        acc += term;
        d[i] = acc;
    }
    return d;
}

template <typename S>
S zeta_impl(S s, double re, int order) {
    if (re <= 0.0) throw DivergentSeries("zeta_num requires Re s > 0");
    if (order < 8) order = 8;
    static thread_local std::vector<double> cache;
    static thread_local int cache_order = -1;
    if (cache_order != order) {
        cache = borwein_weights(order);
        cache_order = order;
    }
    const std::vector<double>& d = cache;
    S eta{};
    for (int k = 0; k < order; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        eta += sign * (d[k] - d[order]) * std::exp(-s * std::log(double(k) + 1.0));
    }
    eta *= -1.0 / d[order];
    const S denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
    return eta / denom;
}

}  // namespace

double zeta_num(double s, int order) {
    if (std::abs(s - 1.0) < 1e-6) throw PoleProximity("zeta_num evaluated too close to s = 1");
    return zeta_impl<double>(s, s, order);
}

std::complex<double> zeta_num(std::complex<double> s, int order) {
    if (std::abs(s - 1.0) < 1e-6) throw PoleProximity("zeta_num evaluated too close to s = 1");
    return zeta_impl<std::complex<double>>(s, s.real(), order);
}

}  // namespace divcor
