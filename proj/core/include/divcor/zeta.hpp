#pragma once

#include <complex>

namespace divcor {

// Riemann zeta on the real axis (s > 0, s != 1) via Borwein's accelerated
// alternating series; `order` terms, accurate to ~3^-order.  Throws
// PoleProximity within 1e-6 of s = 1 and DivergentSeries for s <= 0.
double zeta_num(double s, int order = 64);

// Complex variant used by the recipe integrand (Re s > 0, s != 1).
std::complex<double> zeta_num(std::complex<double> s, int order = 64);

}  // namespace divcor
