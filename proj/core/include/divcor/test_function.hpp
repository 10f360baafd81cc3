#pragma once

#include <complex>
#include <vector>

namespace divcor {

// Smooth weight psi supported on [1,2] (normalized so that its integral is 1)
// together with its Fourier transform psi_hat(x) = int psi(t) e^{-2 pi i x t} dt,
// tabulated once on a fine grid via FFT and evaluated by cubic interpolation.
class TestFunction {
public:
    // Shared instance of the standard bump exp(-1/((t-1)(2-t))).
    static const TestFunction& standard_bump();

    double psi(double t) const;
    std::complex<double> psi_hat(double x) const;  // psi_hat(-x) = conj(psi_hat(x))
    double psi_hat_abs(double x) const;

    // Decay radius: smallest tabulated x0 with sup_{x >= x0} |psi_hat(x)| <= eps.
    // Throws TailBoundViolation if eps is below the tabulation noise floor.
    double lambda(double eps) const;

    double x_max() const { return x_max_; }
    double grid_step() const { return dx_; }

private:
    TestFunction();

    double norm_ = 1.0;                             // 1 / int of the raw bump
    double dx_ = 0.0;                               // grid spacing in x
    double x_max_ = 0.0;                            // last tabulated abscissa
    std::vector<std::complex<double>> grid_;        // psi_hat(k * dx), k >= 0
    std::vector<double> suffix_max_;                // sup of |psi_hat| beyond k * dx
};

}  // namespace divcor
