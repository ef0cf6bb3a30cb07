#pragma once

#include <string>
#include <vector>

#include "tfa/gaussian.hpp"
#include "tfa/quadrature.hpp"

namespace tfa {

// V_g f(x, omega) = int e^{-2 pi i t.omega} f(t) conj(g(t - x)) dt
//                 = <f, pi(z) g>,  z = (x, omega).
// Exact on the Gaussian class by term-wise Gaussian integration; any d.
complexd stft_closed_form(const GaussianMixture& f, const GeneralizedGaussian& g,
                          const PhasePoint& z);

// The closed expression for V_g f_lambda with the unit window g:
//   (1+lambda^2)^{-d/2} e^{-2 pi i x.omega/(1+lambda^2)}
//     e^{-pi lambda^2 |x|^2/(1+lambda^2)} e^{-pi |omega|^2/(1+lambda^2)}.
// Agrees with stft_closed_form(dilated_gaussian(lambda), standard_window, z).
complexd dilated_gaussian_stft(double lambda, const PhasePoint& z);

// Repeated evaluation of V_g f on the plane for fixed f and window (d = 1):
// each (f-term, window) pair contributes P * exp(quadratic in (x, omega)),
// so construction precomputes the polynomial coefficients and a call costs
// one complex exponential per term.
class StftEvaluator {
  public:
    StftEvaluator(const GaussianMixture& f, const GeneralizedGaussian& window);

    complexd operator()(double x, double omega) const;
    double magnitude(double x, double omega) const;

    // Largest per-term phase rate (cycles per unit x) over the box
    // |x| <= x_abs, |omega| <= omega_abs; the magnitude's interference
    // fringes beat at most twice as fast, which sizes scan grids.
    double max_frequency_x(double x_abs, double omega_abs) const;

    // Same bound in the omega direction (cycles per unit omega).
    double max_frequency_omega(double x_abs, double omega_abs) const;

    // Largest per-term phase rate in cycles per radian along the circle
    // |z| = R.
    double max_frequency_angle(double R) const;

  private:
    struct TermPoly {
        complexd prefactor;                       // c conj(c_w) alpha^{-1/2}
        complexd e00, e10, e01, e20, e11, e02;    // exponent coefficients
    };
    std::vector<TermPoly> terms_;
};

// Numerical STFT at one point: adaptive quadrature of the defining integral
// for mixtures, a dt-weighted Riemann sum for sampled signals (d = 1). The
// mixture path declares the integrand's oscillation rate to the quadrature
// guard; the sampled path ignores tol (fixed discretization).
QuadratureResult stft_quadrature(const GaussianMixture& f, const GeneralizedGaussian& g,
                                 const PhasePoint& z, double tol);
complexd stft_quadrature(const SampledSignal& f, const GeneralizedGaussian& g,
                         const PhasePoint& z, double tol);

// Spectrogram grid of a sampled signal against an analytically evaluated
// window: for each x, the windowed samples are zero-padded to M >= 4n (power
// of two) and transformed, so admissible frequencies are k/(M dt).
struct STFTGrid {
    std::vector<double> x_axis;
    std::vector<double> omega_axis;
    std::vector<complexd> values;  // row-major: values[ix * omega_axis.size() + iw]

    const complexd& at(std::size_t ix, std::size_t iw) const {
        return values[ix * omega_axis.size() + iw];
    }
};

STFTGrid stft_grid(const SampledSignal& f, const GeneralizedGaussian& g,
                   const std::vector<double>& x_axis, const std::vector<double>& omega_axis);

// dx * domega * sum |values|^2; approaches (|f| |g|)^2 as the grid covers the
// plane (discrete Moyal identity). Needs at least two entries per axis.
double moyal_sum(const STFTGrid& grid);

// CSV export with header `x,omega,re,im,abs`, row-major over x then omega.
std::string stft_grid_csv(const STFTGrid& grid);

// Radix-2 in-place FFT of a power-of-two-length vector,
// X[k] = sum_n x[n] e^{-2 pi i k n / N}.
void fft_pow2(std::vector<complexd>& data);

}  // namespace tfa
