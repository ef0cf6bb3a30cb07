#pragma once

#include <complex>
#include <functional>

#include "tfa/types.hpp"

namespace tfa {

struct QuadratureResult {
    complexd value{0.0, 0.0};
    double error_estimate = 0.0;
    long long evaluations = 0;
    // False means the evaluation budget ran out before error_estimate <= tol;
    // value still carries the best estimate and error_estimate its bound.
    bool converged = false;
};

using Integrand1D = std::function<complexd(double)>;

// Argmax of a continuous unimodal function on [lo, hi] by golden-section
// search, to within tol in the argument. With several local maxima it returns
// one of them, so callers seed it from a grid scan.
double golden_maximize(const std::function<double(double)>& f, double lo, double hi, double tol);

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
// omega_max is the largest modulation frequency of the integrand (cycles per
// unit); the initial panel width is kept below 1/(4 omega_max).
QuadratureResult integrate_interval(const Integrand1D& f, double a, double b, double tol,
                                    double omega_max = 0.0, long long max_evaluations = 1'000'000);

// int_R f(t) dt for an integrand bounded by amplitude * exp(-pi ((t-center)/scale)^2).
// The line is truncated to [center - W scale, center + W scale] with W chosen
// so the Gaussian tail bound amplitude * scale * erfc(sqrt(pi) W) stays below
// tol/10; the truncated integral then goes through integrate_interval.
QuadratureResult integrate(const Integrand1D& f, double center, double scale, double tol,
                           double omega_max = 0.0, double amplitude = 1.0,
                           long long max_evaluations = 1'000'000);

// log|F| model exp(log_peak - pi * decay_rate * (t - peak_location)^2),
// exact for products of class terms (log-magnitude is a concave quadratic).
struct GaussianEnvelope1D {
    double peak_location = 0.0;
    double log_peak = 0.0;
    double decay_rate = 1.0;
};

// Fit the quadratic log-magnitude model by golden-section argmax over
// [lo, hi] followed by an exact second difference.
GaussianEnvelope1D fit_gaussian_envelope(const std::function<double(double)>& log_abs_f,
                                         double lo, double hi);

// Axis description for separable d-dimensional integrands.
struct AxisIntegrand {
    Integrand1D f;
    double center = 0.0;
    double scale = 1.0;
    double omega_max = 0.0;
    double amplitude = 1.0;
};

// Tensor-product integral of a separable integrand prod_j f_j(t_j); the value
// is the product of the per-axis integrals and the error estimate combines
// first-order per-axis contributions. d = 1 reduces exactly to integrate().
QuadratureResult integrate_product(const std::vector<AxisIntegrand>& axes, double tol,
                                   long long max_evaluations = 1'000'000);

// Iterated integral over R^2 of a non-separable integrand. Supported only for
// d = 2; larger dimensions are rejected.
QuadratureResult integrate_2d(const std::function<complexd(double, double)>& f,
                              const AxisIntegrand& x_axis, const AxisIntegrand& y_axis,
                              double tol, long long max_evaluations = 4'000'000);

}  // namespace tfa
