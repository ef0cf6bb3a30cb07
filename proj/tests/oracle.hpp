// Independent numerical oracles for the test suite.
//
// Everything here recomputes transforms by direct quadrature of literally
// written integrands (raw std::exp of the defining exponents), never through
// the library's closed-form algebra, so agreement is meaningful evidence.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "tfa/gaussian.hpp"
#include "tfa/quadrature.hpp"
#include "tfa/types.hpp"

namespace oracle {

using tfa::complexd;
using tfa::kI;
using tfa::kPi;

// One summand of a mixture, evaluated literally at a complex argument.
inline complexd term_at(const tfa::GeneralizedGaussian& t, complexd z) {
    const complexd u = z - t.center[0];
    return t.amplitude * std::exp(-kPi * t.spread * u * u + 2.0 * kPi * kI * t.modulation[0] * z);
}

// Complex conjugate of a window term, continued analytically off the real line.
inline complexd conj_term_at(const tfa::GeneralizedGaussian& t, complexd z) {
    const complexd u = z - t.center[0];
    return std::conj(t.amplitude) *
           std::exp(-kPi * std::conj(t.spread) * u * u - 2.0 * kPi * kI * t.modulation[0] * z);
}

// Direct short-time Fourier transform of a single term against a single
// window term, by quadrature along a shifted contour Im t = y*.
//
// The integrand extends to an entire function with Gaussian decay in every
// horizontal strip, so the contour shift leaves the integral unchanged.  On
// the line through the (complex) critical point the integrand is a pure
// Gaussian bump whose peak matches the answer's modulus, which keeps the
// quadrature's relative error small even when the transform value is tiny.
inline complexd stft_term_contour(const tfa::GeneralizedGaussian& f,
                                  const tfa::GeneralizedGaussian& g, double x, double omega) {
    const complexd a1 = f.spread, ag = std::conj(g.spread);
    const double mu1 = f.center[0], mug = g.center[0];
    const double nu1 = f.modulation[0], nug = g.modulation[0];

    const complexd alpha = a1 + ag;
    const complexd beta =
        2.0 * kPi * (a1 * mu1 + ag * (x + mug) + kI * (nu1 - nug - omega));
    const complexd m = beta / (2.0 * kPi * alpha);  // critical point of the exponent

    const double y_star = m.imag();
    const double center = m.real();
    const double sigma = 1.0 / std::sqrt(alpha.real());
    const double half_width = 12.0 * sigma;

    auto integrand_on = [&](double y) {
        return [&, y](double s) -> complexd {
            const complexd t(s, y);
            return term_at(f, t) * conj_term_at(g, t - x) * std::exp(-2.0 * kPi * kI * omega * t);
        };
    };

    // Peak modulus on the optimal contour, used only to scale tolerances.
    const double peak = std::abs(integrand_on(y_star)(center));
    const double tol = std::max(peak * sigma * 1e-15, 1e-300);
    const double omega_max = std::abs(alpha.imag()) * half_width + 1.0;

    const tfa::QuadratureResult main = tfa::integrate_interval(
        integrand_on(y_star), center - half_width, center + half_width, tol, omega_max);
    if (!main.converged) throw std::runtime_error("stft oracle: quadrature did not converge");

    // Guard against a mislocated window: the truncated tails must be dead.
    const double edge = std::max(std::abs(integrand_on(y_star)(center - half_width)),
                                 std::abs(integrand_on(y_star)(center + half_width)));
    if (edge > peak * 1e-30 + 1e-300) {
        throw std::runtime_error("stft oracle: integrand not negligible at truncation");
    }

    // Independence check: a second contour must reproduce the same value.
    const double y2 = y_star + 0.25 * sigma;
    const tfa::QuadratureResult alt = tfa::integrate_interval(
        integrand_on(y2), center - half_width, center + half_width, tol * 100.0,
        omega_max + 0.5 * sigma * std::abs(alpha.real()));
    if (std::abs(main.value - alt.value) > 1e-10 * peak * sigma + 1e-250) {
        throw std::runtime_error("stft oracle: contour invariance check failed");
    }
    return main.value;
}

// Direct STFT of a mixture: per-term contour integrals, summed.
inline complexd stft(const tfa::GaussianMixture& f, const tfa::GeneralizedGaussian& g, double x,
                     double omega) {
    if (f.d != 1) throw std::invalid_argument("oracle stft: d = 1 only");
    complexd total = 0.0;
    for (const auto& term : f.terms) total += stft_term_contour(term, g, x, omega);
    return total;
}

// Direct Bargmann transform on the real line (adequate for moderate |z|).
inline complexd bargmann(const tfa::GaussianMixture& f, complexd z, double tol = 1e-13) {
    if (f.d != 1) throw std::invalid_argument("oracle bargmann: d = 1 only");
    complexd total = 0.0;
    for (const auto& term : f.terms) {
        auto integrand = [&](double t) -> complexd {
            return term_at(term, t) *
                   std::exp(2.0 * kPi * t * z - kPi * t * t - 0.5 * kPi * z * z);
        };
        // The t-exponent has real part -pi(Re a + 1)t^2 + 2pi(Re a mu + Re z)t + ...;
        // centre and width follow from that quadratic.
        const double p = term.spread.real() + 1.0;
        const double center = (term.spread.real() * term.center[0] + z.real()) / p;
        const double sigma = 1.0 / std::sqrt(p);
        const double half_width = 12.0 * sigma;
        const double peak = std::abs(integrand(center));
        const double omega_max = std::abs(term.spread.imag()) * half_width +
                                 std::abs(z.imag()) + std::abs(term.modulation[0]) + 1.0;
        const tfa::QuadratureResult r =
            tfa::integrate_interval(integrand, center - half_width, center + half_width,
                                    std::max(peak * sigma * tol, 1e-300), omega_max);
        if (!r.converged) throw std::runtime_error("bargmann oracle: quadrature did not converge");
        total += r.value;
    }
    return std::pow(2.0, 0.25) * total;
}

// Direct fractional Fourier transform at angle theta, evaluated at u.
// Valid away from multiples of pi (the kernel degenerates there).
inline complexd frft_point(const tfa::GaussianMixture& f, double theta, double u,
                           double tol = 1e-12) {
    if (f.d != 1) throw std::invalid_argument("oracle frft: d = 1 only");
    const double st = std::sin(theta);
    if (std::abs(st) < 1e-3) throw std::invalid_argument("oracle frft: theta too close to 0 mod pi");
    const double ct = std::cos(theta) / st;   // cot(theta)
    const double cs = 1.0 / st;               // csc(theta)
    const complexd prefactor = std::sqrt(complexd(1.0, -ct));
    complexd total = 0.0;
    for (const auto& term : f.terms) {
        auto integrand = [&](double t) -> complexd {
            return term_at(term, t) *
                   std::exp(kI * kPi * ct * (u * u + t * t) - 2.0 * kPi * kI * cs * u * t);
        };
        const double p = term.spread.real();
        const double center = term.center[0];
        const double sigma = 1.0 / std::sqrt(p);
        const double half_width = 14.0 * sigma;
        const double peak = std::abs(integrand(center));
        const double t_max = std::abs(center) + half_width;
        const double omega_max = std::abs(term.spread.imag()) * half_width +
                                 std::abs(ct) * t_max + std::abs(cs * u) +
                                 std::abs(term.modulation[0]) + 1.0;
        const tfa::QuadratureResult r =
            tfa::integrate_interval(integrand, center - half_width, center + half_width,
                                    std::max(peak * sigma * tol, 1e-300), omega_max);
        if (!r.converged) throw std::runtime_error("frft oracle: quadrature did not converge");
        total += r.value;
    }
    return prefactor * total;
}

// Squared L2 norm by direct quadrature of |f|^2.
inline double l2_norm_sq(const tfa::GaussianMixture& f, double tol = 1e-12) {
    if (f.d != 1) throw std::invalid_argument("oracle l2: d = 1 only");
    double lo = 0.0, hi = 0.0, amp = 0.0;
    for (const auto& term : f.terms) {
        const double sigma = 1.0 / std::sqrt(term.spread.real());
        lo = std::min(lo, term.center[0] - 14.0 * sigma);
        hi = std::max(hi, term.center[0] + 14.0 * sigma);
        amp += std::abs(term.amplitude);
    }
    if (f.terms.empty()) return 0.0;
    double omega_max = 0.0;
    for (const auto& term : f.terms) {
        omega_max = std::max(omega_max, std::abs(term.modulation[0]) +
                                            std::abs(term.spread.imag()) *
                                                (std::abs(term.center[0]) + std::max(-lo, hi)));
    }
    auto integrand = [&](double t) -> complexd {
        const complexd v = tfa::evaluate1(f, t);
        return std::norm(v);
    };
    const tfa::QuadratureResult r = tfa::integrate_interval(
        integrand, lo, hi, std::max(amp * amp * tol, 1e-300), 2.0 * omega_max + 1.0);
    if (!r.converged) throw std::runtime_error("l2 oracle: quadrature did not converge");
    return r.value.real();
}

// --- deterministic random generators ---------------------------------------

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
};

// Random mixture with up to max_terms summands; spreads are lambda^2 for
// lambda in [lambda_lo, lambda_hi], with bounded chirp, shifts, modulations.
inline tfa::GaussianMixture random_mixture(Rng& rng, int max_terms, double lambda_lo = 0.2,
                                           double lambda_hi = 2.0, double chirp_max = 0.5) {
    const int n = rng.integer(1, max_terms);
    std::vector<tfa::GeneralizedGaussian> terms;
    terms.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double lambda = rng.uniform(lambda_lo, lambda_hi);
        const complexd a(lambda * lambda, rng.uniform(-chirp_max, chirp_max));
        const complexd c = std::polar(rng.uniform(0.3, 2.0), rng.uniform(0.0, 2.0 * kPi));
        const double mu = rng.uniform(-1.5, 1.5);
        const double nu = rng.uniform(-1.5, 1.5);
        terms.emplace_back(c, a, std::vector<double>{mu}, std::vector<double>{nu});
    }
    return tfa::GaussianMixture{1, std::move(terms)};
}

}  // namespace oracle
