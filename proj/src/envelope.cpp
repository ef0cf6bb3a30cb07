#include "tfa/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tfa {

double TermEnvelope::log_value(double x, double omega) const {
    const double u = x - x0;
    const double v = omega - omega0;
    return std::log(amplitude) - (cxx * u * u + 2.0 * cxw * u * v + cww * v * v);
}

double TermEnvelope::value(double x, double omega) const {
    const double u = x - x0;
    const double v = omega - omega0;
    return amplitude * std::exp(-(cxx * u * u + 2.0 * cxw * u * v + cww * v * v));
}

TermEnvelope stft_envelope(const GeneralizedGaussian& term) {
    if (term.dim() != 1) {
        throw std::invalid_argument("stft_envelope: only d = 1 is supported");
    }

    // Completing the square in V_g phi(x, omega) = int phi(t) e^{-2 pi i t
    // omega} e^{-pi (t-x)^2} dt shows that log|V_g phi| is an exact real
    // quadratic in (x, omega) with Hessian -2C,
    //   C = pi [[1 - Re b, -Im b], [-Im b, Re b]],  b = 1/(1 + a),
    // peaking exactly at (x0, omega0) = (center, modulation). det C =
    // pi^2 Re(a)/|1+a|^2 > 0, so C is positive definite.
    const complexd beta = 1.0 / (1.0 + term.spread);
    TermEnvelope env;
    env.x0 = term.center[0];
    env.omega0 = term.modulation[0];
    env.cxx = kPi * (1.0 - beta.real());
    env.cxw = -kPi * beta.imag();
    env.cww = kPi * beta.real();

    const double tr = env.cxx + env.cww;
    const double det = env.cxx * env.cww - env.cxw * env.cxw;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    env.rho = 0.5 * (tr - disc);

    const GaussianMixture phi = to_mixture(term);
    const GaussianMixture shifted_window =
        to_mixture(time_frequency_shift(standard_window(1), PhasePoint(env.x0, env.omega0)));
    env.amplitude = std::abs(inner_product(phi, shifted_window));
    env.center_radius = std::sqrt(env.x0 * env.x0 + env.omega0 * env.omega0);
    return env;
}

std::vector<TermEnvelope> stft_envelopes(const GaussianMixture& f) {
    if (f.d != 1) throw std::invalid_argument("stft_envelopes: only d = 1 is supported");
    std::vector<TermEnvelope> envs;
    envs.reserve(f.terms.size());
    for (const auto& term : f.terms) envs.push_back(stft_envelope(term));
    return envs;
}

double envelope_sum(const std::vector<TermEnvelope>& envelopes, double x, double omega) {
    double s = 0.0;
    for (const auto& e : envelopes) s += e.value(x, omega);
    return s;
}

double x_truncation(const std::vector<TermEnvelope>& envelopes, double omega, double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("x_truncation: threshold must be positive");
    if (envelopes.empty()) return 0.0;
    const double per_term = threshold / static_cast<double>(envelopes.size());

    double X = 0.0;
    for (const auto& e : envelopes) {
        // At fixed omega the term profile is a 1-D Gaussian in x with vertex
        // x* and reduced peak amplitude * exp(-q_min).
        const double v = omega - e.omega0;
        const double x_star = e.x0 - e.cxw * v / e.cxx;
        const double q_min = (e.cww - e.cxw * e.cxw / e.cxx) * v * v;
        const double log_peak = std::log(e.amplitude) - q_min;
        const double need = log_peak - std::log(per_term);
        if (need <= 0.0) continue;  // already below threshold at its own peak
        X = std::max(X, std::abs(x_star) + std::sqrt(need / e.cxx));
    }
    return X;
}

double radius_bound(const std::vector<TermEnvelope>& envelopes, double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("radius_bound: threshold must be positive");
    if (envelopes.empty()) return 0.0;
    const double per_term = threshold / static_cast<double>(envelopes.size());

    double R = 0.0;
    for (const auto& e : envelopes) {
        // |V| <= A exp(-rho (|z| - r0)^2) outside |z| = r0.
        const double need = std::log(e.amplitude) - std::log(per_term);
        if (need <= 0.0) continue;
        R = std::max(R, e.center_radius + std::sqrt(need / e.rho));
    }
    return R;
}

double fock_tail_bound(const std::vector<TermEnvelope>& envelopes, double half_width) {
    if (!(half_width > 0.0)) {
        throw std::invalid_argument("fock_tail_bound: half_width must be positive");
    }
    if (envelopes.empty()) return 0.0;
    const double K = static_cast<double>(envelopes.size());

    // m(z)^2 <= sqrt(2) K sum_k A_k^2 exp(-2 rho_k (|z| - r_k)^2) by
    // Cauchy-Schwarz on the term profiles (the omega sign flip preserves
    // |z - z0_k| geometry after passing to the radial bound). Integrating the
    // radial bound over |z| > half_width in polar coordinates:
    //   2 pi [ e^{-beta (H - r)^2} / (2 beta) + r sqrt(pi/beta)/2 erfc(sqrt(beta)(H - r)) ].
    double tail = 0.0;
    for (const auto& e : envelopes) {
        if (half_width <= e.center_radius) return std::numeric_limits<double>::infinity();
        const double beta = 2.0 * e.rho;
        const double gap = half_width - e.center_radius;
        const double radial = std::exp(-beta * gap * gap) / (2.0 * beta) +
                              e.center_radius * 0.5 * std::sqrt(kPi / beta) *
                                  std::erfc(std::sqrt(beta) * gap);
        tail += e.amplitude * e.amplitude * 2.0 * kPi * radial;
    }
    return std::sqrt(2.0) * K * tail;
}

}  // namespace tfa
