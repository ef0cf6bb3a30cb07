#include "tfa/frft.hpp"

#include <cmath>
#include <stdexcept>

#include "tfa/stft.hpp"

namespace tfa {

namespace {

constexpr double kExactTol = 1e-14;  // treat as an exact multiple of pi
constexpr double kSinTol = 1e-7;     // below this, csc theta is too ill-conditioned

GeneralizedGaussian parity(const GeneralizedGaussian& term) {
    return GeneralizedGaussian(term.amplitude, term.spread, -term.center[0],
                               -term.modulation[0]);
}

// Direct kernel action, valid away from multiples of pi.
GeneralizedGaussian frft_term_direct(const GeneralizedGaussian& term, double theta) {
    const double s = std::sin(theta);
    const double ct = std::cos(theta) / s;  // cot
    const double cs = 1.0 / s;              // csc

    const complexd a = term.spread;
    const double mu = term.center[0];
    const double nu = term.modulation[0];

    const complexd alpha_t = a - kI * ct;  // Re = Re(a) > 0
    const complexd beta0 = 2.0 * kPi * (a * mu + kI * nu);

    const complexd a_new = (1.0 - kI * a * ct) / alpha_t;
    if (!(a_new.real() > 0.0)) {
        throw std::runtime_error("frft: transformed spread left the admissible half-plane");
    }

    // Linear coefficient L u of the output exponent; decompose L/(2 pi) =
    // a_new mu_new + i nu_new into the real center and modulation.
    const complexd w = (-kI * cs * beta0 / alpha_t) / (2.0 * kPi);
    const double mu_new = w.real() / a_new.real();
    const double nu_new = w.imag() - a_new.imag() * mu_new;

    const complexd amplitude = term.amplitude * std::sqrt(1.0 - kI * ct) *
                               std::pow(alpha_t, -0.5) *
                               std::exp(beta0 * beta0 / (4.0 * kPi * alpha_t) -
                                        kPi * a * mu * mu + kPi * a_new * mu_new * mu_new);
    return GeneralizedGaussian(amplitude, a_new, mu_new, nu_new);
}

GeneralizedGaussian frft_term(const GeneralizedGaussian& term, double theta) {
    // Reduce to theta in [-pi, pi]; the kernel has period 2 pi up to the
    // branch conventions fixed here.
    const double tr = std::remainder(theta, 2.0 * kPi);
    if (std::abs(tr) < kExactTol) return term;
    if (std::abs(std::abs(tr) - kPi) < kExactTol) return parity(term);
    if (std::abs(std::sin(tr)) < kSinTol) {
        // Split off a quarter turn: both factors stay well conditioned.
        return frft_term_direct(frft_term_direct(term, 0.5 * kPi), tr - 0.5 * kPi);
    }
    return frft_term_direct(term, tr);
}

}  // namespace

Rotation::Rotation(double theta_) : theta(theta_) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    matrix[0][0] = c;
    matrix[0][1] = s;
    matrix[1][0] = -s;
    matrix[1][1] = c;
}

PhasePoint rotate(const PhasePoint& z, double theta) {
    if (z.dim() != 1) throw std::invalid_argument("rotate: only d = 1 is supported");
    const Rotation rot(theta);
    const double x = z.x[0];
    const double w = z.omega[0];
    return PhasePoint(rot.matrix[0][0] * x + rot.matrix[0][1] * w,
                      rot.matrix[1][0] * x + rot.matrix[1][1] * w);
}

GeneralizedGaussian frft(const GeneralizedGaussian& term, double theta) {
    if (term.dim() != 1) throw std::invalid_argument("frft: only d = 1 is supported");
    return frft_term(term, theta);
}

GaussianMixture frft(const GaussianMixture& f, double theta) {
    if (f.d != 1) throw std::invalid_argument("frft: only d = 1 is supported");
    GaussianMixture out(1);
    out.terms.reserve(f.terms.size());
    for (const auto& term : f.terms) out.terms.push_back(frft_term(term, theta));
    return out;
}

double verify_covariance(const GaussianMixture& f, double theta, const PhasePoint& z) {
    if (f.d != 1 || z.dim() != 1) {
        throw std::invalid_argument("verify_covariance: only d = 1 is supported");
    }
    const GeneralizedGaussian g = standard_window(1);
    const double lhs = std::abs(stft_closed_form(f, g, rotate(z, -theta)));
    const double rhs = std::abs(stft_closed_form(frft(f, theta), g, z));
    return std::abs(lhs - rhs);
}

}  // namespace tfa
