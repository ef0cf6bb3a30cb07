#pragma once

#include <vector>

#include "tfa/gaussian.hpp"

namespace tfa {

// Exact magnitude profile of one term's transform against the unit window
// g(t) = exp(-pi t^2) in dimension 1:
//
//   |V_g phi(x, omega)| = amplitude * exp(-Q(x - x0, omega - omega0)),
//   Q(u, v) = cxx u^2 + 2 cxw u v + cww v^2,
//
// where the form Q is positive definite (cxx*cww - cxw^2 > 0 whenever
// Re(spread) > 0) and rho is its smallest eigenvalue, so
// |V_g phi(z)| <= amplitude * exp(-rho |z - z0|^2). For a single term this is
// an equality profile, not just a bound; for a mixture the sum of term
// profiles dominates the magnitude by the triangle inequality.
struct TermEnvelope {
    double amplitude = 0.0;
    double x0 = 0.0;
    double omega0 = 0.0;
    double cxx = 0.0;
    double cxw = 0.0;
    double cww = 0.0;
    double rho = 0.0;
    double center_radius = 0.0;  // sqrt(x0^2 + omega0^2)

    double log_value(double x, double omega) const;
    double value(double x, double omega) const;
};

// Envelope of a single d = 1 term (throws for other dimensions).
TermEnvelope stft_envelope(const GeneralizedGaussian& term);

// Term-wise envelopes of a d = 1 mixture.
std::vector<TermEnvelope> stft_envelopes(const GaussianMixture& f);

// Pointwise upper bound sum_k |V_g phi_k(x, omega)| for |V_g f(x, omega)|.
double envelope_sum(const std::vector<TermEnvelope>& envelopes, double x, double omega);

// Smallest X >= 0 with envelope_sum(x, omega) <= threshold for all |x| >= X
// at the given fixed omega. Used to truncate line searches along the time
// axis with a certified discarded mass.
double x_truncation(const std::vector<TermEnvelope>& envelopes, double omega, double threshold);

// Smallest R >= 0 with envelope_sum <= threshold everywhere outside the
// closed disk of radius R about the origin of the time-frequency plane.
double radius_bound(const std::vector<TermEnvelope>& envelopes, double threshold);

// Upper bound for the mass int_{max(|x|,|omega|) > half_width} m(z)^2 dz of
// the weighted transform magnitude m(z) = 2^{1/4} |V_g f(x, -omega)| outside
// the square of the given half width. Returns +infinity when the square is
// too small for the bound to apply (half_width below a term's center radius).
double fock_tail_bound(const std::vector<TermEnvelope>& envelopes, double half_width);

}  // namespace tfa
