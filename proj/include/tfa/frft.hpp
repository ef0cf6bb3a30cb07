#pragma once

#include "tfa/gaussian.hpp"

namespace tfa {

// Phase-plane rotation by theta acting on (x, omega):
//   [[cos theta, sin theta], [-sin theta, cos theta]],
// symplectic and orthogonal.
struct Rotation {
    double theta = 0.0;
    double matrix[2][2] = {{1.0, 0.0}, {0.0, 1.0}};

    explicit Rotation(double theta_);
};

// Apply the rotation matrix to z (d = 1); rotate(rotate(z, t), -t) == z.
PhasePoint rotate(const PhasePoint& z, double theta);

// Fractional Fourier transform of order theta (d = 1),
//   F_theta f(u) = sqrt(1 - i cot theta) *
//                  int exp(i pi cot theta (u^2 + t^2) - 2 pi i csc theta u t) f(t) dt,
// which maps the class to itself: the spread moves by the Moebius map
// a -> (1 - i a cot theta)/(a - i cot theta) (staying in Re > 0) and the
// prefactor's square roots take principal branches (the continuous-from-
// identity choice on each interval between multiples of pi). theta = pi/2 is
// the Fourier transform f^(omega) = int f(t) e^{-2 pi i t omega} dt; exact
// multiples of pi reduce to identity/parity, and angles within 1e-7 of them
// are evaluated as F_{pi/2} compositions to avoid the csc blow-up. The unit
// window is a fixed point: frft(g, theta) = g for every theta. On the
// time-frequency plane F_theta realizes rotate(., theta) of the argument of
// |V_g f|.
GaussianMixture frft(const GaussianMixture& f, double theta);
GeneralizedGaussian frft(const GeneralizedGaussian& term, double theta);

// Residual | |V_g f(rotate(z, -theta))| - |V_g (F_theta f)(z)| | of the
// rotation covariance of the transform magnitude (the rotated window equals
// the window up to a unimodular constant, so its magnitude profile is
// unchanged). Zero in exact arithmetic.
double verify_covariance(const GaussianMixture& f, double theta, const PhasePoint& z);

}  // namespace tfa
