#pragma once

#include "tfa/gaussian.hpp"

namespace tfa {

// Bargmann transform Bf(z) = 2^{d/4} int f(t) e^{2 pi t.z - pi t.t - pi z.z/2} dt,
// entire in z (z.z is the bilinear square, not the Hermitian norm). Exact on
// the Gaussian class by completing the square per term.
complexd bargmann(const GaussianMixture& f, const ComplexPoint& z);
complexd bargmann(const GaussianMixture& f, complexd z);  // d = 1

// Phi f(z) = int e^{-pi (t-z).(t-z)} f(t) dt; satisfies
// Phi f(z) = 2^{-d/4} Bf(z) e^{-pi z.z/2} and
// |V_g f(x, -omega)| = e^{-pi |omega|^2} |Phi f(x + i omega)|.
complexd phi_transform(const GaussianMixture& f, const ComplexPoint& z);
complexd phi_transform(const GaussianMixture& f, complexd z);  // d = 1

// Residual | V_g f(x, -omega) - 2^{-d/4} e^{pi i x.omega} Bf(z) e^{-pi |z|^2/2} |
// of the STFT-Bargmann connection at z = x + i omega; zero in exact
// arithmetic for every mixture.
double verify_bargmann_relation(const GaussianMixture& f, const ComplexPoint& z);

struct FockNormResult {
    double value = 0.0;       // approximation of (int |Bf|^2 e^{-pi |z|^2} dA)^{1/2}
    double tail_bound = 0.0;  // certified bound on the squared mass outside the square
    bool warning = false;     // tail_bound exceeded warn_tol (truncation too small)
};

// Fock-space norm of Bf via a midpoint rule on [-r, r]^2 (d = 1); equals
// l2_norm(f) in exact arithmetic by unitarity of the transform.
FockNormResult fock_norm(const GaussianMixture& f, double truncation_radius = 6.0,
                         double grid_step = 0.02, double warn_tol = 1e-6);

struct BoundaryMaxReport {
    double interior_max = 0.0;  // max of |Bf| over a polar grid with r < R
    double boundary_max = 0.0;  // max of |Bf| over |z| = R, angle grid + refinement
};

// Maximum-modulus diagnostic for the entire function Bf on the closed disk
// |z| <= R (d = 1): the interior sample never exceeds the refined boundary
// maximum beyond grid tolerance.
BoundaryMaxReport boundary_max_diagnostic(const GaussianMixture& f, double R, int n_radial = 64,
                                          int n_angular = 256);

}  // namespace tfa
