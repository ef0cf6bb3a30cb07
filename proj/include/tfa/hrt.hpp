#pragma once

#include <string>
#include <vector>

#include "tfa/gaussian.hpp"
#include "tfa/uncertainty.hpp"

namespace tfa {

// A finite system of time-frequency shifts {pi(z_k) g} of one window.
struct ShiftSystem {
    GeneralizedGaussian window;
    std::vector<PhasePoint> points;
    double min_pairwise_distance = 0.0;

    // Validates matching dimensions and pairwise-distinct points.
    ShiftSystem(GeneralizedGaussian g, std::vector<PhasePoint> pts);

    int size() const { return static_cast<int>(points.size()); }
};

// Gram matrix G[j][k] = <pi(z_j) g, pi(z_k) g> in closed form; Hermitian with
// constant diagonal |g|^2, and |G[j][k]| = |V_g g(z_j - z_k)|.
std::vector<std::vector<complexd>> gram_matrix(const ShiftSystem& system);

struct GramCertificate {
    std::vector<std::vector<complexd>> gram;
    double min_eigenvalue = 0.0;
    bool certified_independent = false;
    double tolerance = 0.0;
};

// Smallest eigenvalue of the Gram matrix; the system is certified linearly
// independent when it exceeds tolerance * trace / size. A failed certificate
// is inconclusive (numerical rank deficiency never proves dependence).
GramCertificate certify_independence(const ShiftSystem& system, double tolerance = 1e-10);

enum class FatTailRegion { exterior, sphere, cylinder };

struct FatTailReport {
    double R = 0.0;
    double N = 0.0;
    bool holds = false;
    PhasePoint worst_point{0.0, 0.0};
    double worst_ratio = 0.0;       // max over the region of |V_g f(z)| N / |<f, g>|
    std::string comparison;         // "strict" (open exterior) or "boundary" (<=)
    double scan_radius_max = 0.0;   // exterior only: certified outer scan radius
};

// Checks the concentration condition |V_g f(z)| < |<f,g>|/N over the chosen
// region (window g(t) = e^{-pi t^2}, d = 1):
//   - sphere / cylinder: the boundary geometry |z| = R or |omega| = R, sup by
//     the corresponding search, non-strict comparison worst_ratio <= 1 + 1e-12;
//   - exterior: the open region |z| > R, scanned over the closed annulus
//     [R, R_out] where R_out certifies envelope_sum < tol |<f,g>|/N beyond it,
//     strict comparison worst_ratio < 1. Scanning the closure is conservative:
//     a condition attained exactly on |z| = R reports holds = false even
//     though the open region satisfies it.
FatTailReport fat_tail_scan(const GaussianMixture& f, double R, double N, FatTailRegion region,
                            double tol = 1e-6);

}  // namespace tfa
