#include "tfa/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tfa/envelope.hpp"
#include "tfa/quadrature.hpp"
#include "tfa/stft.hpp"

namespace tfa {

namespace {

// Shared per-term core: c * alpha^{-d/2} exp(sum_j b_j^2/(4 pi alpha) + gamma)
// with alpha = spread + 1 and b_j = 2 pi (spread mu_j + i nu_j + z_j).
complexd transform_term(const GeneralizedGaussian& term, const ComplexPoint& z,
                        complexd extra_gamma) {
    const complexd a = term.spread;
    const complexd alpha = a + 1.0;
    complexd b_sq_sum{0.0, 0.0};
    complexd gamma = extra_gamma;
    for (int j = 0; j < term.dim(); ++j) {
        const complexd b = 2.0 * kPi * (a * term.center[j] + kI * term.modulation[j] + z.z[j]);
        b_sq_sum += b * b;
        gamma -= kPi * a * term.center[j] * term.center[j];
    }
    return term.amplitude * gaussian_integral(alpha, b_sq_sum, gamma, term.dim());
}

void check_point_dim(const GaussianMixture& f, const ComplexPoint& z, const char* what) {
    if (z.dim() != f.d) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

complexd bargmann(const GaussianMixture& f, const ComplexPoint& z) {
    check_point_dim(f, z, "bargmann");
    const complexd half_z_sq = 0.5 * z.complex_square();
    complexd v{0.0, 0.0};
    for (const auto& term : f.terms) {
        v += transform_term(term, z, -kPi * half_z_sq);
    }
    return std::pow(2.0, 0.25 * f.d) * v;
}

complexd bargmann(const GaussianMixture& f, complexd z) { return bargmann(f, ComplexPoint(z)); }

complexd phi_transform(const GaussianMixture& f, const ComplexPoint& z) {
    check_point_dim(f, z, "phi_transform");
    const complexd z_sq = z.complex_square();
    complexd v{0.0, 0.0};
    for (const auto& term : f.terms) {
        v += transform_term(term, z, -kPi * z_sq);
    }
    return v;
}

complexd phi_transform(const GaussianMixture& f, complexd z) {
    return phi_transform(f, ComplexPoint(z));
}

double verify_bargmann_relation(const GaussianMixture& f, const ComplexPoint& z) {
    check_point_dim(f, z, "verify_bargmann_relation");
    const PhasePoint p = z.to_phase();
    PhasePoint neg_omega = p;
    for (double& w : neg_omega.omega) w = -w;

    const complexd lhs = stft_closed_form(f, standard_window(f.d), neg_omega);
    const complexd rhs = std::pow(2.0, -0.25 * f.d) *
                         std::exp(complexd(0.0, kPi * z.dot_x_omega())) * bargmann(f, z) *
                         std::exp(-kPi * 0.5 * z.hermitian_norm_sq());
    return std::abs(lhs - rhs);
}

FockNormResult fock_norm(const GaussianMixture& f, double truncation_radius, double grid_step,
                         double warn_tol) {
    if (f.d != 1) throw std::invalid_argument("fock_norm: only d = 1 is supported");
    if (!(truncation_radius > 0.0) || !(grid_step > 0.0)) {
        throw std::invalid_argument("fock_norm: radius and step must be positive");
    }

    FockNormResult out;
    if (f.is_zero()) return out;

    const double r = truncation_radius;
    const int n = std::max(1, static_cast<int>(std::lround(2.0 * r / grid_step)));
    const double h = 2.0 * r / n;

    // Weighted magnitude m(z) = |Bf(z)| e^{-pi |z|^2 / 2} computed as a single
    // product so the Gaussian weight tames the transform's growth before
    // squaring.
    long double sum = 0.0L;
    for (int i = 0; i < n; ++i) {
        const double x = -r + (i + 0.5) * h;
        for (int j = 0; j < n; ++j) {
            const double y = -r + (j + 0.5) * h;
            const double m =
                std::abs(bargmann(f, complexd(x, y))) * std::exp(-0.5 * kPi * (x * x + y * y));
            sum += static_cast<long double>(m) * m;
        }
    }
    out.value = std::sqrt(static_cast<double>(sum) * h * h);
    out.tail_bound = fock_tail_bound(stft_envelopes(f), r);
    out.warning = !(out.tail_bound <= warn_tol);
    return out;
}

BoundaryMaxReport boundary_max_diagnostic(const GaussianMixture& f, double R, int n_radial,
                                          int n_angular) {
    if (f.d != 1) throw std::invalid_argument("boundary_max_diagnostic: only d = 1 is supported");
    if (!(R > 0.0)) throw std::invalid_argument("boundary_max_diagnostic: R must be positive");
    if (n_radial < 1 || n_angular < 4) {
        throw std::invalid_argument("boundary_max_diagnostic: grid too small");
    }

    BoundaryMaxReport rep;

    for (int i = 0; i < n_radial; ++i) {
        const double rad = R * static_cast<double>(i) / n_radial;  // strictly inside
        const int slots = (i == 0) ? 1 : n_angular;
        for (int j = 0; j < slots; ++j) {
            const double th = 2.0 * kPi * j / n_angular;
            const double v = std::abs(bargmann(f, std::polar(rad, th)));
            rep.interior_max = std::max(rep.interior_max, v);
        }
    }

    // Boundary: angle grid, then golden refinement around every local grid
    // maximum so a discrete boundary scan cannot undershoot the interior.
    auto boundary = [&](double th) { return std::abs(bargmann(f, std::polar(R, th))); };
    std::vector<double> vals(n_angular);
    for (int j = 0; j < n_angular; ++j) vals[j] = boundary(2.0 * kPi * j / n_angular);
    const double step = 2.0 * kPi / n_angular;
    for (int j = 0; j < n_angular; ++j) {
        const double prev = vals[(j + n_angular - 1) % n_angular];
        const double next = vals[(j + 1) % n_angular];
        if (vals[j] >= prev && vals[j] >= next) {
            const double th = step * j;
            const double peak = golden_maximize(boundary, th - step, th + step, 1e-12);
            rep.boundary_max = std::max(rep.boundary_max, boundary(peak));
        }
        rep.boundary_max = std::max(rep.boundary_max, vals[j]);
    }
    return rep;
}

}  // namespace tfa
