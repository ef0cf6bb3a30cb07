#include "tfa/hrt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "tfa/envelope.hpp"
#include "tfa/quadrature.hpp"

namespace tfa {

ShiftSystem::ShiftSystem(GeneralizedGaussian g, std::vector<PhasePoint> pts)
    : window(std::move(g)), points(std::move(pts)) {
    if (points.empty()) throw std::invalid_argument("ShiftSystem: no points");
    min_pairwise_distance = std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
        p.validate();
        if (p.dim() != window.dim()) {
            throw std::invalid_argument("ShiftSystem: point/window dimension mismatch");
        }
    }
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t k = j + 1; k < points.size(); ++k) {
            const double dist = (points[j] - points[k]).norm();
            if (dist == 0.0) {
                throw std::invalid_argument("ShiftSystem: duplicate points at index " +
                                            std::to_string(j) + " and " + std::to_string(k));
            }
            min_pairwise_distance = std::min(min_pairwise_distance, dist);
        }
    }
    if (points.size() == 1) min_pairwise_distance = 0.0;  // vacuous for a single point
}

std::vector<std::vector<complexd>> gram_matrix(const ShiftSystem& system) {
    const int n = system.size();
    std::vector<GaussianMixture> shifted;
    shifted.reserve(n);
    for (const auto& z : system.points) {
        shifted.push_back(to_mixture(time_frequency_shift(system.window, z)));
    }

    std::vector<std::vector<complexd>> gram(n, std::vector<complexd>(n));
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            const complexd v = inner_product(shifted[j], shifted[k]);
            gram[j][k] = v;
            gram[k][j] = std::conj(v);  // exactly Hermitian by construction
        }
    }
    return gram;
}

GramCertificate certify_independence(const ShiftSystem& system, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("certify_independence: tolerance must be positive");
    }
    GramCertificate cert;
    cert.gram = gram_matrix(system);
    cert.tolerance = tolerance;

    const int n = system.size();
    Eigen::MatrixXcd m(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) m(j, k) = cert.gram[j][k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("certify_independence: eigenvalue solve failed");
    }
    cert.min_eigenvalue = solver.eigenvalues().minCoeff();

    double trace = 0.0;
    for (int j = 0; j < n; ++j) trace += cert.gram[j][j].real();
    cert.certified_independent = cert.min_eigenvalue > tolerance * trace / n;
    return cert;
}

namespace {

struct AngularBest {
    double value = 0.0;
    double phi = 0.0;
};

// sup of |V| over the circle of radius r: oscillation-aware angle grid,
// every circular local maximum refined by golden section.
AngularBest angular_sup(const StftEvaluator& eval, double r, double w_min) {
    auto h = [&](double phi) { return eval.magnitude(r * std::cos(phi), r * std::sin(phi)); };
    const double fringe = eval.max_frequency_angle(r);
    const double step_phi = std::min(w_min / (4.0 * std::max(r, 1e-12)),
                                     1.0 / (8.0 * std::max(fringe, 1e-12)));
    int n = static_cast<int>(std::ceil(2.0 * kPi / step_phi));
    n = std::clamp(n, 64, 8192);
    const double dphi = 2.0 * kPi / n;

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = h(dphi * i);

    AngularBest best;
    for (int i = 0; i < n; ++i) {
        if (vals[i] > best.value) {
            best.value = vals[i];
            best.phi = dphi * i;
        }
        const double prev = vals[(i + n - 1) % n];
        const double next = vals[(i + 1) % n];
        if (vals[i] >= prev && vals[i] >= next) {
            const double phi0 = dphi * i;
            const double phi = golden_maximize(h, phi0 - dphi, phi0 + dphi, 1e-13);
            const double v = h(phi);
            if (v > best.value) {
                best.value = v;
                best.phi = phi;
            }
        }
    }
    return best;
}

}  // namespace

FatTailReport fat_tail_scan(const GaussianMixture& f, double R, double N, FatTailRegion region,
                            double tol) {
    if (f.d != 1) throw std::invalid_argument("fat_tail_scan: only d = 1 is supported");
    if (f.is_zero()) throw std::invalid_argument("fat_tail_scan: zero mixture");
    if (!(R > 0.0)) throw std::invalid_argument("fat_tail_scan: R must be positive");
    if (!(N > 0.0)) throw std::invalid_argument("fat_tail_scan: N must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("fat_tail_scan: tol must be positive");

    const double ip = std::abs(inner_product(f, to_mixture(standard_window(1))));
    const double target = ip / N;

    FatTailReport rep;
    rep.R = R;
    rep.N = N;

    if (region == FatTailRegion::sphere || region == FatTailRegion::cylinder) {
        const SupReport sup = (region == FatTailRegion::sphere) ? sphere_sup(f, R, 1e-12)
                                                                : cylinder_sup(f, R, 1e-12);
        rep.worst_ratio = sup.sup_value / target;
        rep.worst_point = sup.argmax;
        rep.comparison = "boundary";
        rep.holds = rep.worst_ratio <= 1.0 + 1e-12;
        return rep;
    }

    // Open exterior |z| > R, scanned over the closed annulus [R, R_out]:
    // beyond R_out the envelope sum is certified below tol * target, so the
    // strict condition holds there automatically whenever tol < 1.
    const std::vector<TermEnvelope> envelopes = stft_envelopes(f);
    const StftEvaluator eval(f, standard_window(1));
    const double w_min = [&] {
        double w = std::numeric_limits<double>::infinity();
        for (const auto& e : envelopes) {
            const double tr = e.cxx + e.cww;
            const double det = e.cxx * e.cww - e.cxw * e.cxw;
            w = std::min(w, 1.0 / std::sqrt(0.5 * (tr + std::sqrt(tr * tr - 4.0 * det))));
        }
        return w;
    }();

    const double r_out = std::max(R, radius_bound(envelopes, tol * target));
    const double fringe_r =
        eval.max_frequency_x(r_out, r_out) + eval.max_frequency_omega(r_out, r_out);
    const double step_r = std::min(w_min / 4.0, 1.0 / (8.0 * std::max(fringe_r, 1e-12)));
    int nr = static_cast<int>(std::ceil((r_out - R) / step_r)) + 1;
    nr = std::clamp(nr, 1, 2048);

    double best_val = 0.0, best_r = R, best_phi = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double r = (nr == 1) ? R : R + (r_out - R) * i / (nr - 1);
        const AngularBest ab = angular_sup(eval, r, w_min);
        if (ab.value > best_val) {
            best_val = ab.value;
            best_r = r;
            best_phi = ab.phi;
        }
    }

    // Alternate radial/angular golden refinement around the best grid point.
    const double dr = (nr > 1) ? (r_out - R) / (nr - 1) : 0.0;
    for (int round = 0; round < 3; ++round) {
        if (dr > 0.0) {
            auto hr = [&](double r) {
                return eval.magnitude(r * std::cos(best_phi), r * std::sin(best_phi));
            };
            const double lo = std::max(R, best_r - dr);
            const double hi = std::min(r_out, best_r + dr);
            const double r = golden_maximize(hr, lo, hi, 1e-13);
            if (hr(r) >= best_val) {
                best_val = hr(r);
                best_r = r;
            }
        }
        auto hp = [&](double phi) {
            return eval.magnitude(best_r * std::cos(phi), best_r * std::sin(phi));
        };
        const double dphi = w_min / (4.0 * std::max(best_r, 1e-12));
        const double phi = golden_maximize(hp, best_phi - dphi, best_phi + dphi, 1e-13);
        if (hp(phi) >= best_val) {
            best_val = hp(phi);
            best_phi = phi;
        }
    }

    rep.worst_ratio = best_val / target;
    rep.worst_point = PhasePoint(best_r * std::cos(best_phi), best_r * std::sin(best_phi));
    rep.comparison = "strict";
    rep.holds = rep.worst_ratio < 1.0;
    rep.scan_radius_max = r_out;
    return rep;
}

}  // namespace tfa
