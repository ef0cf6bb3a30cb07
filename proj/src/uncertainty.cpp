#include "tfa/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tfa/envelope.hpp"
#include "tfa/quadrature.hpp"

namespace tfa {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Narrowest magnitude feature of the term profiles: min_k 1/sqrt(lambda_max(C_k)).
// Both eigenvalues of every C lie in (0, pi), so this is always > 1/sqrt(pi).
double min_feature_width(const std::vector<TermEnvelope>& envelopes) {
    double w = std::numeric_limits<double>::infinity();
    for (const auto& e : envelopes) {
        const double tr = e.cxx + e.cww;
        const double det = e.cxx * e.cww - e.cxw * e.cxw;
        const double lmax = 0.5 * (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
        w = std::min(w, 1.0 / std::sqrt(lmax));
    }
    return w;
}

struct LineBest {
    double value = 0.0;
    double x = 0.0;
};

// Scan h(x) = |V(x, omega_fixed)| over [-x_max, x_max] with the given number
// of points and golden-refine every local grid maximum.
LineBest scan_line(const StftEvaluator& eval, double omega, double x_max, int n) {
    std::vector<double> xs(n), vals(n);
    const double step = (n > 1) ? 2.0 * x_max / (n - 1) : 0.0;
    for (int i = 0; i < n; ++i) {
        xs[i] = -x_max + i * step;
        vals[i] = eval.magnitude(xs[i], omega);
    }
    LineBest best;
    auto h = [&](double x) { return eval.magnitude(x, omega); };
    for (int i = 0; i < n; ++i) {
        const bool local_max = (i == 0 || vals[i] >= vals[i - 1]) &&
                               (i + 1 == n || vals[i] >= vals[i + 1]);
        if (vals[i] > best.value) {
            best.value = vals[i];
            best.x = xs[i];
        }
        if (!local_max || n == 1) continue;
        const double lo = (i == 0) ? xs[0] : xs[i - 1];
        const double hi = (i + 1 == n) ? xs[n - 1] : xs[i + 1];
        const double xr = golden_maximize(h, lo, hi, 1e-12 * std::max(1.0, x_max));
        const double vr = h(xr);
        if (vr > best.value) {
            best.value = vr;
            best.x = xr;
        }
    }
    return best;
}

void check_sup_inputs(const GaussianMixture& f, double R, double tol, const char* what) {
    if (f.d != 1) throw std::invalid_argument(std::string(what) + ": only d = 1 is supported");
    if (f.is_zero()) throw std::invalid_argument(std::string(what) + ": zero mixture");
    if (!(R > 0.0)) throw std::invalid_argument(std::string(what) + ": R must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument(std::string(what) + ": tol must be positive");
}

}  // namespace

SupReport cylinder_sup(const GaussianMixture& f, double R, double tol) {
    check_sup_inputs(f, R, tol, "cylinder_sup");
    const std::vector<TermEnvelope> envelopes = stft_envelopes(f);
    const StftEvaluator eval(f, standard_window(1));
    const double w_min = min_feature_width(envelopes);

    // Seed estimate of the supremum from structured probes: term peaks
    // projected to each rim, their fixed-omega vertices, and x = 0.
    double s_est = 0.0;
    double x_spread = 0.0;
    for (const double omega : {-R, R}) {
        s_est = std::max(s_est, eval.magnitude(0.0, omega));
        for (const auto& e : envelopes) {
            const double x_star = e.x0 - e.cxw * (omega - e.omega0) / e.cxx;
            s_est = std::max(s_est, eval.magnitude(x_star, omega));
            s_est = std::max(s_est, eval.magnitude(e.x0, omega));
            x_spread = std::max(x_spread, std::abs(x_star));
        }
    }
    double amp_max = 0.0;
    for (const auto& e : envelopes) amp_max = std::max(amp_max, e.amplitude);

    SupReport rep;
    rep.geometry = Geometry::cylinder;
    rep.R = R;
    rep.refined = true;

    // The probe estimate never exceeds the true supremum, so the truncation
    // threshold 0.1 tol s_est is certified: mass beyond the box stays below a
    // 0.1 tol fraction of the supremum. The amplitude floor only guards
    // pathological near-total cancellation, where the discarded mass is still
    // below 1e-16 tol of the largest term amplitude.
    const double floor_est = std::max(s_est, amp_max * 1e-15);
    const double threshold = 0.1 * tol * floor_est;
    double x_max =
        std::max({x_truncation(envelopes, -R, threshold), x_truncation(envelopes, R, threshold),
                  x_spread + w_min, w_min});

    const double fringe = eval.max_frequency_x(x_max, R);
    double step = std::min(w_min / 4.0, 1.0 / (8.0 * std::max(fringe, 1e-12)));
    int n = static_cast<int>(std::ceil(2.0 * x_max / step)) + 1;
    if (n % 2 == 0) ++n;  // odd: the grid contains x = 0
    n = std::min(n, 32769);
    step = 2.0 * x_max / (n - 1);

    for (const double omega : {-R, R}) {
        const LineBest best = scan_line(eval, omega, x_max, n);
        if (best.value > rep.sup_value) {
            rep.sup_value = best.value;
            rep.argmax = PhasePoint(best.x, omega);
        }
    }
    rep.x_truncation = x_max;
    rep.grid_resolution = step;
    return rep;
}

SupReport sphere_sup(const GaussianMixture& f, double R, double tol) {
    check_sup_inputs(f, R, tol, "sphere_sup");
    const std::vector<TermEnvelope> envelopes = stft_envelopes(f);
    const StftEvaluator eval(f, standard_window(1));
    const double w_min = min_feature_width(envelopes);

    const double fringe = eval.max_frequency_angle(R);  // cycles per radian
    const double step_phi = std::min(w_min / (4.0 * R), 1.0 / (8.0 * std::max(fringe, 1e-12)));
    int n = static_cast<int>(std::ceil(2.0 * kPi / step_phi));
    n = std::clamp(n, 64, 65536);
    const double dphi = 2.0 * kPi / n;

    auto h = [&](double phi) { return eval.magnitude(R * std::cos(phi), R * std::sin(phi)); };
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = h(dphi * i);

    double best_val = 0.0, best_phi = 0.0;
    for (int i = 0; i < n; ++i) {
        if (vals[i] > best_val) {
            best_val = vals[i];
            best_phi = dphi * i;
        }
        const double prev = vals[(i + n - 1) % n];
        const double next = vals[(i + 1) % n];
        if (vals[i] >= prev && vals[i] >= next) {
            const double phi0 = dphi * i;
            const double phi = golden_maximize(h, phi0 - dphi, phi0 + dphi, 1e-13);
            const double v = h(phi);
            if (v > best_val) {
                best_val = v;
                best_phi = phi;
            }
        }
    }

    SupReport rep;
    rep.geometry = Geometry::sphere;
    rep.R = R;
    rep.sup_value = best_val;
    rep.argmax = PhasePoint(R * std::cos(best_phi), R * std::sin(best_phi));
    rep.x_truncation = 0.0;
    rep.grid_resolution = dphi * R;
    rep.refined = true;
    (void)tol;  // the angular scan already resolves to machine precision
    return rep;
}

double bound_cylinder(double N) {
    if (!(N > 1.0)) throw std::domain_error("bound_cylinder: requires N > 1");
    return std::sqrt(std::log(N) / kPi);
}

double bound_sphere(double N) {
    if (!(N > 1.0)) throw std::domain_error("bound_sphere: requires N > 1");
    return std::sqrt(2.0 * std::log(N) / kPi);
}

TheoremReport verify_theorem(const GaussianMixture& f, double R, Geometry geometry, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("verify_theorem: tol must be positive");
    const SupReport sup = (geometry == Geometry::cylinder) ? cylinder_sup(f, R, 1e-12)
                                                           : sphere_sup(f, R, 1e-12);
    const double ip = std::abs(inner_product(f, to_mixture(standard_window(1))));

    TheoremReport rep;
    rep.theorem = geometry;
    rep.R = R;
    rep.sup_value = sup.sup_value;
    rep.inner_product_abs = ip;
    rep.N_effective = ip / sup.sup_value;
    rep.tolerance = tol;

    if (!(rep.N_effective > 1.0)) {
        rep.not_applicable = true;
        rep.holds = true;  // vacuous: the hypothesis N > 1 fails
        rep.bound = kNaN;
        rep.margin = kNaN;
        return rep;
    }
    rep.bound = (geometry == Geometry::cylinder) ? bound_cylinder(rep.N_effective)
                                                 : bound_sphere(rep.N_effective);
    rep.margin = R - rep.bound;
    rep.holds = (geometry == Geometry::cylinder) ? (R > rep.bound - tol) : (R >= rep.bound - tol);
    return rep;
}

std::vector<SharpnessRow> sharpness_sweep(double N, const std::vector<double>& lambdas) {
    if (!(N > 1.0)) throw std::domain_error("sharpness_sweep: requires N > 1");

    std::vector<SharpnessRow> rows;
    rows.reserve(lambdas.size());
    for (const double lambda : lambdas) {
        if (!(lambda > 0.0)) throw std::invalid_argument("sharpness_sweep: lambda must be positive");
        const GaussianMixture f = to_mixture(dilated_gaussian(lambda));
        const double ip = std::abs(inner_product(f, to_mixture(standard_window(1))));
        auto condition_holds = [&](double R) {
            return cylinder_sup(f, R, 1e-12).sup_value * N <= ip;
        };

        double lo = 1e-3;
        if (condition_holds(lo)) {
            throw std::runtime_error("sharpness_sweep: condition already holds at R = 1e-3");
        }
        double hi = 1.0;
        while (!condition_holds(hi)) {
            hi *= 2.0;
            if (hi > 64.0) {
                throw std::runtime_error(
                    "sharpness_sweep: bisection bracket failure on [1e-3, 64]");
            }
        }
        while (hi - lo > 1e-11) {
            const double mid = 0.5 * (lo + hi);
            (condition_holds(mid) ? hi : lo) = mid;
        }

        SharpnessRow row;
        row.lambda = lambda;
        row.r_min_numeric = hi;
        row.r_min_formula = std::sqrt((1.0 + lambda * lambda) * std::log(N) / kPi);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace tfa
