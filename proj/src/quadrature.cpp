#include "tfa/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace tfa {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// xgk holds the positive abscissae (last entry is the centre); the Gauss
// subset sits at indices 1, 3, 5 plus the centre.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

constexpr double kGoldenRatio = 0.618033988749894848204586834365638;  // (sqrt(5)-1)/2

struct Panel {
    double a = 0.0;
    double b = 0.0;
    complexd value{0.0, 0.0};
    double error = 0.0;
};

struct PanelLess {
    bool operator()(const Panel& p, const Panel& q) const { return p.error < q.error; }
};

Panel evaluate_panel(const Integrand1D& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    auto probe = [&](double t) {
        complexd v = f(t);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::runtime_error("integrand returned a non-finite value at t = " +
                                     std::to_string(t));
        }
        return v;
    };

    const complexd fc = probe(centre);
    complexd result_gauss = kWg[3] * fc;
    complexd result_kronrod = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double offset = half * kXgk[j];
        const complexd pair = probe(centre - offset) + probe(centre + offset);
        result_kronrod += kWgk[j] * pair;
        if (j == 1) result_gauss += kWg[0] * pair;
        if (j == 3) result_gauss += kWg[1] * pair;
        if (j == 5) result_gauss += kWg[2] * pair;
    }

    Panel p;
    p.a = a;
    p.b = b;
    p.value = result_kronrod * half;
    // Conservative panel error: the Gauss/Kronrod difference without the usual
    // asymptotic sharpening, so error_estimate tends to overstate the truth.
    p.error = std::abs((result_kronrod - result_gauss) * half);
    return p;
}

}  // namespace

double golden_maximize(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo <= hi)) throw std::invalid_argument("golden_maximize: lo > hi");
    if (!(tol > 0.0)) throw std::invalid_argument("golden_maximize: tol must be positive");
    double a = lo, b = hi;
    double x1 = b - kGoldenRatio * (b - a);
    double x2 = a + kGoldenRatio * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int iter = 0; iter < 400 && (b - a) > tol; ++iter) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGoldenRatio * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGoldenRatio * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

QuadratureResult integrate_interval(const Integrand1D& f, double a, double b, double tol,
                                    double omega_max, long long max_evaluations) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("integrate_interval: endpoints must be finite");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_interval: tol must be positive");
    if (omega_max < 0.0) {
        throw std::invalid_argument("integrate_interval: omega_max must be non-negative");
    }
    if (max_evaluations < 30) {
        throw std::invalid_argument("integrate_interval: evaluation budget below one panel pair");
    }

    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    // Resolve oscillations: initial panels no wider than a quarter period of
    // the fastest declared modulation.
    long long n0 = 1;
    if (omega_max > 0.0) {
        const double width_limit = 1.0 / (4.0 * omega_max);
        n0 = std::max<long long>(1, static_cast<long long>(std::ceil((b - a) / width_limit)));
    }
    n0 = std::min<long long>(n0, std::max<long long>(1, max_evaluations / 30));
    n0 = std::min<long long>(n0, 4096);

    std::vector<Panel> heap;
    std::vector<Panel> frozen;  // panels too narrow to bisect further
    heap.reserve(static_cast<size_t>(2 * n0) + 64);
    long long evaluations = 0;

    const double h0 = (b - a) / static_cast<double>(n0);
    for (long long i = 0; i < n0; ++i) {
        const double pa = a + static_cast<double>(i) * h0;
        const double pb = (i + 1 == n0) ? b : pa + h0;
        // Split each seed interval at the golden ratio rather than the
        // midpoint so a locally antisymmetric integrand cannot hide behind a
        // vanishing Gauss/Kronrod difference.
        const double pm = pa + (1.0 - kGoldenRatio) * (pb - pa);
        heap.push_back(evaluate_panel(f, pa, pm));
        heap.push_back(evaluate_panel(f, pm, pb));
        evaluations += 30;
    }
    std::make_heap(heap.begin(), heap.end(), PanelLess{});

    long double err_sum = 0.0L;
    for (const Panel& p : heap) err_sum += p.error;
    long double frozen_err = 0.0L;

    while (static_cast<double>(err_sum + frozen_err) > tol && evaluations + 30 <= max_evaluations &&
           !heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), PanelLess{});
        Panel worst = heap.back();
        heap.pop_back();
        err_sum -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // Interval at floating-point resolution: its error is irreducible.
            frozen.push_back(worst);
            frozen_err += worst.error;
            continue;
        }
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        evaluations += 30;
        err_sum += left.error + right.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), PanelLess{});
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), PanelLess{});
    }

    std::complex<long double> total{0.0L, 0.0L};
    long double total_err = 0.0L;
    for (const Panel& p : heap) {
        total += std::complex<long double>(p.value.real(), p.value.imag());
        total_err += p.error;
    }
    for (const Panel& p : frozen) {
        total += std::complex<long double>(p.value.real(), p.value.imag());
        total_err += p.error;
    }

    out.value = sign * complexd(static_cast<double>(total.real()), static_cast<double>(total.imag()));
    out.error_estimate = static_cast<double>(total_err);
    out.evaluations = evaluations;
    out.converged = out.error_estimate <= tol;
    return out;
}

QuadratureResult integrate(const Integrand1D& f, double center, double scale, double tol,
                           double omega_max, double amplitude, long long max_evaluations) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::invalid_argument("integrate: scale must be positive and finite");
    }
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
        throw std::invalid_argument("integrate: amplitude must be non-negative and finite");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be positive");

    // Choose the truncation half-width W * scale so the Gaussian tail bound
    // amplitude * scale * erfc(sqrt(pi) W) stays below tol / 10.
    const double target = 0.1 * tol;
    auto tail = [&](double w) { return amplitude * scale * std::erfc(std::sqrt(kPi) * w); };
    double w = 12.0;
    if (tail(1.0) <= target) {
        w = 1.0;
    } else if (tail(12.0) <= target) {
        double lo = 1.0, hi = 12.0;
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (lo + hi);
            (tail(mid) <= target ? hi : lo) = mid;
        }
        w = hi;
    }
    const double tail_bound = tail(w);

    QuadratureResult out = integrate_interval(f, center - w * scale, center + w * scale,
                                              0.9 * tol, omega_max, max_evaluations);
    out.error_estimate += tail_bound;
    out.converged = out.error_estimate <= tol;
    return out;
}

GaussianEnvelope1D fit_gaussian_envelope(const std::function<double(double)>& log_abs_f,
                                         double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("fit_gaussian_envelope: need lo < hi");
    const double span = hi - lo;
    const double seed = golden_maximize(log_abs_f, lo, hi, 1e-9 * span);

    // The model log-magnitude is an exact quadratic, so one three-point
    // stencil recovers vertex and curvature; any stencil width works and a
    // wide one keeps the second difference well conditioned.
    const double h = span / 16.0;
    const double p = std::clamp(seed, lo + h, hi - h);
    const double fm = log_abs_f(p - h);
    const double f0 = log_abs_f(p);
    const double fp = log_abs_f(p + h);
    const double d1 = fp - fm;
    const double d2 = fp - 2.0 * f0 + fm;
    if (!(d2 < 0.0)) {
        throw std::runtime_error("fit_gaussian_envelope: log-magnitude is not concave on the interval");
    }

    GaussianEnvelope1D env;
    env.peak_location = p - 0.5 * h * d1 / d2;
    const double curvature = -d2 / (h * h);  // -(d^2/dt^2) log|f|
    env.decay_rate = curvature / (2.0 * kPi);
    env.log_peak = f0 + 0.5 * curvature * (p - env.peak_location) * (p - env.peak_location);
    return env;
}

QuadratureResult integrate_product(const std::vector<AxisIntegrand>& axes, double tol,
                                   long long max_evaluations) {
    if (axes.empty()) throw std::invalid_argument("integrate_product: no axes given");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_product: tol must be positive");
    const size_t d = axes.size();

    // |integral over axis k| <= amplitude_k * scale_k; allocating tol/d to
    // each axis against the product of the other bounds keeps the first-order
    // combined error below tol.
    std::vector<double> bound(d);
    for (size_t k = 0; k < d; ++k) {
        bound[k] = std::max(axes[k].amplitude * axes[k].scale, 1e-300);
    }

    QuadratureResult out;
    out.converged = true;
    std::vector<complexd> values(d);
    std::vector<double> errors(d);
    for (size_t j = 0; j < d; ++j) {
        double others = 1.0;
        for (size_t k = 0; k < d; ++k) {
            if (k != j) others *= bound[k];
        }
        const double tol_j = tol / (static_cast<double>(d) * std::max(others, 1e-300));
        QuadratureResult r = integrate(axes[j].f, axes[j].center, axes[j].scale, tol_j,
                                       axes[j].omega_max, axes[j].amplitude, max_evaluations);
        values[j] = r.value;
        errors[j] = r.error_estimate;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
    }

    complexd product{1.0, 0.0};
    for (size_t j = 0; j < d; ++j) product *= values[j];
    out.value = product;

    double err = 0.0;
    for (size_t j = 0; j < d; ++j) {
        double others = 1.0;
        for (size_t k = 0; k < d; ++k) {
            if (k != j) others *= std::max(std::abs(values[k]), bound[k] * 1e-12);
        }
        err += errors[j] * others;
    }
    out.error_estimate = err;
    return out;
}

QuadratureResult integrate_2d(const std::function<complexd(double, double)>& f,
                              const AxisIntegrand& x_axis, const AxisIntegrand& y_axis,
                              double tol, long long max_evaluations) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_2d: tol must be positive");
    if (!(x_axis.scale > 0.0) || !(y_axis.scale > 0.0)) {
        throw std::invalid_argument("integrate_2d: axis scales must be positive");
    }

    // Contract: |f(x, y)| <= amp_x exp(-pi ((x-cx)/sx)^2) * amp_y exp(-pi ((y-cy)/sy)^2),
    // so the partial integral g(x) = int f(x, y) dy obeys the x-axis envelope
    // scaled by amp_y * sy.
    const double x_half_width = 12.0 * x_axis.scale;
    const double inner_tol = 0.5 * tol / (2.0 * x_half_width);

    long long used = 0;
    bool inner_converged = true;
    auto g = [&](double x) {
        const long long remaining = max_evaluations - used;
        if (remaining < 1000) {
            inner_converged = false;
            return complexd{0.0, 0.0};
        }
        const double env_x =
            x_axis.amplitude * std::exp(-kPi * (x - x_axis.center) * (x - x_axis.center) /
                                        (x_axis.scale * x_axis.scale));
        QuadratureResult inner = integrate([&](double y) { return f(x, y); }, y_axis.center,
                                           y_axis.scale, inner_tol, y_axis.omega_max,
                                           std::max(env_x, 1e-300) * y_axis.amplitude,
                                           std::min<long long>(remaining, 200'000));
        used += inner.evaluations;
        inner_converged = inner_converged && inner.converged;
        return inner.value;
    };

    QuadratureResult outer =
        integrate(g, x_axis.center, x_axis.scale, 0.5 * tol, x_axis.omega_max,
                  x_axis.amplitude * y_axis.amplitude * y_axis.scale, max_evaluations);
    outer.evaluations = used;
    outer.error_estimate += inner_tol * 2.0 * x_half_width;
    outer.converged = outer.converged && inner_converged && outer.error_estimate <= tol;
    return outer;
}

}  // namespace tfa
