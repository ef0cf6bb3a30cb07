#include "tfa/stft.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tfa {

complexd stft_closed_form(const GaussianMixture& f, const GeneralizedGaussian& g,
                          const PhasePoint& z) {
    if (f.d != g.dim() || f.d != z.dim()) {
        throw std::invalid_argument("stft_closed_form: dimension mismatch");
    }
    return inner_product(f, to_mixture(time_frequency_shift(g, z)));
}

complexd dilated_gaussian_stft(double lambda, const PhasePoint& z) {
    if (!(lambda > 0.0)) throw std::domain_error("dilated_gaussian_stft: lambda must be positive");
    z.validate();
    const int d = z.dim();
    const double s = 1.0 + lambda * lambda;
    double x_sq = 0.0, w_sq = 0.0, xw = 0.0;
    for (int j = 0; j < d; ++j) {
        x_sq += z.x[j] * z.x[j];
        w_sq += z.omega[j] * z.omega[j];
        xw += z.x[j] * z.omega[j];
    }
    return std::pow(s, -0.5 * d) *
           std::exp(complexd(-kPi * (lambda * lambda * x_sq + w_sq) / s, -2.0 * kPi * xw / s));
}

StftEvaluator::StftEvaluator(const GaussianMixture& f, const GeneralizedGaussian& window) {
    if (f.d != 1 || window.dim() != 1) {
        throw std::invalid_argument("StftEvaluator: only d = 1 is supported");
    }
    terms_.reserve(f.terms.size());
    const complexd awc = std::conj(window.spread);
    const double mw = window.center[0];
    const double nw = window.modulation[0];
    for (const auto& term : f.terms) {
        // <term, pi(z) window> by completing the square: the exponent of the
        // result is a complex quadratic polynomial in (x, omega).
        const complexd a = term.spread;
        const double mu = term.center[0];
        const double nu = term.modulation[0];

        const complexd alpha = a + awc;
        const complexd s = 1.0 / (4.0 * kPi * alpha);
        const complexd b0 = 2.0 * kPi * (a * mu + awc * mw + kI * (nu - nw));
        const complexd bx = 2.0 * kPi * awc;
        const complexd bw = -2.0 * kPi * kI;

        TermPoly tp;
        tp.prefactor = term.amplitude * std::conj(window.amplitude) * std::pow(alpha, -0.5);
        tp.e20 = bx * bx * s - kPi * awc;
        tp.e11 = 2.0 * bx * bw * s;
        tp.e02 = bw * bw * s;
        tp.e10 = 2.0 * b0 * bx * s - 2.0 * kPi * awc * mw + 2.0 * kPi * kI * nw;
        tp.e01 = 2.0 * b0 * bw * s;
        tp.e00 = b0 * b0 * s - kPi * (a * mu * mu + awc * mw * mw);
        terms_.push_back(tp);
    }
}

complexd StftEvaluator::operator()(double x, double omega) const {
    complexd v{0.0, 0.0};
    for (const auto& t : terms_) {
        const complexd e = (t.e20 * x + t.e11 * omega + t.e10) * x +
                           (t.e02 * omega + t.e01) * omega + t.e00;
        v += t.prefactor * std::exp(e);
    }
    return v;
}

double StftEvaluator::magnitude(double x, double omega) const { return std::abs((*this)(x, omega)); }

double StftEvaluator::max_frequency_x(double x_abs, double omega_abs) const {
    double rate = 0.0;
    for (const auto& t : terms_) {
        rate = std::max(rate, std::abs(t.e10.imag()) + 2.0 * x_abs * std::abs(t.e20.imag()) +
                                  omega_abs * std::abs(t.e11.imag()));
    }
    return rate / (2.0 * kPi);
}

double StftEvaluator::max_frequency_omega(double x_abs, double omega_abs) const {
    double rate = 0.0;
    for (const auto& t : terms_) {
        rate = std::max(rate, std::abs(t.e01.imag()) + 2.0 * omega_abs * std::abs(t.e02.imag()) +
                                  x_abs * std::abs(t.e11.imag()));
    }
    return rate / (2.0 * kPi);
}

double StftEvaluator::max_frequency_angle(double R) const {
    double rate = 0.0;
    for (const auto& t : terms_) {
        const double dx = std::abs(t.e10.imag()) + 2.0 * R * std::abs(t.e20.imag()) +
                          R * std::abs(t.e11.imag());
        const double dw = std::abs(t.e01.imag()) + 2.0 * R * std::abs(t.e02.imag()) +
                          R * std::abs(t.e11.imag());
        rate = std::max(rate, R * (dx + dw));
    }
    return rate / (2.0 * kPi);
}

QuadratureResult stft_quadrature(const GaussianMixture& f, const GeneralizedGaussian& g,
                                 const PhasePoint& z, double tol) {
    if (f.d != 1 || g.dim() != 1 || z.dim() != 1) {
        throw std::invalid_argument("stft_quadrature: only d = 1 is supported");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("stft_quadrature: tol must be positive");

    QuadratureResult out;
    out.converged = true;
    if (f.is_zero()) return out;

    const double x = z.x[0];
    const double omega = z.omega[0];
    const GeneralizedGaussian gc = conjugated(g);
    const double per_term_tol = tol / static_cast<double>(f.terms.size());

    for (const auto& term : f.terms) {
        // Magnitude envelope of term(t) * conj(g(t - x)): the product of two
        // Gaussians is a Gaussian with combined precision.
        const double p1 = term.spread.real();
        const double m1 = term.center[0];
        const double p2 = g.spread.real();
        const double m2 = x + g.center[0];
        const double p = p1 + p2;
        const double m = (p1 * m1 + p2 * m2) / p;
        const double q = p1 * p2 * (m1 - m2) * (m1 - m2) / p;
        const double amplitude =
            std::abs(term.amplitude) * std::abs(g.amplitude) * std::exp(-kPi * q);
        const double scale = 1.0 / std::sqrt(p);

        // Oscillation rate: modulations plus the chirp slopes |Im a| |t - mu|
        // over the truncation window.
        const double omega_max = std::abs(term.modulation[0]) + std::abs(g.modulation[0]) +
                                 std::abs(omega) +
                                 std::abs(term.spread.imag()) * (std::abs(m - m1) + 12.0 * scale) +
                                 std::abs(g.spread.imag()) * (std::abs(m - m2) + 12.0 * scale);

        auto integrand = [&](double t) {
            return evaluate1(term, t) * evaluate1(gc, t - x) *
                   std::exp(complexd(0.0, -2.0 * kPi * t * omega));
        };
        QuadratureResult r = integrate(integrand, m, scale, per_term_tol, omega_max, amplitude);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
    }
    return out;
}

complexd stft_quadrature(const SampledSignal& f, const GeneralizedGaussian& g,
                         const PhasePoint& z, double /*tol: fixed Riemann discretization*/) {
    if (g.dim() != 1 || z.dim() != 1) {
        throw std::invalid_argument("stft_quadrature: only d = 1 is supported");
    }
    const double x = z.x[0];
    const double omega = z.omega[0];
    const GeneralizedGaussian gc = conjugated(g);
    complexd acc{0.0, 0.0};
    for (std::size_t n = 0; n < f.samples.size(); ++n) {
        const double t = f.t0 + static_cast<double>(n) * f.dt;
        acc += f.samples[n] * evaluate1(gc, t - x) * std::exp(complexd(0.0, -2.0 * kPi * t * omega));
    }
    return acc * f.dt;
}

void fft_pow2(std::vector<complexd>& data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("fft_pow2: length must be a power of two");
    }
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * kPi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const complexd w = std::polar(1.0, ang * static_cast<double>(j));
                const complexd u = data[i + j];
                const complexd v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
            }
        }
    }
}

namespace {

void check_uniform_axis(const std::vector<double>& axis, const char* name) {
    if (axis.empty()) throw std::invalid_argument(std::string(name) + ": empty axis");
    if (axis.size() < 2) return;
    const double step = axis[1] - axis[0];
    if (!(step > 0.0)) throw std::invalid_argument(std::string(name) + ": axis must increase");
    for (std::size_t i = 1; i < axis.size(); ++i) {
        const double gap = axis[i] - axis[i - 1];
        if (std::abs(gap - step) > 1e-9 * std::max(1.0, std::abs(step))) {
            throw std::invalid_argument(std::string(name) + ": axis must be uniform");
        }
    }
}

}  // namespace

STFTGrid stft_grid(const SampledSignal& f, const GeneralizedGaussian& g,
                   const std::vector<double>& x_axis, const std::vector<double>& omega_axis) {
    if (g.dim() != 1) throw std::invalid_argument("stft_grid: only d = 1 windows are supported");
    check_uniform_axis(x_axis, "stft_grid x_axis");
    check_uniform_axis(omega_axis, "stft_grid omega_axis");

    const std::size_t n = f.samples.size();
    std::size_t m = 1;
    while (m < 4 * n) m <<= 1;  // at least 4x oversampling in omega
    const double bin = 1.0 / (static_cast<double>(m) * f.dt);

    // Map each requested frequency onto the padded FFT grid k / (M dt).
    std::vector<std::size_t> bins(omega_axis.size());
    for (std::size_t i = 0; i < omega_axis.size(); ++i) {
        const double k_real = omega_axis[i] / bin;
        const long long k = std::llround(k_real);
        if (std::abs(k_real - static_cast<double>(k)) > 1e-6) {
            char msg[256];
            std::snprintf(msg, sizeof(msg),
                          "stft_grid: omega = %.17g is not on the FFT frequency grid; admissible "
                          "frequencies are integer multiples of 1/(M dt) = %.17g (M = %zu)",
                          omega_axis[i], bin, m);
            throw std::invalid_argument(msg);
        }
        if (std::llabs(k) > static_cast<long long>(m / 2)) {
            char msg[256];
            std::snprintf(msg, sizeof(msg),
                          "stft_grid: omega = %.17g exceeds the Nyquist frequency 1/(2 dt) = %.17g",
                          omega_axis[i], 0.5 / f.dt);
            throw std::invalid_argument(msg);
        }
        bins[i] = static_cast<std::size_t>(((k % static_cast<long long>(m)) +
                                            static_cast<long long>(m)) %
                                           static_cast<long long>(m));
    }

    STFTGrid grid;
    grid.x_axis = x_axis;
    grid.omega_axis = omega_axis;
    grid.values.resize(x_axis.size() * omega_axis.size());

    const GeneralizedGaussian gc = conjugated(g);
    std::vector<complexd> buf(m);
    for (std::size_t ix = 0; ix < x_axis.size(); ++ix) {
        const double x = x_axis[ix];
        std::fill(buf.begin(), buf.end(), complexd{0.0, 0.0});
        for (std::size_t j = 0; j < n; ++j) {
            const double t = f.t0 + static_cast<double>(j) * f.dt;
            // Window evaluated analytically at its exact argument.
            buf[j] = f.samples[j] * evaluate1(gc, t - x);
        }
        fft_pow2(buf);
        for (std::size_t iw = 0; iw < omega_axis.size(); ++iw) {
            const complexd phase = std::exp(complexd(0.0, -2.0 * kPi * f.t0 * omega_axis[iw]));
            grid.values[ix * omega_axis.size() + iw] = f.dt * phase * buf[bins[iw]];
        }
    }
    return grid;
}

double moyal_sum(const STFTGrid& grid) {
    if (grid.x_axis.size() < 2 || grid.omega_axis.size() < 2) {
        throw std::invalid_argument("moyal_sum: need at least a 2x2 grid");
    }
    const double dx = grid.x_axis[1] - grid.x_axis[0];
    const double dw = grid.omega_axis[1] - grid.omega_axis[0];
    double s = 0.0;
    for (const auto& v : grid.values) s += std::norm(v);
    return dx * dw * s;
}

std::string stft_grid_csv(const STFTGrid& grid) {
    std::string out = "x,omega,re,im,abs\n";
    char line[192];
    for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
        for (std::size_t iw = 0; iw < grid.omega_axis.size(); ++iw) {
            const complexd v = grid.at(ix, iw);
            std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g\n", grid.x_axis[ix],
                          grid.omega_axis[iw], v.real(), v.imag(), std::abs(v));
            out += line;
        }
    }
    return out;
}

}  // namespace tfa
