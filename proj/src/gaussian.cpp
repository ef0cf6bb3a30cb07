#include "tfa/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace tfa {

namespace {
void check_same_dim(int a, int b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}
}  // namespace

GeneralizedGaussian::GeneralizedGaussian(complexd c, complexd a, std::vector<double> mu,
                                         std::vector<double> nu)
    : amplitude(c), spread(a), center(std::move(mu)), modulation(std::move(nu)) {
    if (center.empty() || center.size() != modulation.size())
        throw std::invalid_argument("GeneralizedGaussian: mu and nu must be nonempty, equal length");
    if (!(spread.real() > 0.0))
        throw std::invalid_argument("GeneralizedGaussian: Re(spread) must be positive");
    for (double v : center)
        if (!std::isfinite(v)) throw std::invalid_argument("GeneralizedGaussian: non-finite center");
    for (double v : modulation)
        if (!std::isfinite(v)) throw std::invalid_argument("GeneralizedGaussian: non-finite modulation");
}

GeneralizedGaussian::GeneralizedGaussian(complexd c, complexd a, double mu, double nu)
    : GeneralizedGaussian(c, a, std::vector<double>{mu}, std::vector<double>{nu}) {}

GaussianMixture::GaussianMixture(int dim, std::vector<GeneralizedGaussian> ts)
    : d(dim), terms(std::move(ts)) {
    if (dim < 1) throw std::invalid_argument("GaussianMixture: d must be >= 1");
    for (const auto& t : terms) check_same_dim(t.dim(), d, "GaussianMixture");
}

SampledSignal::SampledSignal(std::vector<complexd> s, double t0_, double dt_)
    : samples(std::move(s)), t0(t0_), dt(dt_) {
    if (samples.size() < 2) throw std::invalid_argument("SampledSignal: need at least 2 samples");
    if (!(dt > 0.0)) throw std::invalid_argument("SampledSignal: dt must be positive");
}

GeneralizedGaussian standard_window(int d) {
    return {1.0, 1.0, std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
}

GeneralizedGaussian dilated_gaussian(double lambda, int d) {
    if (!(lambda > 0.0)) throw std::domain_error("dilated_gaussian: lambda must be positive");
    return {1.0, lambda * lambda, std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
}

GaussianMixture to_mixture(const GeneralizedGaussian& term) { return GaussianMixture(term); }

complexd evaluate(const GeneralizedGaussian& term, const std::vector<double>& t) {
    check_same_dim(static_cast<int>(t.size()), term.dim(), "evaluate");
    double quad = 0.0, mod = 0.0;
    for (int j = 0; j < term.dim(); ++j) {
        const double s = t[j] - term.center[j];
        quad += s * s;
        mod += term.modulation[j] * t[j];
    }
    return term.amplitude * std::exp(-kPi * term.spread * quad + 2.0 * kPi * kI * mod);
}

complexd evaluate(const GaussianMixture& f, const std::vector<double>& t) {
    check_same_dim(static_cast<int>(t.size()), f.d, "evaluate");
    complexd sum = 0.0;
    for (const auto& term : f.terms) sum += evaluate(term, t);
    return sum;
}

complexd evaluate1(const GeneralizedGaussian& term, complexd t) {
    check_same_dim(term.dim(), 1, "evaluate1");
    const complexd s = t - term.center[0];
    return term.amplitude * std::exp(-kPi * term.spread * s * s + 2.0 * kPi * kI * term.modulation[0] * t);
}

complexd evaluate1(const GaussianMixture& f, complexd t) {
    check_same_dim(f.d, 1, "evaluate1");
    complexd sum = 0.0;
    for (const auto& term : f.terms) sum += evaluate1(term, t);
    return sum;
}

GeneralizedGaussian conjugated(const GeneralizedGaussian& term) {
    GeneralizedGaussian r = term;
    r.amplitude = std::conj(term.amplitude);
    r.spread = std::conj(term.spread);
    for (double& v : r.modulation) v = -v;
    return r;
}

GeneralizedGaussian time_frequency_shift(const GeneralizedGaussian& term, const PhasePoint& z) {
    check_same_dim(term.dim(), z.dim(), "time_frequency_shift");
    GeneralizedGaussian r = term;
    double nu_dot_x = 0.0;
    for (int j = 0; j < term.dim(); ++j) {
        nu_dot_x += term.modulation[j] * z.x[j];
        r.center[j] += z.x[j];
        r.modulation[j] += z.omega[j];
    }
    r.amplitude *= std::exp(-2.0 * kPi * kI * nu_dot_x);
    return r;
}

GaussianMixture time_frequency_shift(const GaussianMixture& f, const PhasePoint& z) {
    check_same_dim(f.d, z.dim(), "time_frequency_shift");
    GaussianMixture r(f.d);
    r.terms.reserve(f.terms.size());
    for (const auto& term : f.terms) r.terms.push_back(time_frequency_shift(term, z));
    return r;
}

complexd gaussian_integral(complexd alpha, complexd b_sq_sum, complexd gamma, int d) {
    if (!(alpha.real() > 0.0)) {
        throw std::invalid_argument("gaussian_integral: Re(alpha) must be positive");
    }
    return std::pow(alpha, -0.5 * d) * std::exp(b_sq_sum / (4.0 * kPi * alpha) + gamma);
}

namespace {

// <phi, psi> for single terms: complete the square in each coordinate.
complexd term_inner_product(const GeneralizedGaussian& phi, const GeneralizedGaussian& psi) {
    const int d = phi.dim();
    const complexd a1 = phi.spread;
    const complexd a2c = std::conj(psi.spread);
    const complexd alpha = a1 + a2c;
    complexd b_sq = 0.0;
    complexd gamma = 0.0;
    for (int j = 0; j < d; ++j) {
        const double u = phi.center[j], v = psi.center[j];
        const double dnu = phi.modulation[j] - psi.modulation[j];
        const complexd b = 2.0 * kPi * (a1 * u + a2c * v + kI * dnu);
        b_sq += b * b;
        gamma += -kPi * (a1 * u * u + a2c * v * v);
    }
    return phi.amplitude * std::conj(psi.amplitude) * gaussian_integral(alpha, b_sq, gamma, d);
}

}  // namespace

complexd inner_product(const GaussianMixture& f, const GaussianMixture& h) {
    check_same_dim(f.d, h.d, "inner_product");
    complexd sum = 0.0;
    for (const auto& tf : f.terms)
        for (const auto& th : h.terms) sum += term_inner_product(tf, th);
    return sum;
}

double l2_norm(const GaussianMixture& f) {
    const double n2 = inner_product(f, f).real();
    return n2 > 0.0 ? std::sqrt(n2) : 0.0;
}

double l2_norm(const SampledSignal& f) {
    double s = 0.0;
    for (const auto& v : f.samples) s += std::norm(v);
    return std::sqrt(f.dt * s);
}

SampledSignal sample(const GaussianMixture& f, int n, double dt, double t0) {
    check_same_dim(f.d, 1, "sample");
    if (n < 2) throw std::invalid_argument("sample: need n >= 2");
    std::vector<complexd> s(n);
    for (int k = 0; k < n; ++k) s[k] = evaluate1(f, t0 + k * dt);
    return SampledSignal(std::move(s), t0, dt);
}

}  // namespace tfa
