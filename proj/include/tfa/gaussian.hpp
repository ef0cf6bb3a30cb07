#pragma once

#include <complex>
#include <vector>

#include "tfa/types.hpp"

namespace tfa {

// One term of the closed-form signal class on R^d:
//
//   t |-> c * exp(-pi a (t-mu).(t-mu) + 2 pi i nu.t),    Re(a) > 0,
//
// with complex amplitude c, complex isotropic spread a, real center mu and
// real modulation nu. The class is closed under time-frequency shifts,
// Fourier/fractional-Fourier transforms and products, so every transform in
// this library has an exact expression on it.
struct GeneralizedGaussian {
    complexd amplitude{1.0, 0.0};
    complexd spread{1.0, 0.0};
    std::vector<double> center;
    std::vector<double> modulation;

    GeneralizedGaussian(complexd c, complexd a, std::vector<double> mu, std::vector<double> nu);

    // d = 1 convenience.
    GeneralizedGaussian(complexd c, complexd a, double mu, double nu);

    int dim() const { return static_cast<int>(center.size()); }
};

// Finite sum of GeneralizedGaussian terms, all of the same dimension.
// An empty term list represents the zero signal.
struct GaussianMixture {
    int d = 1;
    std::vector<GeneralizedGaussian> terms;

    explicit GaussianMixture(int dim = 1) : d(dim) {
        if (dim < 1) throw std::invalid_argument("GaussianMixture: d must be >= 1");
    }
    explicit GaussianMixture(GeneralizedGaussian term) : d(term.dim()) { terms.push_back(std::move(term)); }
    GaussianMixture(int dim, std::vector<GeneralizedGaussian> ts);

    bool is_zero() const { return terms.empty(); }
};

// Uniformly sampled d=1 signal: samples[k] taken at t0 + k*dt.
struct SampledSignal {
    std::vector<complexd> samples;
    double t0 = 0.0;
    double dt = 1.0;

    SampledSignal(std::vector<complexd> s, double t0_, double dt_);
};

// The unit Gaussian window g(t) = exp(-pi t.t).
GeneralizedGaussian standard_window(int d = 1);

// The dilated Gaussian f_lambda(t) = exp(-pi lambda^2 t.t).
GeneralizedGaussian dilated_gaussian(double lambda, int d = 1);

GaussianMixture to_mixture(const GeneralizedGaussian& term);

// exp(-pi a (t-mu)^2 + 2 pi i nu t) at a real point t of length d.
complexd evaluate(const GeneralizedGaussian& term, const std::vector<double>& t);
complexd evaluate(const GaussianMixture& f, const std::vector<double>& t);

// d = 1 evaluation at a complex argument (the analytic continuation in t).
complexd evaluate1(const GeneralizedGaussian& term, complexd t);
complexd evaluate1(const GaussianMixture& f, complexd t);

// The term whose restriction to the real line is conj(term(t)); parameters
// (c, a, nu) conjugate/negate, so it is again a class member.
GeneralizedGaussian conjugated(const GeneralizedGaussian& term);

// pi(z) f = M_omega T_x f, i.e. e^{2 pi i t.omega} f(t - x). Term-wise:
// mu -> mu + x, nu -> nu + omega, c -> c * e^{-2 pi i nu.x}.
GeneralizedGaussian time_frequency_shift(const GeneralizedGaussian& term, const PhasePoint& z);
GaussianMixture time_frequency_shift(const GaussianMixture& f, const PhasePoint& z);

// int_{R^d} exp(-pi alpha |t|^2 + b.t + gamma) dt
//   = alpha^{-d/2} exp(b_sq_sum / (4 pi alpha) + gamma),
// with b_sq_sum = sum_j b_j^2, valid for Re(alpha) > 0 (principal branch of
// the power; the argument of alpha stays in the right half-plane, so no
// branch tracking is needed).
complexd gaussian_integral(complexd alpha, complexd b_sq_sum, complexd gamma, int d);

// L^2 inner product <f, h> = int f conj(h), in closed form.
complexd inner_product(const GaussianMixture& f, const GaussianMixture& h);

double l2_norm(const GaussianMixture& f);
double l2_norm(const SampledSignal& f);

// Sample a d=1 mixture on the grid t0 + k*dt, k = 0..n-1.
SampledSignal sample(const GaussianMixture& f, int n, double dt, double t0);

}  // namespace tfa
