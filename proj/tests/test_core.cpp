// Core Gaussian-class operations against values computed in this file or by
// direct quadrature.
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "tfa/gaussian.hpp"

using tfa::complexd;
using tfa::kI;
using tfa::kPi;

namespace {

// Quadrature inner product <f, h> = int f conj(h): reuse the contour-shifted
// transform oracle at the phase-space origin, term pair by term pair.
complexd inner_product_oracle(const tfa::GaussianMixture& f, const tfa::GaussianMixture& h) {
    complexd total = 0.0;
    for (const auto& fj : f.terms) {
        for (const auto& hk : h.terms) total += oracle::stft_term_contour(fj, hk, 0.0, 0.0);
    }
    return total;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("construction validates parameters") {
    CHECK_THROWS_AS(tfa::GeneralizedGaussian(1.0, complexd(0.0, 1.0), 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(tfa::GeneralizedGaussian(1.0, complexd(-0.5, 0.0), 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(tfa::GeneralizedGaussian(1.0, 1.0, std::vector<double>{0.0, 1.0},
                                             std::vector<double>{0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(tfa::GeneralizedGaussian(1.0, 1.0, std::vector<double>{},
                                             std::vector<double>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(tfa::GaussianMixture(0), std::invalid_argument);
    // Mixed dimensions in one mixture are rejected.
    std::vector<tfa::GeneralizedGaussian> terms;
    terms.emplace_back(1.0, 1.0, 0.0, 0.0);
    terms.emplace_back(1.0, 1.0, std::vector<double>{0.0, 0.0}, std::vector<double>{0.0, 0.0});
    CHECK_THROWS_AS(tfa::GaussianMixture(1, terms), std::invalid_argument);
    CHECK(tfa::GaussianMixture(1).is_zero());
    CHECK_THROWS_AS(tfa::dilated_gaussian(0.0), std::domain_error);
    CHECK_THROWS_AS(tfa::dilated_gaussian(-1.0), std::domain_error);
}

TEST_CASE("evaluation matches the literal defining expression") {
    oracle::Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const tfa::GaussianMixture f = oracle::random_mixture(rng, 3);
        for (double t : {-1.7, -0.3, 0.0, 0.9, 2.4}) {
            complexd expected = 0.0;
            for (const auto& term : f.terms) expected += oracle::term_at(term, t);
            CHECK(std::abs(tfa::evaluate(f, {t}) - expected) < 1e-14);
            CHECK(std::abs(tfa::evaluate1(f, complexd(t, 0.4)) -
                           [&] {
                               complexd s = 0.0;
                               for (const auto& term : f.terms)
                                   s += oracle::term_at(term, complexd(t, 0.4));
                               return s;
                           }()) < 1e-13);
        }
    }
}

TEST_CASE("standard window norms and inner products") {
    const tfa::GaussianMixture g = tfa::to_mixture(tfa::standard_window(1));
    // <g, g> = int e^{-2 pi t^2} dt = 2^{-1/2}; ||g|| = 2^{-1/4}.
    CHECK(std::abs(tfa::inner_product(g, g) - std::pow(2.0, -0.5)) < 1e-15);
    CHECK(std::abs(tfa::l2_norm(g) - std::pow(2.0, -0.25)) < 1e-15);
    // <f_lambda, g> = (1 + lambda^2)^{-1/2}.
    for (double lambda : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const auto fl = tfa::to_mixture(tfa::dilated_gaussian(lambda));
        CHECK(std::abs(tfa::inner_product(fl, g) - std::pow(1.0 + lambda * lambda, -0.5)) <
              1e-14);
    }
    // |<M_1 g, g>| = 2^{-1/2} e^{-pi/2}: modulation by one unit.
    const auto mg = tfa::to_mixture(tfa::time_frequency_shift(tfa::standard_window(1),
                                                              tfa::PhasePoint(0.0, 1.0)));
    CHECK(std::abs(std::abs(tfa::inner_product(mg, g)) -
                   std::pow(2.0, -0.5) * std::exp(-kPi / 2.0)) < 1e-15);
}

TEST_CASE("closed-form inner products agree with quadrature") {
    oracle::Rng rng(202);
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const tfa::GaussianMixture f = oracle::random_mixture(rng, 3);
        const tfa::GaussianMixture h = oracle::random_mixture(rng, 3);
        const complexd closed = tfa::inner_product(f, h);
        const complexd direct = inner_product_oracle(f, h);
        worst = std::max(worst, std::abs(closed - direct));
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("l2 norm agrees with direct quadrature of the density") {
    oracle::Rng rng(303);
    for (int trial = 0; trial < 10; ++trial) {
        const tfa::GaussianMixture f = oracle::random_mixture(rng, 3);
        const double direct = std::sqrt(oracle::l2_norm_sq(f));
        CHECK(std::abs(tfa::l2_norm(f) - direct) < 1e-10);
    }
    CHECK(tfa::l2_norm(tfa::GaussianMixture(1)) == 0.0);
}

TEST_CASE("conjugation flips evaluation") {
    oracle::Rng rng(404);
    const tfa::GaussianMixture f = oracle::random_mixture(rng, 2);
    for (const auto& term : f.terms) {
        const tfa::GeneralizedGaussian c = tfa::conjugated(term);
        for (double t : {-1.2, 0.1, 1.9}) {
            CHECK(std::abs(tfa::evaluate(c, {t}) - std::conj(tfa::evaluate(term, {t}))) < 1e-14);
        }
    }
}

TEST_CASE("time-frequency shifts compose with the expected phase") {
    // pi(z1) pi(z2) f = e^{-2 pi i x1 . omega2} pi(z1 + z2) f pointwise.
    const tfa::PhasePoint z1(0.7, -0.4), z2(-0.3, 1.1);
    oracle::Rng rng(505);
    const tfa::GaussianMixture f = oracle::random_mixture(rng, 2);
    const auto lhs = tfa::time_frequency_shift(tfa::time_frequency_shift(f, z2), z1);
    const auto rhs = tfa::time_frequency_shift(f, z1 + z2);
    const complexd phase = std::exp(-2.0 * kPi * kI * z1.x[0] * z2.omega[0]);
    for (double t : {-2.0, -0.5, 0.0, 0.8, 1.5}) {
        CHECK(std::abs(tfa::evaluate(lhs, {t}) - phase * tfa::evaluate(rhs, {t})) < 1e-13);
    }
    // And the defining action: (pi(z) f)(t) = e^{2 pi i t omega} f(t - x).
    const tfa::PhasePoint z(1.3, 0.6);
    const auto shifted = tfa::time_frequency_shift(f, z);
    for (double t : {-1.0, 0.2, 2.1}) {
        const complexd expected =
            std::exp(2.0 * kPi * kI * t * z.omega[0]) * tfa::evaluate(f, {t - z.x[0]});
        CHECK(std::abs(tfa::evaluate(shifted, {t}) - expected) < 1e-13);
    }
}

TEST_CASE("shift preserves inner products (unitarity)") {
    oracle::Rng rng(606);
    const tfa::GaussianMixture f = oracle::random_mixture(rng, 3);
    const tfa::GaussianMixture h = oracle::random_mixture(rng, 2);
    const tfa::PhasePoint z(-0.8, 1.4);
    const complexd before = tfa::inner_product(f, h);
    const complexd after =
        tfa::inner_product(tfa::time_frequency_shift(f, z), tfa::time_frequency_shift(h, z));
    CHECK(std::abs(before - after) < 1e-13);
}

TEST_CASE("multidimensional inner products factor over coordinates") {
    // Isotropic terms on R^2 with separable centers: <f, h> in 2d equals the
    // product of the per-coordinate 1d inner products.
    const tfa::GeneralizedGaussian f2(1.0, complexd(1.5, 0.3), {0.4, -0.2}, {0.1, 0.7});
    const tfa::GeneralizedGaussian h2(1.0, complexd(0.8, -0.1), {-0.3, 0.5}, {0.6, -0.4});
    const complexd full = tfa::inner_product(tfa::to_mixture(f2), tfa::to_mixture(h2));
    complexd factored = 1.0;
    for (int j = 0; j < 2; ++j) {
        const tfa::GeneralizedGaussian fj(1.0, f2.spread, f2.center[j], f2.modulation[j]);
        const tfa::GeneralizedGaussian hj(1.0, h2.spread, h2.center[j], h2.modulation[j]);
        factored *= tfa::inner_product(tfa::to_mixture(fj), tfa::to_mixture(hj));
    }
    CHECK(std::abs(full - factored) < 1e-14);
}

TEST_CASE("sampling lays the mixture on the stated grid") {
    oracle::Rng rng(707);
    const tfa::GaussianMixture f = oracle::random_mixture(rng, 2);
    const tfa::SampledSignal s = tfa::sample(f, 64, 0.25, -8.0);
    REQUIRE(s.samples.size() == 64);
    CHECK(s.dt == 0.25);
    CHECK(s.t0 == -8.0);
    for (int k : {0, 13, 63}) {
        CHECK(std::abs(s.samples[k] - tfa::evaluate(f, {-8.0 + 0.25 * k})) < 1e-14);
    }
    CHECK_THROWS_AS(tfa::sample(f, 0, 0.25, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tfa::sample(f, 8, -0.1, 0.0), std::invalid_argument);
}

TEST_CASE("gaussian integral master formula spot checks") {
    // alpha = 1, b = 0, gamma = 0, d = 1: the plain unit Gaussian integral.
    CHECK(std::abs(tfa::gaussian_integral(1.0, 0.0, 0.0, 1) - 1.0) < 1e-15);
    // d = 3 with alpha = 2: alpha^{-3/2}.
    CHECK(std::abs(tfa::gaussian_integral(2.0, 0.0, 0.0, 3) - std::pow(2.0, -1.5)) < 1e-15);
    // Shift invariance in closed form: b completes the square.
    const complexd alpha(1.0, 0.7);
    const complexd b(0.4, -2.0);
    const complexd direct = tfa::gaussian_integral(alpha, b * b, 0.0, 1);
    auto integrand = [&](double t) -> complexd { return std::exp(-kPi * alpha * t * t + b * t); };
    const auto q = tfa::integrate(integrand, 0.0, 1.0, 1e-13, 1.0);
    REQUIRE(q.converged);
    CHECK(std::abs(direct - q.value) < 1e-12);
    CHECK_THROWS_AS(tfa::gaussian_integral(complexd(-1.0, 0.0), 0.0, 0.0, 1),
                    std::invalid_argument);
}

}  // TEST_SUITE
