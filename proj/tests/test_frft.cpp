// Fractional Fourier transform: Fourier special case, quadrature oracle,
// fixed point, group law, unitarity, rotation covariance, degenerate angles.
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "tfa/frft.hpp"
#include "tfa/stft.hpp"

using tfa::complexd;
using tfa::kI;
using tfa::kPi;

TEST_SUITE("frft") {

TEST_CASE("quarter turn is the fourier transform") {
    // f_lambda^ (u) = lambda^{-1/2} e^{-pi u^2 / lambda^2} for f_lambda with
    // amplitude lambda^{1/2}; here dilated_gaussian has amplitude 1, so
    // F f_lambda(u) = lambda^{-1} e^{-pi u^2/lambda^2}.
    for (double lambda : {0.5, 1.0, 1.7}) {
        const auto fl = tfa::to_mixture(tfa::dilated_gaussian(lambda));
        const auto hat = tfa::frft(fl, 0.5 * kPi);
        for (double u : {-1.8, -0.4, 0.0, 0.9, 2.2}) {
            const complexd expected =
                std::exp(-kPi * u * u / (lambda * lambda)) / lambda;
            CHECK(std::abs(tfa::evaluate(hat, {u}) - expected) < 1e-13);
        }
    }
    // Modulation becomes translation: (M_b f)^ = T_b f^.
    const auto mod = tfa::to_mixture(tfa::GeneralizedGaussian(1.0, 1.0, 0.0, 0.7));
    const auto modhat = tfa::frft(mod, 0.5 * kPi);
    const auto plain = tfa::to_mixture(tfa::standard_window(1));
    const auto plainhat = tfa::frft(plain, 0.5 * kPi);
    for (double u : {-1.0, 0.2, 1.3}) {
        CHECK(std::abs(tfa::evaluate(modhat, {u}) - tfa::evaluate(plainhat, {u - 0.7})) < 1e-13);
    }
}

TEST_CASE("closed form matches the direct kernel integral") {
    oracle::Rng rng(1011);
    double worst = 0.0;
    for (double theta : {0.3, 0.7, 1.2, 2.5, -0.9, 4.0}) {
        for (int trial = 0; trial < 5; ++trial) {
            const tfa::GaussianMixture f = oracle::random_mixture(rng, 3);
            const tfa::GaussianMixture ft = tfa::frft(f, theta);
            for (double u : {-1.5, 0.0, 0.8, 2.0}) {
                const complexd closed = tfa::evaluate(ft, {u});
                const complexd direct = oracle::frft_point(f, theta, u);
                worst = std::max(worst, std::abs(closed - direct));
            }
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("the unit window is a fixed point at every angle") {
    const auto g = tfa::to_mixture(tfa::standard_window(1));
    for (double theta : {1e-16, 1e-8, 0.25, 0.5 * kPi, 1.9, kPi - 1e-8, kPi, kPi + 0.3,
                         2.0 * kPi, 6.0, -0.7, 11.0}) {
        const auto gt = tfa::frft(g, theta);
        for (double u : {-1.1, 0.0, 0.6, 1.9}) {
            CHECK(std::abs(tfa::evaluate(gt, {u}) - std::exp(-kPi * u * u)) < 1e-12);
        }
    }
}

TEST_CASE("exact multiples of pi reduce to identity and parity") {
    oracle::Rng rng(1022);
    const tfa::GaussianMixture f = oracle::random_mixture(rng, 3);
    const auto id = tfa::frft(f, 2.0 * kPi);
    const auto par = tfa::frft(f, kPi);
    for (double u : {-1.4, -0.2, 0.5, 1.8}) {
        CHECK(std::abs(tfa::evaluate(id, {u}) - tfa::evaluate(f, {u})) < 1e-13);
        CHECK(std::abs(tfa::evaluate(par, {u}) - tfa::evaluate(f, {-u})) < 1e-13);
    }
}

TEST_CASE("near-degenerate angles stay continuous") {
    // Just inside the reduction threshold the composed path must agree with
    // the limit operator.
    oracle::Rng rng(1033);
    const tfa::GaussianMixture f = oracle::random_mixture(rng, 2);
    for (double eps : {1e-8, 1e-10, 1e-12}) {
        const auto near_id = tfa::frft(f, eps);
        const auto near_par = tfa::frft(f, kPi + eps);
        for (double u : {-0.9, 0.3, 1.2}) {
            CHECK(std::abs(tfa::evaluate(near_id, {u}) - tfa::evaluate(f, {u})) < 1e-6);
            CHECK(std::abs(tfa::evaluate(near_par, {u}) - tfa::evaluate(f, {-u})) < 1e-6);
        }
    }
}

TEST_CASE("group law in magnitude and unitarity") {
    oracle::Rng rng(1044);
    for (int trial = 0; trial < 10; ++trial) {
        const tfa::GaussianMixture f = oracle::random_mixture(rng, 3);
        const double t1 = rng.uniform(0.2, 2.5), t2 = rng.uniform(0.2, 2.5);
        const auto steps = tfa::frft(tfa::frft(f, t2), t1);
        const auto direct = tfa::frft(f, t1 + t2);
        for (double u : {-1.3, 0.0, 0.7, 1.6}) {
            // Metaplectic representation: composition may differ by a
            // unimodular constant, so compare magnitudes pointwise.
            CHECK(std::abs(std::abs(tfa::evaluate(steps, {u})) -
                           std::abs(tfa::evaluate(direct, {u}))) < 1e-10);
        }
        CHECK(std::abs(tfa::l2_norm(tfa::frft(f, t1)) - tfa::l2_norm(f)) < 1e-10);
    }
    // Where no branch crossing occurs the composition matches with phase.
    const tfa::GaussianMixture h = oracle::random_mixture(rng, 2);
    const auto steps = tfa::frft(tfa::frft(h, 0.4), 0.5);
    const auto direct = tfa::frft(h, 0.9);
    for (double u : {-0.8, 0.1, 1.1}) {
        CHECK(std::abs(tfa::evaluate(steps, {u}) - tfa::evaluate(direct, {u})) < 1e-11);
    }
}

TEST_CASE("rotation matrices compose and invert") {
    const tfa::Rotation r1(0.7);
    CHECK(r1.matrix[0][0] == doctest::Approx(std::cos(0.7)));
    CHECK(r1.matrix[0][1] == doctest::Approx(std::sin(0.7)));
    const tfa::PhasePoint z(1.3, -0.4);
    const tfa::PhasePoint round = tfa::rotate(tfa::rotate(z, 0.7), -0.7);
    CHECK(round.x[0] == doctest::Approx(z.x[0]).epsilon(1e-14));
    CHECK(round.omega[0] == doctest::Approx(z.omega[0]).epsilon(1e-14));
    // Quarter turn sends (x, omega) to (omega, -x).
    const tfa::PhasePoint q = tfa::rotate(z, 0.5 * kPi);
    CHECK(q.x[0] == doctest::Approx(-0.4).epsilon(1e-14));
    CHECK(q.omega[0] == doctest::Approx(-1.3).epsilon(1e-14));
}

TEST_CASE("transform magnitude rotates with the argument") {
    oracle::Rng rng(1055);
    for (int trial = 0; trial < 10; ++trial) {
        const tfa::GaussianMixture f = oracle::random_mixture(rng, 3);
        const double theta = rng.uniform(-3.0, 3.0);
        const tfa::PhasePoint z(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        CHECK(tfa::verify_covariance(f, theta, z) < 1e-10);
    }
}

}  // TEST_SUITE
