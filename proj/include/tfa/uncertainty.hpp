#pragma once

#include <vector>

#include "tfa/gaussian.hpp"
#include "tfa/stft.hpp"

namespace tfa {

enum class Geometry { cylinder, sphere };

// Result of a supremum search of |V_g f| over a boundary geometry (window
// g(t) = e^{-pi t^2}, d = 1).
struct SupReport {
    Geometry geometry = Geometry::cylinder;
    double R = 0.0;
    double sup_value = 0.0;
    PhasePoint argmax{0.0, 0.0};
    double x_truncation = 0.0;    // cylinder only: certified half-width of the x search box
    double grid_resolution = 0.0; // scan step along the geometry (arc length for spheres)
    bool refined = false;         // local maxima were refined by golden section
};

// sup over the cylinder {(x, omega) : |omega| = R} of |V_g f| (d = 1):
// x is truncated to a certified box via the term envelopes (discarded mass
// below tol * sup / 10), scanned on an oscillation-aware grid, and every
// local grid maximum is refined by golden section. tol is relative.
SupReport cylinder_sup(const GaussianMixture& f, double R, double tol);

// sup over the sphere {z : |z| = R} of |V_g f| (d = 1), by angle grid plus
// golden-section refinement of every local maximum.
SupReport sphere_sup(const GaussianMixture& f, double R, double tol);

// The two radius bounds as functions of the concentration ratio N > 1:
// sqrt(log N / pi) for the cylinder and sqrt(2 log N / pi) for the sphere.
double bound_cylinder(double N);
double bound_sphere(double N);

struct TheoremReport {
    Geometry theorem = Geometry::cylinder;
    double R = 0.0;
    double N_effective = 0.0;       // |<f, g>| / sup
    double bound = 0.0;             // NaN when not applicable
    bool holds = false;
    double margin = 0.0;            // R - bound, signed; NaN when not applicable
    double sup_value = 0.0;
    double inner_product_abs = 0.0;
    bool not_applicable = false;    // N_effective <= 1: the hypothesis fails, vacuously true
    double tolerance = 0.0;         // strictness tolerance applied to the comparison
};

// Checks the radius inequality for the given geometry: computes
// N_effective = |<f,g>| / sup_geometry(f, R); when N_effective > 1, the bound
// formula applies and holds = (R > bound - tol) for the cylinder (strict
// inequality up to floating point) or (R >= bound - tol) for the sphere.
// N_effective <= 1 is reported as not applicable (holds vacuously).
TheoremReport verify_theorem(const GaussianMixture& f, double R, Geometry geometry,
                             double tol = 1e-9);

struct SharpnessRow {
    double lambda = 0.0;
    double r_min_numeric = 0.0;  // bisection: smallest R whose cylinder condition holds
    double r_min_formula = 0.0;  // sqrt((1 + lambda^2) log N / pi)
};

// For each lambda, the smallest R such that
// sup_{|omega| = R} |V_g f_lambda| <= |<f_lambda, g>| / N,
// found by bisection against the numeric cylinder supremum, next to the
// closed-form value; r_min decreases to bound_cylinder(N) as lambda -> 0+.
std::vector<SharpnessRow> sharpness_sweep(double N, const std::vector<double>& lambdas);

}  // namespace tfa
