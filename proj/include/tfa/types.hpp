#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace tfa {

using complexd = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr complexd kI{0.0, 1.0};

// Point z = (x, omega) in the time-frequency plane R^{2d}.
struct PhasePoint {
    std::vector<double> x;
    std::vector<double> omega;

    PhasePoint() = default;

    PhasePoint(std::vector<double> x_, std::vector<double> omega_)
        : x(std::move(x_)), omega(std::move(omega_)) {
        validate();
    }

    // d = 1 convenience.
    PhasePoint(double x_, double omega_) : x{x_}, omega{omega_} {}

    int dim() const { return static_cast<int>(x.size()); }

    double norm_sq() const {
        double s = 0.0;
        for (double v : x) s += v * v;
        for (double v : omega) s += v * v;
        return s;
    }

    double norm() const { return std::sqrt(norm_sq()); }

    void validate() const {
        if (x.empty() || x.size() != omega.size())
            throw std::invalid_argument("PhasePoint: x and omega must be nonempty, equal length");
        for (double v : x)
            if (!std::isfinite(v)) throw std::invalid_argument("PhasePoint: non-finite entry");
        for (double v : omega)
            if (!std::isfinite(v)) throw std::invalid_argument("PhasePoint: non-finite entry");
    }
};

inline PhasePoint operator-(const PhasePoint& a, const PhasePoint& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("PhasePoint: dimension mismatch");
    PhasePoint r = a;
    for (int j = 0; j < a.dim(); ++j) {
        r.x[j] -= b.x[j];
        r.omega[j] -= b.omega[j];
    }
    return r;
}

inline PhasePoint operator+(const PhasePoint& a, const PhasePoint& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("PhasePoint: dimension mismatch");
    PhasePoint r = a;
    for (int j = 0; j < a.dim(); ++j) {
        r.x[j] += b.x[j];
        r.omega[j] += b.omega[j];
    }
    return r;
}

// Complexified phase-space variable z = x + i*omega in C^d.
struct ComplexPoint {
    std::vector<complexd> z;

    ComplexPoint() = default;
    explicit ComplexPoint(std::vector<complexd> z_) : z(std::move(z_)) {}
    explicit ComplexPoint(complexd z1) : z{z1} {}

    static ComplexPoint from_phase(const PhasePoint& p) {
        std::vector<complexd> v(p.x.size());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = complexd(p.x[j], p.omega[j]);
        return ComplexPoint(std::move(v));
    }

    PhasePoint to_phase() const {
        std::vector<double> x(z.size()), w(z.size());
        for (std::size_t j = 0; j < z.size(); ++j) {
            x[j] = z[j].real();
            w[j] = z[j].imag();
        }
        return PhasePoint(std::move(x), std::move(w));
    }

    int dim() const { return static_cast<int>(z.size()); }

    // |z|^2 = |x|^2 + |omega|^2 (Hermitian norm).
    double hermitian_norm_sq() const {
        double s = 0.0;
        for (const auto& c : z) s += std::norm(c);
        return s;
    }

    // z^2 = sum_j z_j^2 (complex bilinear square).
    complexd complex_square() const {
        complexd s = 0.0;
        for (const auto& c : z) s += c * c;
        return s;
    }

    // x . omega
    double dot_x_omega() const {
        double s = 0.0;
        for (const auto& c : z) s += c.real() * c.imag();
        return s;
    }
};

}  // namespace tfa
