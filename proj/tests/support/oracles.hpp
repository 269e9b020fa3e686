// Test-only oracles, independent of the library paths they check:
// an RK4 Schroedinger integrator, the textbook square-barrier transmission,
// a cofactor-expansion determinant for characteristic polynomials, and
// quadrature/rng helpers.
#pragma once
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace rmlab::oracles {

using Complex = std::complex<double>;

// Integrates psi'' = (2m/hbar^2)(V - E) psi from x0 to x1 with fixed-step
// RK4 on the first-order system (psi, psi').
struct OdeState {
    Complex psi, dpsi;
};

inline OdeState integrate_schrodinger(const std::function<double(double)>& potential,
                                      double mass, double hbar, Complex energy, OdeState y0,
                                      double x0, double x1, int steps) {
    const double h = (x1 - x0) / steps;
    const auto rhs = [&](double x, const OdeState& y) {
        return OdeState{y.dpsi,
                        2.0 * mass / (hbar * hbar) * (potential(x) - energy) * y.psi};
    };
    OdeState y = y0;
    double x = x0;
    for (int i = 0; i < steps; ++i) {
        const OdeState k1 = rhs(x, y);
        const OdeState k2 = rhs(x + 0.5 * h, {y.psi + 0.5 * h * k1.psi, y.dpsi + 0.5 * h * k1.dpsi});
        const OdeState k3 = rhs(x + 0.5 * h, {y.psi + 0.5 * h * k2.psi, y.dpsi + 0.5 * h * k2.dpsi});
        const OdeState k4 = rhs(x + h, {y.psi + h * k3.psi, y.dpsi + h * k3.dpsi});
        y.psi += h / 6.0 * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi);
        y.dpsi += h / 6.0 * (k1.dpsi + 2.0 * k2.dpsi + 2.0 * k3.dpsi + k4.dpsi);
        x += h;
    }
    return y;
}

// Transmission amplitude (ratio of e^{ikx} coefficients, so independent of
// where the barrier sits) for a rectangular barrier of height v0 and the
// given width; standard matching result, complex kappa covers E > v0.
inline Complex square_barrier_transmission(double mass, double hbar, double energy, double v0,
                                           double width) {
    const double k = std::sqrt(2.0 * mass * energy) / hbar;
    const Complex kappa = std::sqrt(Complex(2.0 * mass * (v0 - energy), 0.0)) / hbar;
    const Complex ch = std::cosh(kappa * width);
    const Complex sh = std::sinh(kappa * width);
    const Complex mix = 0.5 * (kappa / k - k / kappa) * sh;
    return std::exp(Complex(0.0, -k * width)) / (ch + Complex(0.0, 1.0) * mix);
}

// det(m) by recursive cofactor expansion; exact arithmetic flow, O(n!).
inline Complex cofactor_det(const std::vector<std::vector<Complex>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Complex det = 0.0;
    double sign = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Complex>> minor(n - 1, std::vector<Complex>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        det += sign * m[0][col] * cofactor_det(minor);
        sign = -sign;
    }
    return det;
}

inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline Complex complex_in(std::mt19937_64& gen, double lo, double hi) {
    return {uniform(gen, lo, hi), uniform(gen, lo, hi)};
}

} // namespace rmlab::oracles
