#pragma once
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rmlab {

using Complex = std::complex<double>;

// V(x) = u0 / cosh^2(beta x). u0 > 0 is the barrier, u0 < 0 the well.
struct PotentialParams {
    double u0 = 2.0;
    double beta = 1.0;
    double mass = 1.0;
    double hbar = 1.0;

    // u0 = 0 is allowed as the free-particle limit; every formula
    // degenerates smoothly there (s = 0, T = 1, R = 0).
    void validate() const {
        if (!(beta > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
            throw std::invalid_argument("PotentialParams: beta, mass, hbar must be positive");
        if (!std::isfinite(u0))
            throw std::invalid_argument("PotentialParams: u0 must be finite");
    }
};

enum class SpectralClass { Bound, Resonance, Continuum };

struct SpectralPoint {
    Complex energy;
    Complex wavenumber;
    SpectralClass cls = SpectralClass::Continuum;
};

// Amplitudes at a real scattering energy; |t|^2 + |r|^2 = 1 for real E, real V.
struct ScatteringAmplitudes {
    double k = 0.0;
    Complex t;
    Complex r;
};

// Intermediates of the closed-form transmission expression:
// 1/t = 1/sqrt(a) - sqrt(a), away from a = 1.
struct WkbTransmissionParts {
    Complex xi_tilde;
    Complex a;
    Complex t;
};

struct AccuracyBudget {
    double rel_tol = 1e-12;
    int max_terms = 10000;

    void validate() const {
        if (!(rel_tol > 0.0) || max_terms < 1)
            throw std::invalid_argument("AccuracyBudget: rel_tol > 0 and max_terms >= 1 required");
    }
};

namespace detail {
inline bool near_nonpositive_integer(Complex z, double tol) {
    const double n = std::round(z.real());
    return n <= 0.0 && std::abs(z - Complex(n, 0.0)) <= tol;
}
} // namespace detail

// Parameters of 2F1(a,b;c;z). The branch cut is [1, inf) on the real axis.
struct HypergeometricArgs {
    Complex a, b, c, z;

    HypergeometricArgs(Complex a_, Complex b_, Complex c_, Complex z_)
        : a(a_), b(b_), c(c_), z(z_) {
        if (detail::near_nonpositive_integer(c, 1e-14))
            throw std::invalid_argument("HypergeometricArgs: c must not be a non-positive integer");
    }
};

struct GridSpec {
    double x_min = -14.0;
    double x_max = 14.0;
    int n_points = 400;

    void validate() const {
        if (!(x_min < x_max) || n_points < 8)
            throw std::invalid_argument("GridSpec: x_min < x_max and n_points >= 8 required");
    }
    double length() const { return x_max - x_min; }
};

struct ScalingAngle {
    double theta = 0.0;
    double theta_max = 0.25 * M_PI;

    void validate() const {
        if (!(theta >= 0.0) || !(theta < theta_max) || !(theta_max < 0.5 * M_PI))
            throw std::invalid_argument("ScalingAngle: require 0 <= theta < theta_max < pi/2");
    }
};

enum class CsmClass { Bound, Resonance, RotatedContinuum, Unclassified };

struct CsmSpectrum {
    ScalingAngle theta;
    std::vector<Complex> eigenvalues;
    std::vector<CsmClass> classes;
    double residual_norm = 0.0;
};

struct SearchBox {
    double re_min, re_max, im_min, im_max;
    int max_depth = 12;
    int boundary_samples = 256;

    void validate() const {
        if (!(re_min < re_max) || !(im_min < im_max) || max_depth < 1 || boundary_samples < 8)
            throw std::invalid_argument("SearchBox: degenerate bounds or budget");
    }
    double scale() const { return std::max(re_max - re_min, im_max - im_min); }
    Complex center() const { return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)}; }
};

struct LocatedZero {
    Complex location;
    int multiplicity = 1;
    double residual = 0.0;
};

// Weights of the spectral decomposition: discrete bound terms, a continuum
// density in k, and (under complex scaling) resonance terms gated by the
// uncovering angle theta_r = |arg E|/2.
struct SpectralMeasure {
    struct BoundTerm {
        double energy;
        double norm;
    };
    struct ResonanceTerm {
        Complex energy;
        Complex norm;
        double theta_r;
    };
    std::vector<BoundTerm> bound_terms;
    std::function<double(double)> continuum_density;
    std::vector<ResonanceTerm> resonance_terms;
};

struct CompletenessReport {
    double cutoff_k = 0.0;
    std::vector<double> test_function_errors;
    double matrix_residual = 0.0;
    std::vector<int> included_resonances;
};

} // namespace rmlab
