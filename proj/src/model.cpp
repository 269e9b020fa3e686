#include "rmlab/model.hpp"

#include <cmath>

#include "rmlab/errors.hpp"
#include "rmlab/special.hpp"

namespace rmlab::model {
namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

Complex f21(Complex a, Complex b, Complex c, Complex z) {
    try {
        return special::gauss_2f1(a, b, c, z);
    } catch (const std::invalid_argument& e) {
        throw HypergeometricFailure(e.what());
    } catch (const PoleAtNonPositiveInteger& e) {
        throw HypergeometricFailure(e.what());
    } catch (const NoConvergence& e) {
        throw HypergeometricFailure(e.what());
    } catch (const DegenerateParameters& e) {
        throw HypergeometricFailure(e.what());
    }
}

struct SolutionFrame {
    Complex k, s, a, b, c;
    double xi;        // tanh(beta x)
    double z;         // (1 - xi)/2 evaluated as 1/(1 + e^{2 beta x}), stable at both ends
    double sech2;     // 1 - xi^2
};

SolutionFrame make_frame(const PotentialParams& p, Complex energy, double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("wavefunction: x must be finite");
    SolutionFrame f;
    f.k = wavenumber_from_energy(p, energy);
    f.s = s_parameter(p);
    const Complex ikb = kI * f.k / p.beta;
    f.a = -ikb - f.s;
    f.b = -ikb + f.s + 1.0;
    f.c = -ikb + 1.0;
    const double u = p.beta * x;
    f.xi = std::tanh(u);
    f.z = 1.0 / (1.0 + std::exp(2.0 * u));
    const double sech = 1.0 / std::cosh(u);
    f.sech2 = sech * sech;
    return f;
}

} // namespace

Complex s_parameter(const PotentialParams& params) {
    params.validate();
    const double hb = params.beta * params.hbar;
    const Complex radicand = 1.0 - 8.0 * params.mass * params.u0 / (hb * hb);
    return 0.5 * (-1.0 + std::sqrt(radicand));
}

Complex wavenumber_from_energy(const PotentialParams& params, Complex energy) {
    return std::sqrt(2.0 * params.mass * energy) / params.hbar;
}

Complex energy_from_wavenumber(const PotentialParams& params, Complex k) {
    return params.hbar * params.hbar * k * k / (2.0 * params.mass);
}

Complex wavefunction(const PotentialParams& params, Complex energy, Complex c1, Complex c2,
                     double x) {
    params.validate();
    if (energy == Complex(0.0, 0.0)) throw DegeneratePoint("wavefunction: E = 0");
    const SolutionFrame f = make_frame(params, energy, x);
    const Complex ikb = kI * f.k / params.beta;
    const Complex pref = std::pow(Complex(f.sech2, 0.0), -0.5 * ikb);
    Complex value = 0.0;
    if (c1 != Complex(0.0, 0.0)) value += c1 * f21(f.a, f.b, f.c, f.z);
    if (c2 != Complex(0.0, 0.0))
        value += c2 * std::pow(Complex(f.z, 0.0), ikb) * f21(f.s + 1.0, -f.s, ikb + 1.0, f.z);
    return pref * value;
}

Complex wavefunction_derivative(const PotentialParams& params, Complex energy, Complex c1,
                                Complex c2, double x) {
    params.validate();
    if (energy == Complex(0.0, 0.0)) throw DegeneratePoint("wavefunction_derivative: E = 0");
    const SolutionFrame f = make_frame(params, energy, x);
    const Complex ikb = kI * f.k / params.beta;
    const Complex pref = std::pow(Complex(f.sech2, 0.0), -0.5 * ikb);
    const double dz = -0.5 * params.beta * f.sech2; // dz/dx
    // P'(x) = i k xi P(x); F' through the contiguous derivative of 2F1.
    Complex inner = 0.0;
    Complex dinner = 0.0;
    if (c1 != Complex(0.0, 0.0)) {
        const Complex f1 = f21(f.a, f.b, f.c, f.z);
        const Complex df1 = f.a * f.b / f.c * f21(f.a + 1.0, f.b + 1.0, f.c + 1.0, f.z);
        inner += c1 * f1;
        dinner += c1 * df1 * dz;
    }
    if (c2 != Complex(0.0, 0.0)) {
        const Complex c2f = ikb + 1.0;
        const Complex zp = std::pow(Complex(f.z, 0.0), ikb);
        const Complex f2 = f21(f.s + 1.0, -f.s, c2f, f.z);
        const Complex df2 = (f.s + 1.0) * (-f.s) / c2f * f21(f.s + 2.0, 1.0 - f.s, c2f + 1.0, f.z);
        inner += c2 * zp * f2;
        dinner += c2 * zp * (df2 + ikb * f2 / f.z) * dz;
    }
    return pref * (kI * f.k * f.xi * inner + dinner);
}

Complex xi_tilde(const PotentialParams& params, Complex energy) {
    params.validate();
    if (energy == Complex(0.0, 0.0)) throw DegeneratePoint("xi_tilde: E = 0");
    if (std::abs(energy - Complex(params.u0, 0.0)) <= 1e-14 * std::abs(params.u0))
        throw DegeneratePoint("xi_tilde: E = u0 (A = 1 degeneracy)");
    const Complex w = std::sqrt(Complex(params.u0, 0.0) / energy);
    // principal acosh(w) = log(w + sqrt(w+1) sqrt(w-1))
    const Complex acosh_w = std::log(w + std::sqrt(w + 1.0) * std::sqrt(w - 1.0));
    return std::tanh(acosh_w);
}

WkbTransmissionParts transmission_wkb(const PotentialParams& params, Complex energy) {
    WkbTransmissionParts parts;
    parts.xi_tilde = xi_tilde(params, energy);
    const Complex k = wavenumber_from_energy(params, energy);
    const Complex s = s_parameter(params);
    const Complex ikb = kI * k / params.beta;
    const Complex a = -ikb - s;
    const Complex b = -ikb + s + 1.0;
    const Complex c = -ikb + 1.0;
    const Complex f_minus = f21(a, b, c, 0.5 * (1.0 - parts.xi_tilde));
    const Complex f_plus = f21(a, b, c, 0.5 * (1.0 + parts.xi_tilde));
    const Complex ratio = f_minus / f_plus;
    parts.a = ratio * ratio;
    const Complex root = std::sqrt(parts.a);
    parts.t = root / (1.0 - parts.a);
    return parts;
}

ScatteringAmplitudes transmission_connection(const PotentialParams& params, double energy) {
    params.validate();
    if (!(energy > 0.0)) throw DegeneratePoint("transmission_connection: requires E > 0");
    if (std::abs(energy - params.u0) <= 1e-14 * std::abs(params.u0))
        throw DegeneratePoint("transmission_connection: E = u0");
    const double k = std::sqrt(2.0 * params.mass * energy) / params.hbar;
    const Complex inv_t = siegert_condition(params, Complex(k, 0.0));
    const Complex s = s_parameter(params);
    const Complex ikb = kI * k / params.beta;
    // R/T = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)) with c-a = s+1, c-b = -s.
    const Complex r_over_t = std::exp(special::ln_gamma(1.0 - ikb) + special::ln_gamma(ikb)) *
                             special::reciprocal_gamma(s + 1.0) * special::reciprocal_gamma(-s);
    ScatteringAmplitudes amp;
    amp.k = k;
    amp.t = 1.0 / inv_t;
    amp.r = r_over_t * amp.t;
    return amp;
}

double phase_shift(const PotentialParams& params, double energy) {
    return std::arg(transmission_connection(params, energy).t);
}

void unwrap_phases(std::vector<double>& phases) {
    for (std::size_t i = 1; i < phases.size(); ++i) {
        double d = phases[i] - phases[i - 1];
        while (d > kPi) {
            phases[i] -= 2.0 * kPi;
            d = phases[i] - phases[i - 1];
        }
        while (d < -kPi) {
            phases[i] += 2.0 * kPi;
            d = phases[i] - phases[i - 1];
        }
    }
}

Complex siegert_condition(const PotentialParams& params, Complex k) {
    params.validate();
    if (k == Complex(0.0, 0.0)) throw DegeneratePoint("siegert_condition: k = 0");
    const Complex s = s_parameter(params);
    const Complex ikb = kI * k / params.beta;
    const Complex a = -ikb - s;
    const Complex b = -ikb + s + 1.0;
    // 1/T = Gamma(c) Gamma(a+b-c) / (Gamma(a) Gamma(b)), c = 1 - ik/beta.
    // Reciprocal gammas keep the zeros (poles of T) exact.
    return std::exp(special::ln_gamma(1.0 - ikb) + special::ln_gamma(-ikb)) *
           special::reciprocal_gamma(a) * special::reciprocal_gamma(b);
}

SpectralPoint classify_pole(const PotentialParams& params, Complex k) {
    SpectralPoint pt;
    const double scale = 1.0 + std::abs(k);
    if (std::abs(k.real()) <= 1e-8 * scale && k.imag() > 0.0) {
        pt.cls = SpectralClass::Bound;
        k = Complex(0.0, k.imag()); // the class invariant pins k to the axis
    } else if (k.real() > 0.0 && k.imag() < 0.0) {
        pt.cls = SpectralClass::Resonance;
    } else {
        pt.cls = SpectralClass::Continuum;
    }
    pt.wavenumber = k;
    pt.energy = energy_from_wavenumber(params, k);
    return pt;
}

WkbSweepResult transmission_wkb_sweep(const PotentialParams& params,
                                      const std::vector<double>& energies) {
    WkbSweepResult result;
    result.parts.resize(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i)
        result.parts[i] = transmission_wkb(params, Complex(energies[i], 0.0));
    // Continuity pass: flip sqrt(A) (hence T) where the principal branch jumps.
    Complex prev_root;
    bool have_prev = false;
    bool flipped = false;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        Complex root = std::sqrt(result.parts[i].a);
        if (flipped) root = -root;
        if (have_prev && std::abs(-root - prev_root) < std::abs(root - prev_root)) {
            root = -root;
            flipped = !flipped;
            result.sign_flips.push_back(static_cast<int>(i));
        }
        result.parts[i].t = root / (1.0 - result.parts[i].a);
        prev_root = root;
        have_prev = true;
    }
    return result;
}

} // namespace rmlab::model
