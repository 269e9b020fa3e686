#pragma once
#include <vector>

#include "rmlab/types.hpp"

namespace rmlab::model {

// s = (-1 + sqrt(1 - 8 m u0 / (beta hbar)^2)) / 2, principal root (Im >= 0).
Complex s_parameter(const PotentialParams& params);

// k = sqrt(2 m E)/hbar on the first sheet (Im k >= 0).
Complex wavenumber_from_energy(const PotentialParams& params, Complex energy);
Complex energy_from_wavenumber(const PotentialParams& params, Complex k);

// General solution of the Schroedinger equation for u0/cosh^2(beta x) in
// terms of 2F1 at argument (1 - tanh(beta x))/2. The c1 term is outgoing
// and the c2 term incoming as x -> +inf.
Complex wavefunction(const PotentialParams& params, Complex energy, Complex c1, Complex c2,
                     double x);

// d/dx of the same solution, via the contiguous derivative of 2F1.
Complex wavefunction_derivative(const PotentialParams& params, Complex energy, Complex c1,
                                Complex c2, double x);

// xi-tilde = tanh(acosh(sqrt(u0/E))), principal branches; real in (0,1) for
// 0 < E < u0. Throws DegeneratePoint at E = u0.
Complex xi_tilde(const PotentialParams& params, Complex energy);

// Closed-form barrier transmission: A is the squared ratio of 2F1 at the
// mirrored arguments (1 -+ xi-tilde)/2 and 1/T = 1/sqrt(A) - sqrt(A) with
// the principal square root.
WkbTransmissionParts transmission_wkb(const PotentialParams& params, Complex energy);

// Scattering amplitudes from the z -> 1-z connection formula applied to the
// transmitted-wave solution (c1 = 4^{ik/2beta}, c2 = 0): the e^{ikx}
// coefficient at x -> -inf is 1/T, the e^{-ikx} coefficient is R/T.
ScatteringAmplitudes transmission_connection(const PotentialParams& params, double energy);

// arg T at one energy (principal value); sweep-level unwrapping is the
// caller's job (see unwrap_phases).
double phase_shift(const PotentialParams& params, double energy);

// In-place continuous unwrapping of a phase sequence along a sweep.
void unwrap_phases(std::vector<double>& phases);

// 1/T analytically continued to complex k. Zeros on the positive imaginary
// axis are bound states; zeros with Re k > 0, Im k < 0 are resonances.
Complex siegert_condition(const PotentialParams& params, Complex k);

// Classify a zero of siegert_condition into a SpectralPoint.
SpectralPoint classify_pole(const PotentialParams& params, Complex k);

// Continuity of sqrt(A) along a real-E sweep: transmission_wkb uses the
// principal branch pointwise; the sweep helper flips the branch whenever
// that keeps sqrt(A) continuous, recording each flip index.
struct WkbSweepResult {
    std::vector<WkbTransmissionParts> parts;
    std::vector<int> sign_flips;
};
WkbSweepResult transmission_wkb_sweep(const PotentialParams& params,
                                      const std::vector<double>& energies);

} // namespace rmlab::model
