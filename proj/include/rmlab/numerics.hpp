#pragma once
#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "rmlab/kernels.hpp"
#include "rmlab/types.hpp"

namespace rmlab::numerics {

// Transmission/reflection for an arbitrary localized potential by composing
// piecewise-constant-potential transfer matrices over the grid cells. The
// result is accepted only when runs at n and 2n cells agree to 1e-6
// componentwise (Richardson check); the finer result is returned.
ScatteringAmplitudes transfer_matrix_transmission(
    const std::function<double(double)>& potential, double mass, double hbar, double energy,
    const GridSpec& grid, kernels::Exec exec = kernels::Exec::Parallel);

// Interior collocation nodes of the sine (Dirichlet box) discretization.
std::vector<double> dvr_nodes(const GridSpec& grid);

// Complex-scaled Hamiltonian H_theta = -e^{-2 i theta} (hbar^2/2m) D^2
//                                      + u0 / cosh^2(beta x e^{i theta})
// on the sine basis over [x_min, x_max] with Dirichlet walls; dense complex
// symmetric. Throws ScaledSingularity when a pole of the scaled potential
// comes too close to a collocation node.
Eigen::MatrixXcd csm_hamiltonian(const PotentialParams& params, const ScalingAngle& angle,
                                 const GridSpec& grid,
                                 kernels::Exec exec = kernels::Exec::Parallel);

struct EigResult {
    std::vector<Complex> values;
    Eigen::MatrixXcd vectors;   // columns, unit 2-norm
    double residual_norm = 0.0; // max_i |M v_i - lambda_i v_i| / |M|_F
};

// Dense complex eigenproblem. The residual contract (<= 1e-9) is checked by
// the caller's tests; failures of the underlying QR iteration surface as
// NoConvergenceQR.
EigResult eig_complex(const Eigen::MatrixXcd& m);

struct RawCsmSpectrum {
    ScalingAngle theta;
    std::vector<Complex> eigenvalues;
    double residual_norm = 0.0;
};

// Hamiltonian build + eigensolve at one angle.
RawCsmSpectrum raw_csm_spectrum(const PotentialParams& params, const ScalingAngle& angle,
                                const GridSpec& grid,
                                kernels::Exec exec = kernels::Exec::Parallel);

// Compare spectra at two angles: eigenvalues present in both (within
// 1e-3|E| + 1e-6) are theta-invariant, hence Bound (Im ~ 0, Re < 0) or
// Resonance (Im < 0); unmatched ones near arg E = -2 theta are the rotated
// continuum; the rest stay Unclassified.
CsmSpectrum classify_spectrum(const RawCsmSpectrum& at_theta, const RawCsmSpectrum& at_other);

} // namespace rmlab::numerics
