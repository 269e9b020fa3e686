#pragma once
#include <functional>
#include <vector>

#include "rmlab/kernels.hpp"
#include "rmlab/numerics.hpp"
#include "rmlab/types.hpp"

namespace rmlab::spectral {

// Outgoing-wave Green function built from the two mirrored outgoing
// solutions over their Wronskian; (E - H) G = delta(x - x'), so the free
// kernel is (m/(i hbar^2 k)) e^{ik|x-x'|}. Throws WronskianVanishes when E
// sits on a bound-state (or continued pole) energy.
Complex green_function(const PotentialParams& params, Complex energy, double x, double x2);

// Continuum weight 1/|F_k|^2 with the Jost convention F_k = 1/T(k),
// i.e. |T(k)|^2.
double jost_normalization(const PotentialParams& params, double k);

// Weak test of bound + two-channel continuum completeness: reconstructs
// each test function from scattering (and, for a well, bound) states with
// the k-integral cut at k_cutoff, and reports sup-norm errors. Throws
// QuadratureNotConverged when trapezoid and Simpson weights disagree.
// k_intervals = 0 picks the resolution from the cutoff.
CompletenessReport completeness_check(const PotentialParams& params, const GridSpec& grid,
                                      double k_cutoff,
                                      const std::vector<std::function<double(double)>>& tests,
                                      kernels::Exec exec = kernels::Exec::Parallel,
                                      int k_intervals = 0);

// Spectral measure carried by a classified complex-scaled spectrum: bound
// terms always, continuum density |T(k)|^2 / (2 pi), and each resonance
// exactly when the contour rotated by 2 theta has passed its pole
// (theta >= theta_r = |arg E|/2).
SpectralMeasure csm_spectral_assembly(const CsmSpectrum& spectrum, const ScalingAngle& theta,
                                      const PotentialParams& params, const GridSpec& grid,
                                      kernels::Exec exec = kernels::Exec::Parallel);

// Discrete realization of completeness under complex scaling: c-normalized
// eigenvectors (sum v_i^2 = 1, no conjugation) must resolve the identity,
// and the max-norm of (sum_n v_n v_n^T) - I is reported.
CompletenessReport csm_completeness_check(const PotentialParams& params,
                                          const ScalingAngle& angle, const GridSpec& grid,
                                          kernels::Exec exec = kernels::Exec::Parallel);

// c-product norm N^2 = e^{i theta} integral of psi^2 along the scaled ray
// for the eigenvector matching the given resonance, anchored by the
// interpolated value at x = 0 (a fixed point of the scaling, making N^2
// comparable across theta). Throws NotYetUncovered when 2 theta <= |arg E|.
Complex resonance_norm(const PotentialParams& params, const SpectralPoint& resonance,
                       const ScalingAngle& angle, const GridSpec& grid,
                       kernels::Exec exec = kernels::Exec::Parallel);

// Max-norm residual of sum_n v_n v_n^T - I for c-normalized eigenvector
// columns; the OpenMP-vs-serial switch is the kernel benchmarked by
// rmlab_bench. Throws DefectiveSpectrum when a c-norm degenerates.
double cproduct_identity_residual(const Eigen::MatrixXcd& vectors,
                                  kernels::Exec exec = kernels::Exec::Parallel);

} // namespace rmlab::spectral
