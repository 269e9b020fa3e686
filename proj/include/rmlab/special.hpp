#pragma once
#include "rmlab/types.hpp"

namespace rmlab::special {

// Principal-branch log-gamma (log Gamma continued from the positive real
// axis, conjugate-symmetric). Throws PoleAtNonPositiveInteger within 1e-14
// of {0, -1, -2, ...}.
Complex ln_gamma(Complex z);

// 1/Gamma(z); returns exactly 0 at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

// Gauss hypergeometric 2F1(a,b;c;z) on the principal branch, full complex
// plane, cut on [1, inf). The evaluation region is chosen automatically:
// direct Maclaurin series, Pfaff map z -> z/(z-1), the Gamma-weighted
// connection formulas in (1-z) and 1/z, or the expansion about z0 = 1/2
// for the two lens-shaped regions near exp(+-i pi/3) none of the classic
// maps reaches. Parameter sets within 1e-9 of an integer-degenerate
// connection coefficient are evaluated at a +- i*1e-7 and averaged.
Complex gauss_2f1(const HypergeometricArgs& args, const AccuracyBudget& budget = {});

inline Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z,
                         const AccuracyBudget& budget = {}) {
    return gauss_2f1(HypergeometricArgs(a, b, c, z), budget);
}

} // namespace rmlab::special
