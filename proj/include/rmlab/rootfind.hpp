#pragma once
#include <functional>
#include <utility>
#include <vector>

#include "rmlab/kernels.hpp"
#include "rmlab/types.hpp"

namespace rmlab::rootfind {

using ComplexFn = std::function<Complex(Complex)>;

// Argument-principle winding number of f around the box boundary: zeros
// minus poles inside. Boundary sampling is refined (doubled) until every
// adjacent phase step is below pi/2. Throws BoundaryZero when |f| on the
// boundary dips under 1e-12 of its boundary maximum, or when refinement
// cannot certify the phase steps.
int winding_number(const ComplexFn& f, const SearchBox& box,
                   kernels::Exec exec = kernels::Exec::Parallel);

// Recursive quadrisection until each sub-box holds winding <= 1 (or the
// depth cap clusters a multiple zero), then Newton with central-difference
// derivative. Split lines are jittered when a zero sits on them.
std::vector<LocatedZero> find_zeros(const ComplexFn& f, const SearchBox& box,
                                    kernels::Exec exec = kernels::Exec::Parallel);

struct BreitWignerFit {
    double e_r = 0.0;
    double gamma = 0.0;
    double background = 0.0;
    double amplitude = 0.0;
};

// Least-squares Lorentzian y ~ background + a (G/2)^2 / ((E-E_R)^2 + (G/2)^2)
// by Gauss-Newton with step halving, started from weighted-moment estimates.
BreitWignerFit breit_wigner_fit(const std::vector<std::pair<double, double>>& points);

} // namespace rmlab::rootfind
