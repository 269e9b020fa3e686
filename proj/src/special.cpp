#include "rmlab/special.hpp"

#include <algorithm>
#include <array>

#include "rmlab/errors.hpp"

namespace rmlab::special {
namespace {

constexpr double kPi = 3.14159265358979323846;

// B_{2k}/(2k(2k-1)) for the Stirling tail, k = 1..12.
constexpr std::array<double, 12> kStirlingCoeff = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    77683.0 / 5796.0,
    -236364091.0 / 1506960.0,
};

bool near_integer(Complex z, double tol) {
    return std::abs(z - Complex(std::round(z.real()), 0.0)) <= tol;
}

} // namespace

Complex ln_gamma(Complex z) {
    if (detail::near_nonpositive_integer(z, 1e-14))
        throw PoleAtNonPositiveInteger("ln_gamma: pole at z = " + std::to_string(z.real()));

    // Shift into the Stirling region; log Gamma(z) = log Gamma(z+n) - sum log(z+j).
    // With principal logs this reproduces the continuation from the positive
    // real axis on both half planes (conjugate symmetry handles Im z < 0).
    Complex shift = 0.0;
    Complex w = z;
    while (w.real() < 12.0) {
        shift += std::log(w);
        w += 1.0;
    }
    Complex result = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi);
    const Complex w2 = w * w;
    Complex wp = 1.0 / w;
    for (double ck : kStirlingCoeff) {
        result += ck * wp;
        wp /= w2;
    }
    return result - shift;
}

Complex reciprocal_gamma(Complex z) {
    if (detail::near_nonpositive_integer(z, 1e-14)) return 0.0;
    return std::exp(-ln_gamma(z));
}

namespace {

struct SeriesOutcome {
    Complex value;
    bool converged = false;
};

// Maclaurin sum; geometric once n >> |a|,|b|, so the caller keeps |z|
// meaningfully below 1. Two consecutive small terms end the sum, so an
// accidental zero term cannot stop it early.
SeriesOutcome maclaurin_2f1(Complex a, Complex b, Complex c, Complex z,
                            const AccuracyBudget& budget) {
    SeriesOutcome out;
    Complex sum = 1.0;
    Complex term = 1.0;
    int small_streak = 0;
    for (int n = 0; n < budget.max_terms; ++n) {
        const Complex denom = (c + double(n)) * double(n + 1);
        if (std::abs(denom) < 1e-290) return out; // inner c hit a non-positive integer
        term *= (a + double(n)) * (b + double(n)) / denom * z;
        sum += term;
        if (term == Complex(0.0, 0.0)) { // terminating polynomial case
            out.value = sum;
            out.converged = true;
            return out;
        }
        if (std::abs(term) <= budget.rel_tol * std::abs(sum)) {
            if (++small_streak >= 2) {
                out.value = sum;
                out.converged = true;
                return out;
            }
        } else {
            small_streak = 0;
        }
    }
    return out;
}

// Gamma-product prefactor exp(sum ln_gamma(num)) * prod reciprocal_gamma(den).
// Reciprocal factors make poles in the denominator annihilate the term.
Complex gamma_ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den) {
    Complex lg = 0.0;
    for (Complex n : num) lg += ln_gamma(n);
    Complex out = std::exp(lg);
    for (Complex d : den) out *= reciprocal_gamma(d);
    return out;
}

enum class Map { Direct, Pfaff, OneMinusZ, Inverse, HalfPoint };

struct Candidate {
    Map map;
    double ratio;      // modulus of the transformed argument (convergence rate)
    bool degenerate;   // a Gamma coefficient sits within tol of a pole
};

constexpr double kDegenerateTol = 1e-9;

std::array<Candidate, 5> rank_maps(Complex a, Complex b, Complex c, Complex z) {
    const double az = std::abs(z);
    const double a1z = std::abs(1.0 - z);
    const double apf = (a1z > 0) ? az / a1z : 1e300;
    const double ainv = (az > 0) ? 1.0 / az : 1e300;
    const double ahp = (std::abs(z - 0.5) > 0) ? 0.5 / std::abs(z - 0.5) : 1e300;
    const bool ab_int = near_integer(a - b, kDegenerateTol);
    const bool cab_int = near_integer(c - a - b, kDegenerateTol);
    std::array<Candidate, 5> cands = {{
        {Map::Direct, az, false},
        {Map::Pfaff, apf, false},
        {Map::OneMinusZ, a1z, cab_int},
        {Map::Inverse, ainv, ab_int},
        {Map::HalfPoint, ahp, ab_int},
    }};
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& l, const Candidate& r) { return l.ratio < r.ratio; });
    // Prefer the pure series routes while they converge acceptably: the
    // Gamma-weighted two-term formulas carry a cancellation floor the plain
    // sums do not. |z| <= 0.5 pins the direct series, which also keeps the
    // a <-> b exchange bit-exact there (the Pfaff prefactor is not).
    if (az <= 0.5) {
        std::stable_partition(cands.begin(), cands.end(),
                              [](const Candidate& cand) { return cand.map == Map::Direct; });
    } else if (std::min(az, apf) <= 0.92) {
        const Map series = (az <= apf) ? Map::Direct : Map::Pfaff;
        std::stable_partition(cands.begin(), cands.end(),
                              [series](const Candidate& cand) { return cand.map == series; });
    }
    return cands;
}

SeriesOutcome eval_direct(Complex a, Complex b, Complex c, Complex z,
                          const AccuracyBudget& budget) {
    return maclaurin_2f1(a, b, c, z, budget);
}

SeriesOutcome eval_pfaff(Complex a, Complex b, Complex c, Complex z,
                         const AccuracyBudget& budget) {
    SeriesOutcome inner = maclaurin_2f1(a, c - b, c, z / (z - 1.0), budget);
    if (inner.converged) inner.value *= std::pow(1.0 - z, -a);
    return inner;
}

SeriesOutcome eval_one_minus_z(Complex a, Complex b, Complex c, Complex z,
                               const AccuracyBudget& budget) {
    const Complex w = 1.0 - z;
    SeriesOutcome s1 = maclaurin_2f1(a, b, a + b - c + 1.0, w, budget);
    SeriesOutcome s2 = maclaurin_2f1(c - a, c - b, c - a - b + 1.0, w, budget);
    if (!s1.converged || !s2.converged) return {};
    const Complex g1 = gamma_ratio({c, c - a - b}, {c - a, c - b});
    const Complex g2 = gamma_ratio({c, a + b - c}, {a, b});
    return {g1 * s1.value + g2 * std::pow(w, c - a - b) * s2.value, true};
}

SeriesOutcome eval_inverse(Complex a, Complex b, Complex c, Complex z,
                           const AccuracyBudget& budget) {
    const Complex w = 1.0 / z;
    SeriesOutcome s1 = maclaurin_2f1(a, a - c + 1.0, a - b + 1.0, w, budget);
    SeriesOutcome s2 = maclaurin_2f1(b, b - c + 1.0, b - a + 1.0, w, budget);
    if (!s1.converged || !s2.converged) return {};
    const Complex g1 = gamma_ratio({c, b - a}, {b, c - a});
    const Complex g2 = gamma_ratio({c, a - b}, {a, c - b});
    return {g1 * std::pow(-z, -a) * s1.value + g2 * std::pow(-z, -b) * s2.value, true};
}

// Expansion about z0 = 1/2 (Buhring): the one map that converges in the two
// lens regions around exp(+-i pi/3) where |z|, |1-z|, |z/(z-1)| and 1/|z|
// are all ~1. Coefficient recurrence follows from inserting
// (z0-z)^{-lambda} sum d_n (z-z0)^{-n} into the hypergeometric equation.
SeriesOutcome half_point_sum(Complex lambda, Complex other, Complex a, Complex b, Complex c,
                             Complex t, const AccuracyBudget& budget) {
    const Complex q = 0.5 * (a + b + 1.0) - c; // (a+b+1)z0 - c at z0 = 1/2
    SeriesOutcome out;
    Complex sum = 1.0;
    Complex dm1 = 1.0; // d_{m-1}
    Complex dm2 = 0.0; // d_{m-2}
    Complex tp = 1.0;
    int small_streak = 0;
    for (int m = 1; m < budget.max_terms; ++m) {
        const Complex denom = double(m) * (double(m) + lambda - other);
        if (std::abs(denom) < 1e-290) return out;
        const Complex d = ((lambda + double(m - 1)) * q * dm1 +
                           0.25 * (lambda + double(m - 2)) * (lambda + double(m - 1)) * dm2) /
                          denom;
        tp /= t;
        const Complex term = d * tp;
        sum += term;
        dm2 = dm1;
        dm1 = d;
        if (std::abs(term) <= budget.rel_tol * std::abs(sum)) {
            if (++small_streak >= 2) {
                out.value = sum;
                out.converged = true;
                return out;
            }
        } else {
            small_streak = 0;
        }
    }
    return out;
}

SeriesOutcome eval_half_point(Complex a, Complex b, Complex c, Complex z,
                              const AccuracyBudget& budget) {
    const Complex t = z - 0.5;
    SeriesOutcome sa = half_point_sum(a, b, a, b, c, t, budget);
    SeriesOutcome sb = half_point_sum(b, a, a, b, c, t, budget);
    if (!sa.converged || !sb.converged) return {};
    const Complex g1 = gamma_ratio({c, b - a}, {b, c - a});
    const Complex g2 = gamma_ratio({c, a - b}, {a, c - b});
    return {g1 * std::pow(-t, -a) * sa.value + g2 * std::pow(-t, -b) * sb.value, true};
}

SeriesOutcome eval_map(Map map, Complex a, Complex b, Complex c, Complex z,
                       const AccuracyBudget& budget) {
    switch (map) {
        case Map::Direct: return eval_direct(a, b, c, z, budget);
        case Map::Pfaff: return eval_pfaff(a, b, c, z, budget);
        case Map::OneMinusZ: return eval_one_minus_z(a, b, c, z, budget);
        case Map::Inverse: return eval_inverse(a, b, c, z, budget);
        case Map::HalfPoint: return eval_half_point(a, b, c, z, budget);
    }
    return {};
}

Complex dispatch(Complex a, Complex b, Complex c, Complex z, const AccuracyBudget& budget,
                 bool allow_shift);

// Integer-degenerate connection coefficients: evaluate at a +- i*eps and
// average; the mean cancels the linear term of the parameter perturbation.
Complex shifted_average(Complex a, Complex b, Complex c, Complex z,
                        const AccuracyBudget& budget) {
    constexpr double kEps = 1e-7;
    const Complex up = dispatch(a + Complex(0.0, kEps), b, c, z, budget, false);
    const Complex dn = dispatch(a - Complex(0.0, kEps), b, c, z, budget, false);
    return 0.5 * (up + dn);
}

Complex dispatch(Complex a, Complex b, Complex c, Complex z, const AccuracyBudget& budget,
                 bool allow_shift) {
    const auto cands = rank_maps(a, b, c, z);
    // Prefer the fastest non-degenerate map; fall through the ranking on
    // convergence failure.
    for (const Candidate& cand : cands) {
        if (cand.ratio > 0.999) break;
        if (cand.degenerate) continue;
        SeriesOutcome out = eval_map(cand.map, a, b, c, z, budget);
        if (out.converged) return out.value;
    }
    if (allow_shift) {
        for (const Candidate& cand : cands) {
            if (cand.ratio > 0.999) break;
            if (!cand.degenerate) continue;
            return shifted_average(a, b, c, z, budget);
        }
    } else {
        throw DegenerateParameters("gauss_2f1: degenerate parameters after perturbation");
    }
    throw NoConvergence("gauss_2f1: no transformation region converges for z = (" +
                        std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")");
}

} // namespace

Complex gauss_2f1(const HypergeometricArgs& args, const AccuracyBudget& budget) {
    budget.validate();
    if (args.z == Complex(0.0, 0.0)) return 1.0;
    return dispatch(args.a, args.b, args.c, args.z, budget, true);
}

} // namespace rmlab::special
