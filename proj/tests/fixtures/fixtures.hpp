// Generated by gen_fixtures.py -- do not edit by hand.
// 80-digit mpmath values, each cross-checked by an independent route.
#pragma once
#include <complex>

namespace rmlab::testfix {

struct LnGammaFixture { std::complex<double> z, value; };
struct Hyp2f1Fixture { std::complex<double> a, b, c, z, value; };
struct XiTildeFixture { double u0, e_re, e_im; std::complex<double> value; };

inline const LnGammaFixture kLnGamma[] = {
    {{3.00000000000000000e+00, 4.00000000000000000e+00}, {-1.75662678460378419e+00, 4.74266443803465787e+00}},
    {{-3.29999999999999982e+00, 6.99999999999999956e-01}, {-2.48235819954218195e+00, -1.10093520774955849e+01}},
    {{2.50000000000000000e-01, -6.00000000000000000e+00}, {-8.95356132536742777e+00, -4.35959454961970838e+00}},
    {{1.25000000000000000e+01, 2.00000000000000000e+00}, {1.85685376282462578e+01, 4.97955882611815159e+00}},
    {{-5.00000000000000000e-01, -2.50000000000000000e+00}, {-3.94395344758422262e+00, 1.96063362068201608e+00}},
};

inline const Hyp2f1Fixture kHyp2f1[] = {
    {{2.99999999999999989e-01, 2.00000000000000011e-01}, {-6.99999999999999956e-01, 0.00000000000000000e+00}, {1.10000000000000009e+00, -4.00000000000000022e-01}, {2.50000000000000000e-01, 1.00000000000000006e-01}, {9.86214929173529931e-01, -5.75504643629415474e-02}},
    {{1.50000000000000000e+00, 0.00000000000000000e+00}, {2.50000000000000000e+00, 1.00000000000000000e+00}, {4.09999999999999964e+00, 0.00000000000000000e+00}, {-4.50000000000000011e-01, 2.00000000000000011e-01}, {6.63258875261876102e-01, 2.66090703144020190e-04}},
    {{8.00000000000000044e-01, -2.99999999999999989e-01}, {1.19999999999999996e+00, 0.00000000000000000e+00}, {2.29999999999999982e+00, 5.00000000000000000e-01}, {8.19999999999999951e-01, 5.00000000000000028e-02}, {1.58063009458389514e+00, -5.59854995622593998e-01}},
    {{1.10000000000000009e+00, 4.00000000000000022e-01}, {-1.69999999999999996e+00, 1.00000000000000006e-01}, {2.60000000000000009e+00, 0.00000000000000000e+00}, {-3.20000000000000018e+00, 5.00000000000000000e-01}, {4.91896826942383480e+00, 3.06626229978359310e-01}},
    {{9.00000000000000022e-01, 0.00000000000000000e+00}, {1.39999999999999991e+00, 2.00000000000000011e-01}, {3.20000000000000018e+00, -2.99999999999999989e-01}, {3.50000000000000000e+00, 2.00000000000000000e+00}, {2.36167639063693924e-01, 6.44420853824059003e-01}},
    {{7.50000000000000000e-01, 1.00000000000000006e-01}, {1.30000000000000004e+00, -2.00000000000000011e-01}, {2.00000000000000000e+00, 2.99999999999999989e-01}, {5.00000000000000000e-01, 8.00000000000000044e-01}, {1.02776515383820488e+00, 5.58656337015234650e-01}},
    {{1.19999999999999996e+00, 2.99999999999999989e-01}, {4.00000000000000022e-01, 0.00000000000000000e+00}, {1.89999999999999991e+00, -1.00000000000000006e-01}, {5.00000000000000000e-01, 3.49999999999999978e-01}, {1.06391229395533671e+00, 1.84837578094289884e-01}},
    {{2.20000000000000018e+00, 0.00000000000000000e+00}, {3.10000000000000009e+00, 0.00000000000000000e+00}, {5.90000000000000036e+00, 0.00000000000000000e+00}, {9.92999999999999994e-01, 0.00000000000000000e+00}, {1.59872379196466152e+01, 0.00000000000000000e+00}},
    {{5.00000000000000000e-01, -3.35070523547680343e+00}, {5.00000000000000000e-01, 5.22278110730613365e-01}, {1.00000000000000000e+00, -1.41421356237309515e+00}, {1.46446609406726241e-01, 0.00000000000000000e+00}, {1.23749517688892685e+00, 7.28518669479738951e-02}},
    {{5.99999999999999978e-01, -5.00000000000000000e-01}, {1.80000000000000004e+00, 0.00000000000000000e+00}, {2.39999999999999991e+00, 2.00000000000000011e-01}, {5.00000000000000000e-01, -7.50000000000000000e-01}, {6.55739819742942043e-01, -3.20134508090687275e-01}},
};

inline const XiTildeFixture kXiTilde[] = {
    {2.00000000000000000e+00, 3.00000000000000000e+00, 0.00000000000000000e+00, {0.00000000000000000e+00, 7.07106781186547573e-01}},
    {2.00000000000000000e+00, 1.50000000000000000e+00, 4.00000000000000022e-01, {5.33927060501545703e-01, -1.87291499902748432e-01}},
    {2.00000000000000000e+00, 5.99999999999999978e-01, -2.99999999999999989e-01, {8.41394988445919423e-01, 8.91376832877589925e-02}},
};

} // namespace rmlab::testfix
