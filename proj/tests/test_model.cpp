#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmlab/errors.hpp"
#include "rmlab/model.hpp"
#include "rmlab/numerics.hpp"
#include "fixtures/fixtures.hpp"
#include "support/oracles.hpp"

using namespace rmlab;

namespace {

double rel(Complex got, Complex want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

double sech2_potential(const PotentialParams& p, double x) {
    const double c = std::cosh(p.beta * x);
    return p.u0 / (c * c);
}

} // namespace

TEST_CASE("s_parameter closed forms") {
    PotentialParams p;
    p.u0 = 0.0;
    CHECK(std::abs(model::s_parameter(p)) < 1e-15);
    p.u0 = 0.125; // radicand exactly zero
    CHECK(rel(model::s_parameter(p), Complex(-0.5, 0.0)) < 1e-12);
    p.u0 = 2.0;
    CHECK(rel(model::s_parameter(p), Complex(-0.5, 0.5 * std::sqrt(15.0))) < 1e-15);
    p.u0 = -2.0; // well: real s
    CHECK(rel(model::s_parameter(p), Complex(0.5 * (-1.0 + std::sqrt(17.0)), 0.0)) < 1e-15);
}

TEST_CASE("xi_tilde closed forms, fixtures and branch behaviour") {
    PotentialParams p;
    CHECK_THROWS_AS(model::xi_tilde(p, Complex(2.0, 0.0)), DegeneratePoint);
    CHECK(rel(model::xi_tilde(p, Complex(0.5, 0.0)), Complex(0.5 * std::sqrt(3.0), 0.0)) <
          1e-14);
    for (const auto& f : testfix::kXiTilde) {
        PotentialParams q;
        q.u0 = f.u0;
        CHECK(rel(model::xi_tilde(q, Complex(f.e_re, f.e_im)), f.value) < 1e-12);
    }
    // real segment 0 < E < u0 maps into (0,1)
    auto gen = oracles::rng(5);
    for (int i = 0; i < 50; ++i) {
        const double e = oracles::uniform(gen, 1e-3, 2.0 - 1e-3);
        const Complex xi = model::xi_tilde(p, Complex(e, 0.0));
        CHECK(std::abs(xi.imag()) < 1e-14);
        CHECK(xi.real() > 0.0);
        CHECK(xi.real() < 1.0);
    }
    // above the barrier: purely imaginary, i*sqrt(E/u0 - 1)
    const Complex xi3 = model::xi_tilde(p, Complex(3.0, 0.0));
    CHECK(std::abs(xi3.real()) < 1e-14);
    CHECK(std::abs(xi3.imag() - std::sqrt(0.5)) < 1e-14);
}

TEST_CASE("wavefunction is finite at x = 0 and outgoing-normalized at +inf") {
    PotentialParams p;
    const Complex energy(1.0, 0.0);
    const Complex k = model::wavenumber_from_energy(p, energy);
    const Complex v0 = model::wavefunction(p, energy, Complex(1, 0), Complex(0, 0), 0.0);
    CHECK(std::isfinite(v0.real()));
    CHECK(std::isfinite(v0.imag()));
    CHECK(std::abs(v0) > 0.0);

    const Complex c1 = std::pow(Complex(4.0, 0.0), Complex(0, 0.5) * k / p.beta);
    const double x = 12.0 / p.beta;
    const Complex tail = model::wavefunction(p, energy, c1, Complex(0, 0), x) *
                         std::exp(-Complex(0, 1) * k * x);
    CHECK(std::abs(tail - 1.0) < 1e-6);
}

TEST_CASE("wavefunction against RK4 integration from the asymptotic region") {
    PotentialParams p;
    const Complex energy(1.0, 0.0);
    const Complex k = model::wavenumber_from_energy(p, energy);
    const double x1 = 12.0, x_probe = 0.7;
    // c1 = 1, c2 = 0 behaves like 4^{-ik/2} e^{ikx} for large x
    const Complex amp = std::pow(Complex(4.0, 0.0), -Complex(0, 0.5) * k / p.beta);
    oracles::OdeState y0{amp * std::exp(Complex(0, 1) * k * x1),
                         Complex(0, 1) * k * amp * std::exp(Complex(0, 1) * k * x1)};
    const auto oracle = oracles::integrate_schrodinger(
        [&](double x) { return sech2_potential(p, x); }, p.mass, p.hbar, energy, y0, x1,
        x_probe, 40000);
    const Complex lib = model::wavefunction(p, energy, Complex(1, 0), Complex(0, 0), x_probe);
    CHECK(rel(lib, oracle.psi) < 1e-7);
    const Complex dlib =
        model::wavefunction_derivative(p, energy, Complex(1, 0), Complex(0, 0), x_probe);
    CHECK(rel(dlib, oracle.dpsi) < 1e-7);
}

TEST_CASE("Wronskian of the two independent solutions is x-independent") {
    PotentialParams p;
    for (const Complex energy : {Complex(1.0, 0.0), Complex(0.8, 0.3)}) {
        Complex w_ref;
        for (int i = 0; i < 10; ++i) {
            const double x = -2.7 + 0.6 * i;
            const Complex u1 = model::wavefunction(p, energy, Complex(1, 0), Complex(0, 0), x);
            const Complex du1 =
                model::wavefunction_derivative(p, energy, Complex(1, 0), Complex(0, 0), x);
            const Complex u2 = model::wavefunction(p, energy, Complex(0, 0), Complex(1, 0), x);
            const Complex du2 =
                model::wavefunction_derivative(p, energy, Complex(0, 0), Complex(1, 0), x);
            const Complex w = u1 * du2 - du1 * u2;
            if (i == 0) w_ref = w;
            CHECK(rel(w, w_ref) < 1e-8);
        }
    }
}

TEST_CASE("transmission_connection free particle and high-energy limits") {
    PotentialParams free;
    free.u0 = 0.0;
    const ScatteringAmplitudes amp = model::transmission_connection(free, 1.7);
    CHECK(std::abs(amp.t - 1.0) < 1e-14);
    CHECK(std::abs(amp.r) < 1e-14);

    PotentialParams p;
    CHECK(std::norm(model::transmission_connection(p, 50.0).t) >= 0.999);
}

TEST_CASE("transmission_connection against the transfer-matrix oracle") {
    PotentialParams p;
    GridSpec grid{-14.0, 14.0, 8192};
    const ScatteringAmplitudes conn = model::transmission_connection(p, 1.0);
    const ScatteringAmplitudes tm = numerics::transfer_matrix_transmission(
        [&](double x) { return sech2_potential(p, x); }, p.mass, p.hbar, 1.0, grid);
    CHECK(std::abs(conn.t - tm.t) < 1e-6);
    CHECK(std::abs(conn.r - tm.r) < 1e-6);
}

TEST_CASE("unitarity on random parameters") {
    auto gen = oracles::rng(17);
    int tested = 0;
    while (tested < 200) {
        PotentialParams p;
        p.u0 = oracles::uniform(gen, -3.0, 3.0);
        p.beta = oracles::uniform(gen, 0.5, 2.0);
        p.mass = oracles::uniform(gen, 0.5, 2.0);
        const double e = oracles::uniform(gen, 0.05, 9.0);
        if (std::abs(e - p.u0) < 1e-3) continue;
        const ScatteringAmplitudes amp = model::transmission_connection(p, e);
        CHECK(std::abs(std::norm(amp.t) + std::norm(amp.r) - 1.0) < 1e-8);
        ++tested;
    }
}

TEST_CASE("transmission_wkb degeneracy and internal consistency") {
    PotentialParams p;
    CHECK_THROWS_AS(model::transmission_wkb(p, Complex(2.0, 0.0)), DegeneratePoint);
    auto gen = oracles::rng(29);
    for (int i = 0; i < 30; ++i) {
        const double e = oracles::uniform(gen, 0.3, 7.0);
        if (std::abs(e - p.u0) < 0.05) continue;
        const WkbTransmissionParts parts = model::transmission_wkb(p, Complex(e, 0.0));
        const Complex root = std::sqrt(parts.a);
        CHECK(rel(1.0 / parts.t, 1.0 / root - root) < 1e-12);
    }
}

TEST_CASE("closed-form transmission versus the oracle pair is reported") {
    // The two oracles must agree with each other; the barrier formula is
    // compared and logged, not asserted (its validity is the open
    // verification question the transmission report exists for).
    PotentialParams p;
    GridSpec grid{-14.0, 14.0, 16384};
    for (const double e : {1.0, 3.0, 5.0}) {
        const ScatteringAmplitudes conn = model::transmission_connection(p, e);
        const ScatteringAmplitudes tm = numerics::transfer_matrix_transmission(
            [&](double x) { return sech2_potential(p, x); }, p.mass, p.hbar, e, grid);
        CHECK(std::abs(conn.t - tm.t) < 1e-6);
        const WkbTransmissionParts wkb = model::transmission_wkb(p, Complex(e, 0.0));
        MESSAGE("E = ", e, ": |T_wkb| = ", std::abs(wkb.t), ", |T_oracle| = ",
                std::abs(conn.t), ", rel dev = ", rel(wkb.t, conn.t));
    }
}

TEST_CASE("phase shift: free particle, continuity, pole cross-check") {
    PotentialParams free;
    free.u0 = 0.0;
    for (const double e : {0.3, 1.1, 4.2}) CHECK(std::abs(model::phase_shift(free, e)) < 1e-14);

    PotentialParams p;
    std::vector<double> es, phases;
    for (double e = 0.505; e < 5.5; e += 0.01) {
        es.push_back(e);
        phases.push_back(model::phase_shift(p, e));
    }
    model::unwrap_phases(phases);
    for (std::size_t i = 1; i < phases.size(); ++i)
        CHECK(std::abs(phases[i] - phases[i - 1]) < 0.5); // smooth, certainly no pi jumps

    // resonance signature: d(delta)/dE peaks at E_R with height 2/Gamma
    const double e_r = 1.75, gamma = 2.0 * 0.968245836552;
    double peak_e = 0.0, peak_d = -1e300;
    for (std::size_t i = 1; i + 1 < es.size(); ++i) {
        const double d = (phases[i + 1] - phases[i - 1]) / (es[i + 1] - es[i - 1]);
        if (d > peak_d) {
            peak_d = d;
            peak_e = es[i];
        }
    }
    CHECK(std::abs(peak_e - e_r) < 0.1 * e_r);
    CHECK(std::abs(peak_d - 2.0 / gamma) < 0.1 * (2.0 / gamma));
    // rise across a window of width Gamma: pi/2 for an ideal isolated pole
    auto phase_at = [&](double e) {
        return phases[std::size_t((e - es.front()) / 0.01 + 0.5)];
    };
    const double rise = phase_at(e_r + 0.5 * gamma) - phase_at(e_r - 0.5 * gamma);
    CHECK(rise > 0.7 * (M_PI / 2.0));
    CHECK(rise < 1.3 * (M_PI / 2.0));
}

TEST_CASE("siegert_condition zeros: free particle, well, barrier") {
    PotentialParams free;
    free.u0 = 0.0;
    for (const Complex k : {Complex(1.0, 0.0), Complex(0.4, -0.7), Complex(0.0, 2.0)})
        CHECK(rel(model::siegert_condition(free, k), Complex(1.0, 0.0)) < 1e-12);

    // well: bound poles at k = i beta (s - n)
    PotentialParams well;
    well.u0 = -2.0;
    const double s = 0.5 * (-1.0 + std::sqrt(17.0));
    for (int n = 0; n < 2; ++n) {
        const Complex kb(0.0, s - n);
        CHECK(std::abs(model::siegert_condition(well, kb)) < 1e-10);
        CHECK(std::abs(model::siegert_condition(well, kb + Complex(0.0, 0.05))) > 1e-4);
    }

    // barrier: resonance poles at k = beta(sqrt(15)/2 - i(n + 1/2))
    PotentialParams p;
    for (int n = 0; n < 3; ++n) {
        const Complex kr(0.5 * std::sqrt(15.0), -(n + 0.5));
        CHECK(std::abs(model::siegert_condition(p, kr)) < 1e-10);
    }
}

TEST_CASE("classify_pole quadrants and energy consistency") {
    PotentialParams p;
    const SpectralPoint bound = model::classify_pole(p, Complex(1e-12, 1.2));
    CHECK(bound.cls == SpectralClass::Bound);
    CHECK(bound.energy.real() < 0.0);
    CHECK(std::abs(bound.energy.imag()) < 1e-10);
    const SpectralPoint res = model::classify_pole(p, Complex(1.9, -0.5));
    CHECK(res.cls == SpectralClass::Resonance);
    const SpectralPoint cont = model::classify_pole(p, Complex(1.4, 0.0));
    CHECK(cont.cls == SpectralClass::Continuum);
    for (const SpectralPoint& pt : {bound, res, cont})
        CHECK(rel(pt.energy,
                  p.hbar * p.hbar * pt.wavenumber * pt.wavenumber / (2.0 * p.mass)) < 1e-12);
}

TEST_CASE("wkb sweep keeps sqrt(A) continuous and records flips") {
    PotentialParams p;
    std::vector<double> energies;
    for (double e = 0.25; e < 7.9; e += 0.157) energies.push_back(e);
    const model::WkbSweepResult sweep = model::transmission_wkb_sweep(p, energies);
    REQUIRE(sweep.parts.size() == energies.size());
    Complex prev;
    bool have_prev = false;
    for (const WkbTransmissionParts& parts : sweep.parts) {
        const Complex root = parts.t * (1.0 - parts.a); // the branch actually chosen
        if (have_prev) CHECK(std::abs(root - prev) <= std::abs(root + prev) + 1e-12);
        prev = root;
        have_prev = true;
    }
    for (int idx : sweep.sign_flips) {
        CHECK(idx > 0);
        CHECK(idx < static_cast<int>(energies.size()));
    }
}
