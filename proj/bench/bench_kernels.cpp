// Wall-clock comparison of the serial reference paths against the OpenMP
// kernels: transfer-matrix chain products, complex-scaled Hamiltonian
// assembly + eigensolve prep, the c-product completeness residual, and a
// transmission sweep.

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "rmlab/kernels.hpp"
#include "rmlab/model.hpp"
#include "rmlab/numerics.hpp"
#include "rmlab/spectral.hpp"

using namespace rmlab;
using kernels::Exec;

namespace {

template <class F>
double timed(F&& f) {
    const double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-34s %9.3f ms %9.3f ms   speedup %.2fx\n", name, 1e3 * serial,
                1e3 * parallel, serial / parallel);
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %12s %12s\n", "kernel", "serial", "openmp");

    const PotentialParams p;
    auto potential = [&](double x) {
        const double c = std::cosh(p.beta * x);
        return p.u0 / (c * c);
    };

    {
        GridSpec grid{-14.0, 14.0, 262144};
        ScatteringAmplitudes a, b;
        const double ts = timed([&] {
            a = numerics::transfer_matrix_transmission(potential, p.mass, p.hbar, 1.0, grid,
                                                       Exec::Serial);
        });
        const double tp = timed([&] {
            b = numerics::transfer_matrix_transmission(potential, p.mass, p.hbar, 1.0, grid,
                                                       Exec::Parallel);
        });
        report("transfer_matrix n=262144", ts, tp);
        std::printf("   |t_serial - t_parallel| = %.3e\n", std::abs(a.t - b.t));
    }

    {
        GridSpec grid{-14.0, 14.0, 500};
        const ScalingAngle angle{0.5};
        Eigen::MatrixXcd hs, hp;
        const double ts =
            timed([&] { hs = numerics::csm_hamiltonian(p, angle, grid, Exec::Serial); });
        const double tp =
            timed([&] { hp = numerics::csm_hamiltonian(p, angle, grid, Exec::Parallel); });
        report("csm_hamiltonian n=500", ts, tp);
        std::printf("   max entry diff = %.3e\n", (hs - hp).cwiseAbs().maxCoeff());

        const numerics::EigResult eig = numerics::eig_complex(hp);
        double rs = 0, rp = 0;
        const double trs =
            timed([&] { rs = spectral::cproduct_identity_residual(eig.vectors, Exec::Serial); });
        const double trp = timed(
            [&] { rp = spectral::cproduct_identity_residual(eig.vectors, Exec::Parallel); });
        report("cproduct_residual n=500", trs, trp);
        std::printf("   residual serial %.3e, parallel %.3e\n", rs, rp);
    }

    {
        std::vector<double> energies(64);
        for (int i = 0; i < 64; ++i) energies[i] = 0.2 + 7.8 * i / 63.0;
        GridSpec grid{-14.0, 14.0, 16384};
        std::vector<Complex> out(64);
        auto sweep = [&](Exec exec) {
            kernels::for_each_index(64, exec, [&](int i) {
                out[i] = numerics::transfer_matrix_transmission(potential, p.mass, p.hbar,
                                                                energies[i], grid, Exec::Serial)
                             .t;
            });
        };
        const double ts = timed([&] { sweep(Exec::Serial); });
        const double tp = timed([&] { sweep(Exec::Parallel); });
        report("transmission sweep 64 energies", ts, tp);
    }

    return 0;
}
