#include "rmlab/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "rmlab/errors.hpp"

namespace rmlab::numerics {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct Mat2 {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};
};

Mat2 mul(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

// factors[m-1] * ... * factors[0], chunked for the parallel path. The chunk
// count is fixed by the problem size (not the thread count) so the result
// does not depend on the scheduler.
Mat2 chain_product(const std::vector<Mat2>& factors, kernels::Exec exec) {
    const int m = static_cast<int>(factors.size());
    const int chunks = (exec == kernels::Exec::Parallel && m > 256) ? 64 : 1;
    std::vector<Mat2> partial(chunks);
    kernels::for_each_index(chunks, exec, [&](int ci) {
        const int lo = static_cast<int>(std::int64_t(m) * ci / chunks);
        const int hi = static_cast<int>(std::int64_t(m) * (ci + 1) / chunks);
        Mat2 acc;
        for (int i = lo; i < hi; ++i) acc = mul(factors[i], acc);
        partial[ci] = acc;
    });
    Mat2 total;
    for (const Mat2& p : partial) total = mul(p, total);
    return total;
}

ScatteringAmplitudes transfer_pass(const std::function<double(double)>& potential, double mass,
                                   double hbar, double energy, double x_min, double x_max,
                                   int cells, kernels::Exec exec) {
    const double dx = (x_max - x_min) / cells;
    const double k = std::sqrt(2.0 * mass * energy) / hbar;
    const Complex ik{0.0, 1.0};

    auto wavenum = [&](double v) {
        return std::sqrt(Complex(2.0 * mass * (energy - v), 0.0)) / hbar;
    };
    // factor i: propagate across cell i, then match into cell i+1 (the last
    // cell matches back into the free region with q = k).
    std::vector<Mat2> factors(cells + 1);
    factors[0] = [&] {
        const Complex q1 = wavenum(potential(x_min + 0.5 * dx));
        const Complex rr = k / q1;
        return Mat2{0.5 * (1.0 + rr), 0.5 * (1.0 - rr), 0.5 * (1.0 - rr), 0.5 * (1.0 + rr)};
    }();
    kernels::for_each_index(cells, exec, [&](int i) {
        const Complex qi = wavenum(potential(x_min + (i + 0.5) * dx));
        const Complex qn = (i + 1 < cells) ? wavenum(potential(x_min + (i + 1.5) * dx))
                                           : Complex(k, 0.0);
        const Complex ep = std::exp(ik * qi * dx);
        const Complex em = 1.0 / ep;
        const Complex rr = qi / qn;
        const Mat2 prop{ep, 0.0, 0.0, em};
        const Mat2 match{0.5 * (1.0 + rr), 0.5 * (1.0 - rr), 0.5 * (1.0 - rr),
                         0.5 * (1.0 + rr)};
        factors[i + 1] = mul(match, prop);
    });
    const Mat2 total = chain_product(factors, exec);

    // Right side carries only the transmitted wave: with det(total) = 1,
    // T = e^{-ikL} / M11 and R = -(M10/M11) e^{2 i k x_min}.
    ScatteringAmplitudes amp;
    amp.k = k;
    amp.t = std::exp(-ik * k * (x_max - x_min)) / total.d;
    amp.r = -(total.c / total.d) * std::exp(2.0 * ik * k * x_min);
    if (!std::isfinite(amp.t.real()) || !std::isfinite(amp.t.imag()) ||
        !std::isfinite(amp.r.real()) || !std::isfinite(amp.r.imag()))
        throw NotConverged("transfer_matrix_transmission: non-finite amplitudes");
    return amp;
}

} // namespace

ScatteringAmplitudes transfer_matrix_transmission(
    const std::function<double(double)>& potential, double mass, double hbar, double energy,
    const GridSpec& grid, kernels::Exec exec) {
    grid.validate();
    if (!(energy > 0.0))
        throw std::invalid_argument("transfer_matrix_transmission: requires E > 0");
    if (std::abs(potential(grid.x_min)) >= 1e-9 * energy ||
        std::abs(potential(grid.x_max)) >= 1e-9 * energy)
        throw std::invalid_argument(
            "transfer_matrix_transmission: potential not negligible at grid ends");

    const ScatteringAmplitudes coarse =
        transfer_pass(potential, mass, hbar, energy, grid.x_min, grid.x_max, grid.n_points, exec);
    const ScatteringAmplitudes fine = transfer_pass(potential, mass, hbar, energy, grid.x_min,
                                                    grid.x_max, 2 * grid.n_points, exec);
    if (std::abs(fine.t - coarse.t) >= 1e-6 || std::abs(fine.r - coarse.r) >= 1e-6)
        throw NotConverged("transfer_matrix_transmission: Richardson check failed");
    return fine;
}

std::vector<double> dvr_nodes(const GridSpec& grid) {
    grid.validate();
    const int n = grid.n_points;
    const double dx = grid.length() / (n + 1);
    std::vector<double> nodes(n);
    for (int j = 0; j < n; ++j) nodes[j] = grid.x_min + (j + 1) * dx;
    return nodes;
}

Eigen::MatrixXcd csm_hamiltonian(const PotentialParams& params, const ScalingAngle& angle,
                                 const GridSpec& grid, kernels::Exec exec) {
    params.validate();
    angle.validate();
    grid.validate();
    const int n = grid.n_points;
    const double length = grid.length();
    const std::vector<double> nodes = dvr_nodes(grid);

    // Sine-basis kinetic energy in the collocation representation:
    // K = U diag(hbar^2 k_m^2 / 2m) U^T with the orthogonal DST-I matrix U.
    std::vector<double> basis_energy(n);
    for (int m = 0; m < n; ++m) {
        const double km = (m + 1) * kPi / length;
        basis_energy[m] = params.hbar * params.hbar * km * km / (2.0 * params.mass);
    }
    const double norm = std::sqrt(2.0 / (n + 1));
    Eigen::MatrixXd dst(n, n);
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m)
            dst(j, m) = norm * std::sin((j + 1) * (m + 1) * kPi / (n + 1));

    const Complex scale = std::exp(Complex(0.0, -2.0 * angle.theta));
    const Complex rot = std::exp(Complex(0.0, angle.theta));
    Eigen::MatrixXcd h(n, n);
    kernels::for_each_index(n, exec, [&](int j) {
        for (int l = j; l < n; ++l) {
            double kin = 0.0;
            for (int m = 0; m < n; ++m) kin += dst(j, m) * basis_energy[m] * dst(l, m);
            h(j, l) = scale * kin;
            h(l, j) = h(j, l);
        }
    });
    for (int j = 0; j < n; ++j) {
        const Complex ch = std::cosh(params.beta * nodes[j] * rot);
        if (std::abs(ch) < 1e-3)
            throw ScaledSingularity("csm_hamiltonian: scaled potential pole near node x = " +
                                    std::to_string(nodes[j]));
        h(j, j) += params.u0 / (ch * ch);
    }
    return h;
}

EigResult eig_complex(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eig_complex: matrix must be square");
    if (m.rows() > 2000) throw std::invalid_argument("eig_complex: dimension cap is 2000");
    if (!m.allFinite()) throw std::invalid_argument("eig_complex: non-finite entries");

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw NoConvergenceQR("eig_complex: QR iteration did not converge");

    EigResult out;
    const int n = static_cast<int>(m.rows());
    out.vectors = solver.eigenvectors();
    out.values.resize(n);
    const double mnorm = m.norm();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        out.values[i] = solver.eigenvalues()(i);
        out.vectors.col(i).normalize();
        const double res = (m * out.vectors.col(i) - out.values[i] * out.vectors.col(i)).norm();
        worst = std::max(worst, res);
    }
    out.residual_norm = worst / std::max(mnorm, 1e-300);
    return out;
}

RawCsmSpectrum raw_csm_spectrum(const PotentialParams& params, const ScalingAngle& angle,
                                const GridSpec& grid, kernels::Exec exec) {
    const EigResult eig = eig_complex(csm_hamiltonian(params, angle, grid, exec));
    RawCsmSpectrum raw;
    raw.theta = angle;
    raw.eigenvalues = eig.values;
    raw.residual_norm = eig.residual_norm;
    std::sort(raw.eigenvalues.begin(), raw.eigenvalues.end(), [](Complex l, Complex r) {
        return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
    });
    return raw;
}

CsmSpectrum classify_spectrum(const RawCsmSpectrum& at_theta, const RawCsmSpectrum& at_other) {
    if (at_theta.theta.theta == at_other.theta.theta)
        throw std::invalid_argument("classify_spectrum: needs two distinct angles");

    CsmSpectrum spec;
    spec.theta = at_theta.theta;
    spec.eigenvalues = at_theta.eigenvalues;
    spec.residual_norm = std::max(at_theta.residual_norm, at_other.residual_norm);
    spec.classes.assign(spec.eigenvalues.size(), CsmClass::Unclassified);

    const double theta = at_theta.theta.theta;
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
        const Complex e = spec.eigenvalues[i];
        const double tol = 1e-3 * std::abs(e) + 1e-6;
        bool matched = false;
        for (const Complex& o : at_other.eigenvalues)
            if (std::abs(e - o) <= tol) {
                matched = true;
                break;
            }
        if (matched) {
            if (std::abs(e.imag()) <= 1e-5 * (1.0 + std::abs(e)) && e.real() < 0.0)
                spec.classes[i] = CsmClass::Bound;
            else if (e.imag() < 0.0)
                spec.classes[i] = CsmClass::Resonance;
            // matched but neither: leave Unclassified
        } else if (std::abs(std::arg(e) + 2.0 * theta) <= 0.15) {
            spec.classes[i] = CsmClass::RotatedContinuum;
        }
    }
    return spec;
}

} // namespace rmlab::numerics
