#include "rmlab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "rmlab/errors.hpp"
#include "rmlab/model.hpp"
#include "rmlab/rootfind.hpp"

namespace rmlab::spectral {
namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

Complex transmitted_c1(const PotentialParams& p, Complex k) {
    return std::pow(Complex(4.0, 0.0), kI * k / (2.0 * p.beta));
}

// Outgoing-to-the-right solution (-> e^{ikx} as x -> +inf) and its mirror.
Complex u_plus(const PotentialParams& p, Complex energy, double x) {
    const Complex k = model::wavenumber_from_energy(p, energy);
    return model::wavefunction(p, energy, transmitted_c1(p, k), 0.0, x);
}

Complex u_plus_prime(const PotentialParams& p, Complex energy, double x) {
    const Complex k = model::wavenumber_from_energy(p, energy);
    return model::wavefunction_derivative(p, energy, transmitted_c1(p, k), 0.0, x);
}

struct QuadratureGrid {
    std::vector<double> nodes;
    std::vector<double> w_simpson;
    std::vector<double> w_trapezoid;
};

QuadratureGrid make_quadrature(double lo, double hi, int intervals) {
    if (intervals % 2 != 0) ++intervals;
    QuadratureGrid q;
    const double h = (hi - lo) / intervals;
    q.nodes.resize(intervals + 1);
    q.w_simpson.assign(intervals + 1, 0.0);
    q.w_trapezoid.assign(intervals + 1, h);
    for (int i = 0; i <= intervals; ++i) {
        q.nodes[i] = lo + h * i;
        q.w_simpson[i] = (i == 0 || i == intervals) ? h / 3.0
                         : (i % 2 == 1)             ? 4.0 * h / 3.0
                                                    : 2.0 * h / 3.0;
    }
    q.w_trapezoid.front() = 0.5 * h;
    q.w_trapezoid.back() = 0.5 * h;
    return q;
}

// Bound states of the well: zeros of 1/T on the positive imaginary k axis,
// polished until the residual is at machine scale so the growing piece of
// the connection formula stays far below the decaying tail.
std::vector<Complex> bound_wavenumbers(const PotentialParams& p) {
    if (p.u0 >= 0.0) return {};
    const Complex s = model::s_parameter(p);
    const double kappa_max = p.beta * (std::abs(s) + 1.0);
    SearchBox box{-0.4 * p.beta, 0.4 * p.beta, 1e-4 * p.beta, kappa_max, 12, 256};
    auto inv_t = [&](Complex k) { return model::siegert_condition(p, k); };
    std::vector<LocatedZero> zeros = rootfind::find_zeros(inv_t, box, kernels::Exec::Serial);
    std::vector<Complex> ks;
    for (const LocatedZero& z : zeros) {
        Complex k = z.location;
        for (int it = 0; it < 8; ++it) {
            const double h = 1e-9;
            const Complex f = inv_t(k);
            const Complex df = (inv_t(k + h) - inv_t(k - h)) / (2.0 * h);
            if (!(std::abs(df) > 0.0)) break;
            const Complex step = f / df;
            k -= step;
            if (std::abs(step) < 1e-15 * std::abs(k)) break;
        }
        ks.push_back(Complex(0.0, k.imag())); // exact pole sits on the axis
    }
    std::sort(ks.begin(), ks.end(), [](Complex l, Complex r) { return l.imag() > r.imag(); });
    return ks;
}

// Bound wavefunction by parity: evaluate the clean x >= 0 branch of the
// outgoing solution (series region of 2F1) and mirror it, so the
// exponentially growing contamination of the x -> -inf connection never
// enters.
std::vector<double> bound_state_on_grid(const PotentialParams& p, Complex k_bound,
                                        const QuadratureGrid& q) {
    const Complex energy = model::energy_from_wavenumber(p, k_bound);
    const Complex psi0 = u_plus(p, energy, 0.0);
    const Complex dpsi0 = u_plus_prime(p, energy, 0.0);
    const double kappa = k_bound.imag();
    const bool even = std::abs(dpsi0) < kappa * std::abs(psi0);
    const int n = static_cast<int>(q.nodes.size());
    std::vector<double> psi(n);
    for (int i = 0; i < n; ++i) {
        const double x = q.nodes[i];
        const Complex v = u_plus(p, energy, std::abs(x));
        const Complex signed_v = (x < 0.0 && !even) ? -v : v;
        // the bound solution is real up to an overall phase; rotate it away
        psi[i] = (signed_v * std::exp(-kI * std::arg(psi0))).real();
    }
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += q.w_simpson[i] * psi[i] * psi[i];
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : psi) v *= inv;
    return psi;
}

struct NormAnchor {
    Complex value;   // e^{i theta} sum b_m^2  (ray c-product, unnormalized)
    Complex at_zero; // interpolated psi_theta(0)
};

NormAnchor ray_norm(const Eigen::MatrixXcd& dst_basis, const Eigen::VectorXcd& v,
                    const GridSpec& grid, double theta) {
    // Coefficients in the orthonormal sine basis carry both the c-product
    // (sum b^2, exact for the basis truncation) and the interpolant at x=0.
    const int n = static_cast<int>(v.size());
    Eigen::VectorXcd b = dst_basis.transpose() * v;
    Complex sum2 = 0.0;
    Complex at0 = 0.0;
    const double length = grid.length();
    const double norm = std::sqrt(2.0 / length);
    for (int m = 0; m < n; ++m) {
        sum2 += b(m) * b(m);
        at0 += b(m) * norm * std::sin((m + 1) * kPi * (0.0 - grid.x_min) / length);
    }
    return {std::exp(Complex(0.0, theta)) * sum2, at0};
}

} // namespace

Complex green_function(const PotentialParams& params, Complex energy, double x, double x2) {
    params.validate();
    if (energy == Complex(0.0, 0.0)) throw DegeneratePoint("green_function: E = 0");
    const double xl = std::min(x, x2);
    const double xg = std::max(x, x2);
    // u_minus(x) = u_plus(-x) for the even potential, so the Wronskian at
    // the mirror point is exactly 2 u(0) u'(0); it vanishes iff u or u' has
    // a node there, i.e. iff E carries an odd or even two-sided-decaying
    // state. The comparison scale must not cancel with W itself, hence the
    // quadratic form in (u, u'/k).
    const Complex up0 = u_plus(params, energy, 0.0);
    const Complex dup0 = u_plus_prime(params, energy, 0.0);
    const Complex wron = 2.0 * up0 * dup0;
    const double kmag =
        std::max(std::abs(model::wavenumber_from_energy(params, energy)), 1e-30);
    const double scale = kmag * std::norm(up0) + std::norm(dup0) / kmag;
    if (!std::isfinite(wron.real()) || !std::isfinite(wron.imag()) ||
        std::abs(wron) <= 1e-10 * scale)
        throw WronskianVanishes("green_function: E is an eigenvalue (pole of the resolvent)");
    const Complex num = u_plus(params, energy, -xl) * u_plus(params, energy, xg);
    return 2.0 * params.mass / (params.hbar * params.hbar) * num / wron;
}

double jost_normalization(const PotentialParams& params, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("jost_normalization: requires k > 0");
    const double energy =
        params.hbar * params.hbar * k * k / (2.0 * params.mass);
    const Complex t = model::transmission_connection(params, energy).t;
    return std::norm(t);
}

CompletenessReport completeness_check(const PotentialParams& params, const GridSpec& grid,
                                      double k_cutoff,
                                      const std::vector<std::function<double(double)>>& tests,
                                      kernels::Exec exec, int k_intervals) {
    params.validate();
    grid.validate();
    if (!(k_cutoff > 0.0)) throw std::invalid_argument("completeness_check: k_cutoff > 0");

    const QuadratureGrid xq = make_quadrature(grid.x_min, grid.x_max, grid.n_points);
    const int nx = static_cast<int>(xq.nodes.size());
    const int nt = static_cast<int>(tests.size());

    // test functions must be negligible at the walls
    std::vector<std::vector<double>> g(nt, std::vector<double>(nx));
    for (int t = 0; t < nt; ++t) {
        double gmax = 0.0;
        for (int i = 0; i < nx; ++i) {
            g[t][i] = tests[t](xq.nodes[i]);
            gmax = std::max(gmax, std::abs(g[t][i]));
        }
        if (std::abs(g[t][0]) > 1e-6 * gmax || std::abs(g[t][nx - 1]) > 1e-6 * gmax)
            throw std::invalid_argument(
                "completeness_check: test function not supported inside the grid");
    }

    const bool symmetric = std::abs(grid.x_min + grid.x_max) <= 1e-9 * grid.length();

    // reconstruction accumulators, Simpson and trapezoid k-weights
    std::vector<std::vector<Complex>> recon_s(nt, std::vector<Complex>(nx, 0.0));
    std::vector<std::vector<Complex>> recon_t(nt, std::vector<Complex>(nx, 0.0));

    const int nk =
        k_intervals > 0 ? k_intervals : std::max(512, static_cast<int>(150.0 * k_cutoff));
    const QuadratureGrid kq = make_quadrature(1e-6, k_cutoff, nk);
    const int nkn = static_cast<int>(kq.nodes.size());

    std::vector<std::vector<Complex>> rows(nkn);
    kernels::for_each_index(nkn, exec, [&](int ik) {
        const double k = kq.nodes[ik];
        const double energy = params.hbar * params.hbar * k * k / (2.0 * params.mass);
        const Complex t_amp = model::transmission_connection(params, energy).t;
        std::vector<Complex>& left = rows[ik];
        left.resize(2 * nx);
        for (int i = 0; i < nx; ++i)
            left[i] = t_amp * u_plus(params, Complex(energy, 0.0), xq.nodes[i]) /
                      std::sqrt(2.0 * kPi);
        // right-incident channel: mirror of the left one for the even potential
        for (int i = 0; i < nx; ++i)
            left[nx + i] = symmetric
                               ? left[nx - 1 - i]
                               : t_amp * u_plus(params, Complex(energy, 0.0), -xq.nodes[i]) /
                                     std::sqrt(2.0 * kPi);
    });

    for (int ik = 0; ik < nkn; ++ik) {
        const std::vector<Complex>& row = rows[ik];
        for (int t = 0; t < nt; ++t) {
            Complex inner_l = 0.0, inner_r = 0.0;
            for (int i = 0; i < nx; ++i) {
                inner_l += xq.w_simpson[i] * std::conj(row[i]) * g[t][i];
                inner_r += xq.w_simpson[i] * std::conj(row[nx + i]) * g[t][i];
            }
            const Complex ws = kq.w_simpson[ik];
            const Complex wt = kq.w_trapezoid[ik];
            for (int i = 0; i < nx; ++i) {
                const Complex contrib = row[i] * inner_l + row[nx + i] * inner_r;
                recon_s[t][i] += ws * contrib;
                recon_t[t][i] += wt * contrib;
            }
        }
        rows[ik].clear();
        rows[ik].shrink_to_fit();
    }

    // bound-state contribution (wells only)
    for (const Complex& kb : bound_wavenumbers(params)) {
        const std::vector<double> psi = bound_state_on_grid(params, kb, xq);
        for (int t = 0; t < nt; ++t) {
            double inner = 0.0;
            for (int i = 0; i < nx; ++i) inner += xq.w_simpson[i] * psi[i] * g[t][i];
            for (int i = 0; i < nx; ++i) {
                recon_s[t][i] += inner * psi[i];
                recon_t[t][i] += inner * psi[i];
            }
        }
    }

    CompletenessReport report;
    report.cutoff_k = k_cutoff;
    for (int t = 0; t < nt; ++t) {
        double err = 0.0, rule_gap = 0.0;
        for (int i = 0; i < nx; ++i) {
            err = std::max(err, std::abs(recon_s[t][i] - g[t][i]));
            rule_gap = std::max(rule_gap, std::abs(recon_s[t][i] - recon_t[t][i]));
        }
        if (rule_gap > 1e-4)
            throw QuadratureNotConverged(
                "completeness_check: trapezoid and Simpson reconstructions disagree by " +
                std::to_string(rule_gap));
        report.test_function_errors.push_back(err);
    }
    return report;
}

SpectralMeasure csm_spectral_assembly(const CsmSpectrum& spectrum, const ScalingAngle& theta,
                                      const PotentialParams& params, const GridSpec& grid,
                                      kernels::Exec exec) {
    theta.validate();
    SpectralMeasure measure;
    const PotentialParams p = params;
    measure.continuum_density = [p](double k) {
        return jost_normalization(p, k) / (2.0 * kPi);
    };

    bool need_vectors = false;
    for (std::size_t i = 0; i < spectrum.classes.size(); ++i)
        if (spectrum.classes[i] == CsmClass::Bound || spectrum.classes[i] == CsmClass::Resonance)
            need_vectors = true;
    if (!need_vectors) return measure;

    const Eigen::MatrixXcd h = numerics::csm_hamiltonian(params, theta, grid, exec);
    const numerics::EigResult eig = numerics::eig_complex(h);

    const int n = grid.n_points;
    const double length = grid.length();
    const double norm = std::sqrt(2.0 / (n + 1));
    Eigen::MatrixXd dst(n, n);
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m)
            dst(j, m) = norm * std::sin((j + 1) * (m + 1) * kPi / (n + 1));
    (void)length;

    for (std::size_t i = 0; i < spectrum.classes.size(); ++i) {
        const CsmClass cls = spectrum.classes[i];
        if (cls != CsmClass::Bound && cls != CsmClass::Resonance) continue;
        const Complex e = spectrum.eigenvalues[i];
        // match against the freshly diagonalized spectrum
        int best = -1;
        double dist = 1e300;
        for (int j = 0; j < static_cast<int>(eig.values.size()); ++j) {
            const double d = std::abs(eig.values[j] - e);
            if (d < dist) {
                dist = d;
                best = j;
            }
        }
        if (best < 0 || dist > 1e-3 * std::abs(e) + 1e-6) continue;
        const NormAnchor anchor =
            ray_norm(dst, eig.vectors.col(best), grid, theta.theta);
        if (std::abs(anchor.at_zero) < 1e-12) continue; // node at the anchor; skip
        const Complex nsq = anchor.value / (anchor.at_zero * anchor.at_zero);
        if (cls == CsmClass::Bound) {
            measure.bound_terms.push_back({e.real(), nsq.real()});
        } else {
            const double theta_r = 0.5 * std::abs(std::arg(e));
            if (theta.theta >= theta_r) // support function: pole already uncovered
                measure.resonance_terms.push_back({e, nsq, theta_r});
        }
    }
    std::sort(measure.bound_terms.begin(), measure.bound_terms.end(),
              [](const auto& l, const auto& r) { return l.energy < r.energy; });
    std::sort(measure.resonance_terms.begin(), measure.resonance_terms.end(),
              [](const auto& l, const auto& r) { return l.energy.real() < r.energy.real(); });
    return measure;
}

double cproduct_identity_residual(const Eigen::MatrixXcd& vectors, kernels::Exec exec) {
    const int n = static_cast<int>(vectors.rows());
    Eigen::MatrixXcd v = vectors;
    for (int i = 0; i < n; ++i) {
        const Complex q = (v.col(i).transpose() * v.col(i))(0, 0);
        if (std::abs(q) < 1e-12)
            throw DefectiveSpectrum("cproduct_identity_residual: self-orthogonal eigenvector");
        v.col(i) /= std::sqrt(q);
    }
    std::vector<double> row_max(n, 0.0);
    kernels::for_each_index(n, exec, [&](int i) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            Complex acc = 0.0;
            for (int m = 0; m < n; ++m) acc += v(i, m) * v(j, m);
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
        row_max[i] = worst;
    });
    return *std::max_element(row_max.begin(), row_max.end());
}

CompletenessReport csm_completeness_check(const PotentialParams& params,
                                          const ScalingAngle& angle, const GridSpec& grid,
                                          kernels::Exec exec) {
    const Eigen::MatrixXcd h = numerics::csm_hamiltonian(params, angle, grid, exec);
    const numerics::EigResult eig = numerics::eig_complex(h);
    const int n = static_cast<int>(eig.values.size());
    double min_gap = 1e300;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            min_gap = std::min(min_gap, std::abs(eig.values[i] - eig.values[j]));
    if (min_gap <= 1e-8)
        throw DefectiveSpectrum("csm_completeness_check: eigenvalue gap below 1e-8");

    CompletenessReport report;
    report.matrix_residual = cproduct_identity_residual(eig.vectors, exec);
    return report;
}

Complex resonance_norm(const PotentialParams& params, const SpectralPoint& resonance,
                       const ScalingAngle& angle, const GridSpec& grid, kernels::Exec exec) {
    angle.validate();
    const Complex e = resonance.energy;
    // bound states are square-integrable at any theta; the uncovering gate
    // applies to genuine lower-half-plane poles
    if (resonance.cls != SpectralClass::Bound && 2.0 * angle.theta <= std::abs(std::arg(e)))
        throw NotYetUncovered("resonance_norm: 2 theta <= |arg E|, state not square-integrable");

    const Eigen::MatrixXcd h = numerics::csm_hamiltonian(params, angle, grid, exec);
    const numerics::EigResult eig = numerics::eig_complex(h);
    int best = -1;
    double dist = 1e300;
    for (int j = 0; j < static_cast<int>(eig.values.size()); ++j) {
        const double d = std::abs(eig.values[j] - e);
        if (d < dist) {
            dist = d;
            best = j;
        }
    }
    if (best < 0 || dist > 1e-3 * std::abs(e) + 1e-6)
        throw std::invalid_argument("resonance_norm: no eigenvalue matches the resonance");

    const int n = grid.n_points;
    const double norm = std::sqrt(2.0 / (n + 1));
    Eigen::MatrixXd dst(n, n);
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m)
            dst(j, m) = norm * std::sin((j + 1) * (m + 1) * kPi / (n + 1));
    const NormAnchor anchor = ray_norm(dst, eig.vectors.col(best), grid, angle.theta);
    if (std::abs(anchor.at_zero) < 1e-12)
        throw DefectiveSpectrum("resonance_norm: eigenvector vanishes at the anchor x = 0");
    return anchor.value / (anchor.at_zero * anchor.at_zero);
}

} // namespace rmlab::spectral
