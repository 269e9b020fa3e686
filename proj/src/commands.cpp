#include "rmlab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <cstdio>

#include "rmlab/emit.hpp"
#include "rmlab/errors.hpp"
#include "rmlab/kernels.hpp"
#include "rmlab/model.hpp"
#include "rmlab/numerics.hpp"
#include "rmlab/rootfind.hpp"
#include "rmlab/spectral.hpp"

namespace rmlab::cli {
namespace {

double rel_dev(Complex x, Complex y) {
    return std::abs(x - y) / std::max(std::abs(y), 1e-300);
}

std::string class_name(CsmClass c) {
    switch (c) {
        case CsmClass::Bound: return "bound";
        case CsmClass::Resonance: return "resonance";
        case CsmClass::RotatedContinuum: return "rotated_continuum";
        case CsmClass::Unclassified: return "unclassified";
    }
    return "unclassified";
}

void progress(const RunConfig& cfg, const char* msg) {
    if (cfg.verbose) std::fprintf(stderr, "rmlab: %s\n", msg);
}

std::string class_name(SpectralClass c) {
    switch (c) {
        case SpectralClass::Bound: return "bound";
        case SpectralClass::Resonance: return "resonance";
        case SpectralClass::Continuum: return "continuum";
    }
    return "continuum";
}

} // namespace

int cmd_transmission(const RunConfig& cfg) {
    const std::vector<double> energies = cfg.energies();
    const int ne = static_cast<int>(energies.size());
    const PotentialParams& p = cfg.potential;
    const bool free_particle = (p.u0 == 0.0);

    // connection-formula and transfer-matrix values, parallel over energies
    std::vector<ScatteringAmplitudes> conn(ne), transfer(ne);
    auto potential = [p](double x) {
        const double c = std::cosh(p.beta * x);
        return p.u0 / (c * c);
    };
    GridSpec tgrid = cfg.grid;
    tgrid.n_points = cfg.transfer_cells;
    progress(cfg, "transmission: sweeping energies against both oracles");
    kernels::for_each_index(ne, kernels::Exec::Parallel, [&](int i) {
        conn[i] = model::transmission_connection(p, energies[i]);
        transfer[i] = numerics::transfer_matrix_transmission(potential, p.mass, p.hbar,
                                                             energies[i], tgrid,
                                                             kernels::Exec::Serial);
    });

    // closed-form barrier expression with branch tracking along the sweep;
    // it degenerates identically in the free limit, where the connection
    // values stand in (traceable: T = 1 exactly there).
    model::WkbSweepResult wkb;
    if (free_particle) {
        wkb.parts.resize(ne);
        for (int i = 0; i < ne; ++i) {
            wkb.parts[i].xi_tilde = 0.0;
            wkb.parts[i].a = 0.0;
            wkb.parts[i].t = conn[i].t;
        }
    } else {
        wkb = model::transmission_wkb_sweep(p, energies);
    }

    std::vector<double> phases(ne);
    for (int i = 0; i < ne; ++i) phases[i] = std::arg(conn[i].t);
    model::unwrap_phases(phases);

    Table table;
    table.columns = {"e",          "t_wkb_re",      "t_wkb_im", "t_conn_re", "t_conn_im",
                     "r_conn_re",  "r_conn_im",     "t_transfer_re", "t_transfer_im",
                     "unitarity",  "phase_shift"};
    double dev_wkb_below = 0.0, dev_wkb_above = 0.0;
    double dev_wkb_mod_below = 0.0, dev_wkb_mod_above = 0.0;
    double dev_conn_transfer = 0.0, worst_unitarity = 0.0;
    double xi_im_below = 0.0, xi_re_above = 0.0;
    for (int i = 0; i < ne; ++i) {
        const double unit = std::norm(conn[i].t) + std::norm(conn[i].r);
        worst_unitarity = std::max(worst_unitarity, std::abs(unit - 1.0));
        table.rows.push_back({energies[i], wkb.parts[i].t.real(), wkb.parts[i].t.imag(),
                              conn[i].t.real(), conn[i].t.imag(), conn[i].r.real(),
                              conn[i].r.imag(), transfer[i].t.real(), transfer[i].t.imag(),
                              unit, phases[i]});
        dev_conn_transfer = std::max({dev_conn_transfer, rel_dev(conn[i].t, transfer[i].t),
                                      rel_dev(conn[i].r, transfer[i].r)});
        const double dev = rel_dev(wkb.parts[i].t, conn[i].t);
        const double dev_mod =
            std::abs(std::abs(wkb.parts[i].t) - std::abs(conn[i].t)) /
            std::max(std::abs(conn[i].t), 1e-300);
        if (energies[i] < p.u0) {
            dev_wkb_below = std::max(dev_wkb_below, dev);
            dev_wkb_mod_below = std::max(dev_wkb_mod_below, dev_mod);
            xi_im_below = std::max(xi_im_below, std::abs(wkb.parts[i].xi_tilde.imag()));
        } else {
            dev_wkb_above = std::max(dev_wkb_above, dev);
            dev_wkb_mod_above = std::max(dev_wkb_mod_above, dev_mod);
            xi_re_above = std::max(xi_re_above, std::abs(wkb.parts[i].xi_tilde.real()));
        }
    }
    table.add_summary("rows", long(ne));
    table.add_summary("max_rel_dev_conn_vs_transfer", dev_conn_transfer);
    table.add_summary("max_unitarity_defect", worst_unitarity);
    table.add_summary("max_rel_dev_wkb_vs_conn_below_u0", dev_wkb_below);
    table.add_summary("max_rel_dev_wkb_vs_conn_above_u0", dev_wkb_above);
    table.add_summary("max_rel_dev_wkb_mod_below_u0", dev_wkb_mod_below);
    table.add_summary("max_rel_dev_wkb_mod_above_u0", dev_wkb_mod_above);
    table.add_summary("wkb_branch_flip_count", long(wkb.sign_flips.size()));
    {
        std::ostringstream flips;
        for (std::size_t i = 0; i < wkb.sign_flips.size(); ++i)
            flips << (i ? ";" : "") << wkb.sign_flips[i];
        table.add_summary("wkb_branch_flip_indices", flips.str().empty() ? "none" : flips.str());
    }
    table.add_summary("xi_tilde_max_im_below_u0", xi_im_below);
    table.add_summary("xi_tilde_max_re_above_u0", xi_re_above);
    if (free_particle) table.add_summary("free_particle_wkb_column", "follows_connection");
    write_table(table, cfg);
    return 0;
}

int cmd_poles(const RunConfig& cfg) {
    const PotentialParams& p = cfg.potential;
    auto inv_t = [&p](Complex k) { return model::siegert_condition(p, k); };
    progress(cfg, "poles: winding census and zero search");
    const int winding = rootfind::winding_number(inv_t, cfg.box);
    std::vector<LocatedZero> zeros = rootfind::find_zeros(inv_t, cfg.box);
    std::sort(zeros.begin(), zeros.end(), [](const LocatedZero& l, const LocatedZero& r) {
        return l.location.imag() != r.location.imag()
                   ? l.location.imag() > r.location.imag()
                   : l.location.real() < r.location.real();
    });

    Table table;
    table.columns = {"k_re", "k_im", "e_re", "e_im", "multiplicity", "residual", "class"};
    for (const LocatedZero& z : zeros) {
        const SpectralPoint pt = model::classify_pole(p, z.location);
        table.rows.push_back({z.location.real(), z.location.imag(), pt.energy.real(),
                              pt.energy.imag(), long(z.multiplicity), z.residual,
                              class_name(pt.cls)});
    }
    table.add_summary("rows", long(zeros.size()));
    table.add_summary("box_winding_number", long(winding));
    write_table(table, cfg);
    return 0;
}

int cmd_csm(const RunConfig& cfg) {
    if (cfg.theta_list.size() < 2)
        throw ConfigError("csm: theta.list needs at least two angles for classification");
    const int nth = static_cast<int>(cfg.theta_list.size());
    progress(cfg, "csm: diagonalizing the scaled Hamiltonian per angle");
    std::vector<numerics::RawCsmSpectrum> raw(nth);
    kernels::for_each_index(nth, kernels::Exec::Parallel, [&](int i) {
        raw[i] = numerics::raw_csm_spectrum(cfg.potential, ScalingAngle{cfg.theta_list[i]},
                                            cfg.grid, kernels::Exec::Serial);
    });

    Table table;
    table.columns = {"theta", "e_re", "e_im", "class", "invariance_delta", "angle_dev"};
    for (int i = 0; i < nth; ++i) {
        const int other = (i + 1 < nth) ? i + 1 : i - 1;
        const CsmSpectrum spec = numerics::classify_spectrum(raw[i], raw[other]);
        long bound = 0, resonance = 0, continuum = 0;
        std::vector<double> angle_devs;
        for (std::size_t j = 0; j < spec.eigenvalues.size(); ++j) {
            const Complex e = spec.eigenvalues[j];
            double delta = -1.0;
            if (spec.classes[j] == CsmClass::Bound || spec.classes[j] == CsmClass::Resonance) {
                double best = 1e300;
                for (const Complex& o : raw[other].eigenvalues)
                    best = std::min(best, std::abs(e - o));
                delta = best;
            }
            double adev = -1.0;
            if (spec.classes[j] == CsmClass::RotatedContinuum) {
                adev = std::abs(std::arg(e) + 2.0 * cfg.theta_list[i]);
                angle_devs.push_back(adev);
            }
            bound += spec.classes[j] == CsmClass::Bound;
            resonance += spec.classes[j] == CsmClass::Resonance;
            continuum += spec.classes[j] == CsmClass::RotatedContinuum;
            table.rows.push_back({cfg.theta_list[i], e.real(), e.imag(),
                                  class_name(spec.classes[j]), delta, adev});
        }
        const std::string tag = "theta_" + std::to_string(i);
        table.add_summary(tag + "_value", cfg.theta_list[i]);
        table.add_summary(tag + "_bound", bound);
        table.add_summary(tag + "_resonance", resonance);
        table.add_summary(tag + "_rotated_continuum", continuum);
        table.add_summary(tag + "_eig_residual", spec.residual_norm);
        if (!angle_devs.empty()) {
            std::sort(angle_devs.begin(), angle_devs.end());
            table.add_summary(tag + "_median_angle_dev", angle_devs[angle_devs.size() / 2]);
        }
    }
    write_table(table, cfg);
    return 0;
}

int cmd_completeness(const RunConfig& cfg) {
    const PotentialParams& p = cfg.potential;
    GridSpec quad = cfg.grid;
    quad.n_points = cfg.quadrature_points;
    const std::vector<std::function<double(double)>> tests = {
        [](double x) { return std::exp(-x * x / (2.0 * 0.4 * 0.4)); },
        [](double x) { return std::exp(-(x - 0.6) * (x - 0.6) / (2.0 * 0.7 * 0.7)); },
    };

    Table table;
    table.columns = {"k_cutoff", "test_index", "error_sup"};
    progress(cfg, "completeness: reconstructing test functions per cutoff");
    for (double kc : cfg.k_cutoffs) {
        const CompletenessReport rep = spectral::completeness_check(p, quad, kc, tests);
        for (std::size_t t = 0; t < rep.test_function_errors.size(); ++t)
            table.rows.push_back({kc, long(t), rep.test_function_errors[t]});
    }

    // CSM side: one eigensolve per angle covers the discrete completeness
    // residual, the classification, and the inclusion set.
    const int nth = static_cast<int>(cfg.theta_list.size());
    std::vector<numerics::EigResult> eigs(nth);
    std::vector<numerics::RawCsmSpectrum> raw(nth);
    kernels::for_each_index(nth, kernels::Exec::Parallel, [&](int i) {
        const ScalingAngle angle{cfg.theta_list[i]};
        eigs[i] = numerics::eig_complex(
            numerics::csm_hamiltonian(p, angle, cfg.grid, kernels::Exec::Serial));
        raw[i].theta = angle;
        raw[i].eigenvalues = eigs[i].values;
        raw[i].residual_norm = eigs[i].residual_norm;
        std::sort(raw[i].eigenvalues.begin(), raw[i].eigenvalues.end(),
                  [](Complex l, Complex r) {
                      return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
                  });
    });
    for (int i = 0; i < nth; ++i) {
        const std::string tag = "theta_" + std::to_string(i);
        table.add_summary(tag + "_value", cfg.theta_list[i]);
        table.add_summary(tag + "_csm_matrix_residual",
                          spectral::cproduct_identity_residual(eigs[i].vectors));

        if (nth >= 2) {
            const int other = (i + 1 < nth) ? i + 1 : i - 1;
            const CsmSpectrum spec = numerics::classify_spectrum(raw[i], raw[other]);
            long bound = 0;
            std::ostringstream inc;
            bool first = true;
            for (std::size_t m = 0; m < spec.classes.size(); ++m) {
                if (spec.classes[m] == CsmClass::Bound) ++bound;
                if (spec.classes[m] != CsmClass::Resonance) continue;
                const double theta_r = 0.5 * std::abs(std::arg(spec.eigenvalues[m]));
                if (cfg.theta_list[i] < theta_r) continue; // support function gate
                inc << (first ? "" : ";") << format_double(spec.eigenvalues[m].real()) << "+"
                    << format_double(spec.eigenvalues[m].imag()) << "i(theta_r="
                    << format_double(theta_r) << ")";
                first = false;
            }
            table.add_summary(tag + "_included_resonances",
                              inc.str().empty() ? "none" : inc.str());
            table.add_summary(tag + "_bound_terms", bound);
        }
    }
    write_table(table, cfg);
    return 0;
}

} // namespace rmlab::cli
