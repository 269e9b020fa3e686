#include "rmlab/rootfind.hpp"

#include <algorithm>
#include <cmath>

#include "rmlab/errors.hpp"

namespace rmlab::rootfind {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Complex> boundary_points(const SearchBox& box, int n) {
    // Counterclockwise rectangle, n points distributed by edge length.
    const double w = box.re_max - box.re_min;
    const double h = box.im_max - box.im_min;
    const double perim = 2.0 * (w + h);
    const int nw = std::max(2, int(std::lround(n * w / perim)));
    const int nh = std::max(2, n / 2 - nw);
    std::vector<Complex> pts;
    pts.reserve(2 * (nw + nh));
    for (int i = 0; i < nw; ++i) pts.emplace_back(box.re_min + w * i / nw, box.im_min);
    for (int i = 0; i < nh; ++i) pts.emplace_back(box.re_max, box.im_min + h * i / nh);
    for (int i = 0; i < nw; ++i) pts.emplace_back(box.re_max - w * i / nw, box.im_max);
    for (int i = 0; i < nh; ++i) pts.emplace_back(box.re_min, box.im_max - h * i / nh);
    return pts;
}

double wrap_to_pi(double d) {
    while (d > kPi) d -= 2.0 * kPi;
    while (d < -kPi) d += 2.0 * kPi;
    return d;
}

struct ZeroSearch {
    const ComplexFn& f;
    kernels::Exec exec;
    double scale;           // extent of the original box
    double residual_target; // 1e-9 * |f| scale on the original boundary
    SearchBox root_box;
};

int winding_impl(const ComplexFn& f, const SearchBox& box, kernels::Exec exec) {
    int n = box.boundary_samples;
    for (int pass = 0; pass < 8; ++pass, n *= 2) {
        const std::vector<Complex> pts = boundary_points(box, n);
        const int m = static_cast<int>(pts.size());
        std::vector<Complex> vals(m);
        kernels::for_each_index(m, exec, [&](int i) { vals[i] = f(pts[i]); });

        double fmin = 1e300, fmax = 0.0;
        for (const Complex& v : vals) {
            fmin = std::min(fmin, std::abs(v));
            fmax = std::max(fmax, std::abs(v));
        }
        if (!(fmax > 0.0) || fmin <= 1e-12 * fmax)
            throw BoundaryZero("winding_number: |f| vanishes on the box boundary");

        double total = 0.0;
        double max_step = 0.0;
        for (int i = 0; i < m; ++i) {
            const double d =
                wrap_to_pi(std::arg(vals[(i + 1) % m]) - std::arg(vals[i]));
            max_step = std::max(max_step, std::abs(d));
            total += d;
        }
        if (max_step > 0.5 * kPi) continue; // refine: a zero sits close to the boundary
        const double turns = total / (2.0 * kPi);
        const long w = std::lround(turns);
        if (std::abs(turns - double(w)) > 0.25) continue;
        return static_cast<int>(w);
    }
    throw BoundaryZero("winding_number: phase steps not certified after refinement");
}

// Newton with central-difference derivative; step scaled by the assumed
// multiplicity so multiple zeros keep quadratic convergence. Runs to
// machine stagnation, not just to the acceptance threshold. made_progress
// distinguishes a dead start (NewtonStall) from an unresolved cluster.
bool newton_polish(const ZeroSearch& ctx, Complex start, int multiplicity, Complex& out,
                   double& residual_out, bool* made_progress = nullptr) {
    const double h = 1e-7 * ctx.scale;
    Complex z = start;
    const double initial = std::abs(ctx.f(z));
    double best = initial;
    Complex best_z = z;
    int since_improvement = 0;
    for (int it = 0; it < 50 && since_improvement < 8; ++it) {
        const Complex fz = ctx.f(z);
        const double r = std::abs(fz);
        if (r < best) {
            best = r;
            best_z = z;
            since_improvement = 0;
        } else {
            ++since_improvement;
        }
        const Complex df = (ctx.f(z + h) - ctx.f(z - h)) / (2.0 * h);
        if (!(std::abs(df) > 0.0)) break;
        const Complex step = double(multiplicity) * fz / df;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        z -= step;
        if (std::abs(step) > 4.0 * ctx.scale) break;               // running away
        if (std::abs(step) < 4e-16 * (std::abs(z) + 1e-3 * ctx.scale)) {
            const double rr = std::abs(ctx.f(z));
            if (rr < best) {
                best = rr;
                best_z = z;
            }
            break; // machine converged
        }
    }
    out = best_z;
    residual_out = best;
    if (made_progress) *made_progress = best < initial;
    return best <= ctx.residual_target;
}

bool strictly_inside(Complex z, const SearchBox& box) {
    return z.real() > box.re_min && z.real() < box.re_max && z.imag() > box.im_min &&
           z.imag() < box.im_max;
}

// Recursive quadrisection. The winding of each sub-box is evaluated inside
// its own call; a BoundaryZero thrown by a child means the parent's split
// line runs through a zero, so the parent re-splits at shifted fractions
// instead of nudging the region (expanding a box can pull in poles and
// silently cancel the count).
void search(const ZeroSearch& ctx, const SearchBox& box, int depth,
            std::vector<LocatedZero>& found) {
    const int w = winding_impl(ctx.f, box, ctx.exec);
    if (w <= 0) return; // no zeros (poles are not search targets)

    const double extent = box.scale();
    if (w == 1 || depth >= box.max_depth || extent < 1e-9 * ctx.scale) {
        Complex z;
        double residual;
        bool progressed = false;
        if (newton_polish(ctx, box.center(), w, z, residual, &progressed) &&
            strictly_inside(z, box)) {
            found.push_back({z, w, residual});
            return;
        }
        if (depth >= box.max_depth) {
            if (!progressed)
                throw NewtonStall("find_zeros: Newton made no residual progress at depth cap");
            throw MaxDepthExceeded("find_zeros: winding " + std::to_string(w) +
                                   " not isolated at depth cap");
        }
        // fall through: Newton failed from the center, subdivide further
    }

    const double fr[4] = {0.5, 0.53, 0.44, 0.57};
    for (int attempt = 0; attempt < 4; ++attempt) {
        const double fre = fr[(depth + attempt) % 4];
        const double fim = fr[(depth + attempt + 1) % 4];
        const double re_mid = box.re_min + fre * (box.re_max - box.re_min);
        const double im_mid = box.im_min + fim * (box.im_max - box.im_min);
        const SearchBox quads[4] = {
            {box.re_min, re_mid, box.im_min, im_mid, box.max_depth, box.boundary_samples},
            {re_mid, box.re_max, box.im_min, im_mid, box.max_depth, box.boundary_samples},
            {box.re_min, re_mid, im_mid, box.im_max, box.max_depth, box.boundary_samples},
            {re_mid, box.re_max, im_mid, box.im_max, box.max_depth, box.boundary_samples},
        };
        std::vector<LocatedZero> local;
        try {
            for (const SearchBox& q : quads) search(ctx, q, depth + 1, local);
        } catch (const BoundaryZero&) {
            continue; // a split line hit a zero; re-split
        }
        found.insert(found.end(), local.begin(), local.end());
        return;
    }
    throw BoundaryZero("find_zeros: every split attempt left a zero on a sub-box edge");
}

} // namespace

int winding_number(const ComplexFn& f, const SearchBox& box, kernels::Exec exec) {
    box.validate();
    return winding_impl(f, box, exec);
}

std::vector<LocatedZero> find_zeros(const ComplexFn& f, const SearchBox& box,
                                    kernels::Exec exec) {
    box.validate();
    ZeroSearch ctx{f, exec, box.scale(), 0.0, box};

    // Residual target from the |f| scale on the original boundary; the
    // median is immune to near-pole spikes on the boundary path.
    const std::vector<Complex> pts = boundary_points(box, box.boundary_samples);
    std::vector<double> mags(pts.size());
    kernels::for_each_index(static_cast<int>(pts.size()), exec,
                            [&](int i) { mags[i] = std::abs(f(pts[i])); });
    std::sort(mags.begin(), mags.end());
    ctx.residual_target = 1e-9 * mags[mags.size() / 2];

    std::vector<LocatedZero> found;
    search(ctx, box, 0, found);

    // Deduplicate zeros rediscovered from neighboring sub-boxes.
    std::sort(found.begin(), found.end(), [](const LocatedZero& l, const LocatedZero& r) {
        return l.location.real() != r.location.real()
                   ? l.location.real() < r.location.real()
                   : l.location.imag() < r.location.imag();
    });
    std::vector<LocatedZero> unique;
    for (const LocatedZero& z : found) {
        bool dup = false;
        for (const LocatedZero& u : unique)
            if (std::abs(u.location - z.location) < 1e-8 * ctx.scale) dup = true;
        if (!dup && strictly_inside(z.location, box)) unique.push_back(z);
    }
    return unique;
}

BreitWignerFit breit_wigner_fit(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 5)
        throw std::invalid_argument("breit_wigner_fit: need at least 5 points");
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("breit_wigner_fit: duplicate abscissae");

    // Moment-based start: background from the smallest sample, peak position
    // from the (y - bg)-weighted mean, width from the weighted spread.
    double ymin = 1e300, ymax = -1e300, e_lo = 1e300, e_hi = -1e300;
    for (auto [e, y] : points) {
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
        e_lo = std::min(e_lo, e);
        e_hi = std::max(e_hi, e);
    }
    if (!(ymax > ymin))
        throw FitDiverged("breit_wigner_fit: constant data, width unbounded");
    double wsum = 0.0, esum = 0.0;
    for (auto [e, y] : points) {
        const double w = std::max(0.0, y - ymin);
        wsum += w;
        esum += w * e;
    }
    double p[4]; // e_r, gamma, amplitude, background
    p[0] = esum / wsum;
    double vsum = 0.0;
    for (auto [e, y] : points) vsum += std::max(0.0, y - ymin) * (e - p[0]) * (e - p[0]);
    p[1] = std::max(2.0 * std::sqrt(vsum / wsum), 1e-3 * (e_hi - e_lo));
    p[2] = ymax - ymin;
    p[3] = ymin;

    auto sse = [&](const double* q) {
        double s = 0.0;
        for (auto [e, y] : points) {
            const double g = 0.5 * q[1];
            const double d = (e - q[0]) * (e - q[0]) + g * g;
            const double r = q[3] + q[2] * g * g / d - y;
            s += r * r;
        }
        return s;
    };

    double current = sse(p);
    for (int it = 0; it < 200; ++it) {
        double jtj[4][4] = {};
        double jtr[4] = {};
        for (auto [e, y] : points) {
            const double g = 0.5 * p[1];
            const double de = e - p[0];
            const double den = de * de + g * g;
            const double lor = g * g / den;
            const double r = p[3] + p[2] * lor - y;
            const double jac[4] = {
                p[2] * g * g * 2.0 * de / (den * den), // d/dE_R
                p[2] * g * de * de / (den * den),      // d/dGamma (dg/dGamma = 1/2 folded in)
                lor,                                   // d/da
                1.0,                                   // d/dbg
            };
            for (int i = 0; i < 4; ++i) {
                jtr[i] += jac[i] * r;
                for (int j = 0; j < 4; ++j) jtj[i][j] += jac[i] * jac[j];
            }
        }
        // Solve (J^T J) delta = J^T r by Gaussian elimination with pivoting.
        double a[4][5];
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) a[i][j] = jtj[i][j];
            a[i][4] = jtr[i];
        }
        for (int col = 0; col < 4; ++col) {
            int piv = col;
            for (int r2 = col + 1; r2 < 4; ++r2)
                if (std::abs(a[r2][col]) > std::abs(a[piv][col])) piv = r2;
            if (std::abs(a[piv][col]) < 1e-14 * (1.0 + std::abs(jtj[col][col])))
                throw FitDiverged("breit_wigner_fit: singular normal equations");
            std::swap(a[piv], a[col]);
            for (int r2 = 0; r2 < 4; ++r2) {
                if (r2 == col) continue;
                const double fct = a[r2][col] / a[col][col];
                for (int j = col; j < 5; ++j) a[r2][j] -= fct * a[col][j];
            }
        }
        double delta[4];
        for (int i = 0; i < 4; ++i) delta[i] = a[i][4] / a[i][i];

        double step = 1.0;
        double next[4];
        double trial = current;
        for (int half = 0; half < 25; ++half, step *= 0.5) {
            for (int i = 0; i < 4; ++i) next[i] = p[i] - step * delta[i];
            trial = sse(next);
            if (trial <= current) break;
        }
        if (trial > current) throw FitDiverged("breit_wigner_fit: no descent direction");
        const double rel = (current - trial) / std::max(current, 1e-300);
        for (int i = 0; i < 4; ++i) p[i] = next[i];
        current = trial;
        if (rel < 1e-15) break;
    }
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]))
        throw FitDiverged("breit_wigner_fit: non-finite parameters");
    BreitWignerFit fit;
    fit.e_r = p[0];
    fit.gamma = std::abs(p[1]);
    fit.amplitude = p[2];
    fit.background = p[3];
    return fit;
}

} // namespace rmlab::rootfind
