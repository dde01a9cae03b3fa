#include "bsep/dbar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bsep/parallel.hpp"
#include "bsep/quadrature.hpp"

namespace bsep {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::size_t edge_index(const std::vector<double>& edges, double v) {
    auto it = std::upper_bound(edges.begin(), edges.end(), v);
    std::size_t i = static_cast<std::size_t>(it - edges.begin());
    if (i == 0) return 0;
    if (i >= edges.size()) return edges.size() - 2;
    return i - 1;
}

// Intersection [r_in, r_out] of the ray p + r*dir (r >= 0) with the
// rectangle [x0,x1]x[y0,y1]; returns false if the ray misses it.
bool ray_span(double px, double py, double dx, double dy, double x0, double x1, double y0,
              double y1, double& r_in, double& r_out) {
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    auto slab = [&](double p, double d, double a, double b) {
        if (d == 0.0) return p >= a && p <= b;
        double t1 = (a - p) / d, t2 = (b - p) / d;
        if (t1 > t2) std::swap(t1, t2);
        lo = std::max(lo, t1);
        hi = std::min(hi, t2);
        return true;
    };
    if (!slab(px, dx, x0, x1) || !slab(py, dy, y0, y1)) return false;
    if (hi <= lo) return false;
    r_in = lo;
    r_out = hi;
    return true;
}

// integral over the chart-rectangle block of rho(zeta)/(z - zeta) dA, in
// polar coordinates around z's chart image. The rays live in cell-normalized
// coordinates (the local cell is a unit square there), which keeps the
// kernel's level sets near-circular on anisotropic charts; the r dr Jacobian
// absorbs the kernel singularity.
Cpx polar_block(const GridPatch& p, const QuadSpec& spec, Cpx z, double sz, double tz,
                std::size_t i0, std::size_t j0) {
    const std::size_t ns = p.s_edges.size() - 1, nt = p.t_edges.size() - 1;
    const std::size_t i_lo = i0 > static_cast<std::size_t>(spec.zone_m) ? i0 - spec.zone_m : 0;
    const std::size_t i_hi = std::min(ns - 1, i0 + spec.zone_m);
    const std::size_t j_lo = j0 > static_cast<std::size_t>(spec.zone_m) ? j0 - spec.zone_m : 0;
    const std::size_t j_hi = std::min(nt - 1, j0 + spec.zone_m);
    const double ds = p.s_edges[i0 + 1] - p.s_edges[i0];
    const double dt = p.t_edges[j0 + 1] - p.t_edges[j0];
    const double x0 = (p.s_edges[i_lo] - sz) / ds, x1 = (p.s_edges[i_hi + 1] - sz) / ds;
    const double y0 = (p.t_edges[j_lo] - tz) / dt, y1 = (p.t_edges[j_hi + 1] - tz) / dt;

    const GaussRule& gr = gauss_rule(spec.polar_r);
    Cpx acc{};
    const double dth = 2.0 * kPi / spec.polar_theta;
    for (int k = 0; k < spec.polar_theta; ++k) {
        const double th = dth * (k + 0.5);
        const double c = std::cos(th), s = std::sin(th);
        double r0 = 0.0, r1 = 0.0;
        if (!ray_span(0.0, 0.0, c, s, x0, x1, y0, y1, r0, r1)) continue;
        Cpx ray{};
        const int segs = std::max(1, spec.polar_segments);
        for (int seg = 0; seg < segs; ++seg) {
            const double a = r0 + (r1 - r0) * seg / segs;
            const double b = r0 + (r1 - r0) * (seg + 1) / segs;
            for (std::size_t q = 0; q < gr.nodes.size(); ++q) {
                const double r = a + 0.5 * (b - a) * (gr.nodes[q] + 1.0);
                const double w = 0.5 * (b - a) * gr.weights[q];
                const double ss = sz + r * c * ds, tt = tz + r * s * dt;
                const Cpx zeta = p.to_plane(ss, tt);
                const Cpx dz = z - zeta;
                if (std::norm(dz) == 0.0) continue;
                ray += w * r * p.jac(ss, tt) * p.rho(zeta) / dz;
            }
        }
        acc += dth * ray;
    }
    return acc * ds * dt;
}

void append_cell(GridPatch& p, int i, int j, Cpx center, Cpx mass) {
    if (mass == Cpx{}) return;
    p.centers.push_back(center);
    p.masses.push_back(mass);
    p.idx_s.push_back(i);
    p.idx_t.push_back(j);
}

}  // namespace

std::size_t DensityGrid::cell_count() const {
    std::size_t n = 0;
    for (const auto& p : patches) n += p.centers.size();
    return n;
}

double DensityGrid::total_abs_mass() const {
    double m = 0.0;
    for (const auto& p : patches)
        for (const Cpx& c : p.masses) m += std::abs(c);
    return m;
}

DensityField make_disc_density(double radius, Cpx value) {
    DensityField d;
    d.rho = [radius, value](Cpx z) { return std::abs(z) <= radius ? value : Cpx{}; };
    d.x0 = -radius;
    d.x1 = radius;
    d.y0 = -radius;
    d.y1 = radius;
    d.height_bound = std::abs(value) * radius;
    d.carleson_estimate = 2.0 * radius * std::abs(value);
    return d;
}

DensityField make_corridor_density(const CuttingFunction& cf, const std::function<Cpx(Cpx)>& f) {
    DensityField d;
    d.rho = [cf, f](Cpx z) -> Cpx {
        if (!(z.imag() > 0.0)) return {};
        const Cpx dchi = dbar_chi(cf, z);
        if (dchi == Cpx{}) return {};  // support mask: f is never sampled on S
        return f(z) * dchi;
    };
    const double r2 = cf.cutoff.outer;
    d.x0 = -r2;
    d.x1 = r2;
    d.y0 = 0.0;
    d.y1 = r2;
    double hb = 0.0, sup_f = 0.0;
    for (int i = 1; i <= 256; ++i) {
        const double xi = r2 * i / 256.0;
        const double gv = cf.g.value(xi);
        if (gv <= 0.0) continue;
        for (int j = 0; j < 8; ++j) {
            const double eta = gv * (1.0 + cf.mu * (j + 0.5) / 8.0);
            hb = std::max(hb, eta * std::abs(d.rho(Cpx{xi, eta})));
            sup_f = std::max(sup_f, std::abs(f(Cpx{xi, eta})));
        }
    }
    d.height_bound = hb;
    // |rho| = |f||grad chi|/2: the box mass ratio of the cutting function
    // caps the Carleson constant
    d.carleson_estimate =
        0.5 * sup_f * carleson_box_integral(cf, 0.0, 0.5 * cf.R, 1e-6).ratio();
    return d;
}

DensityGrid build_tensor_grid(const DensityField& rho, const QuadSpec& spec) {
    GridPatch p;
    const double x0 = rho.x0, x1 = rho.x1, y0 = rho.y0, y1 = rho.y1;
    const double mx = spec.zone_m * (x1 - x0) / spec.nx;
    const double my = spec.zone_m * (y1 - y0) / spec.ny;
    p.to_plane = [](double s, double t) { return Cpx{s, t}; };
    p.jac = [](double, double) { return 1.0; };
    // margin: points just outside the box still get the desingularized block
    p.locate = [x0, x1, y0, y1, mx, my](Cpx z, double& s, double& t) {
        s = z.real();
        t = z.imag();
        return s >= x0 - mx && s <= x1 + mx && t >= y0 - my && t <= y1 + my;
    };
    p.rho = rho.rho;
    p.s_edges.resize(spec.nx + 1);
    p.t_edges.resize(spec.ny + 1);
    for (int i = 0; i <= spec.nx; ++i) p.s_edges[i] = x0 + (x1 - x0) * i / spec.nx;
    for (int j = 0; j <= spec.ny; ++j) p.t_edges[j] = y0 + (y1 - y0) * j / spec.ny;
    const double dx = (x1 - x0) / spec.nx, dy = (y1 - y0) / spec.ny;
    const int sub = std::max(1, spec.subsample);
    for (int i = 0; i < spec.nx; ++i) {
        for (int j = 0; j < spec.ny; ++j) {
            const Cpx c{x0 + dx * (i + 0.5), y0 + dy * (j + 0.5)};
            Cpx avg{};
            for (int a = 0; a < sub; ++a)
                for (int b = 0; b < sub; ++b)
                    avg += rho.rho(Cpx{x0 + dx * (i + (a + 0.5) / sub),
                                       y0 + dy * (j + (b + 0.5) / sub)});
            avg /= static_cast<double>(sub * sub);
            append_cell(p, i, j, c, avg * dx * dy);
        }
    }
    DensityGrid g;
    g.patches.push_back(std::move(p));
    return g;
}

DensityGrid build_corridor_grid(const CuttingFunction& cf, const std::function<Cpx(Cpx)>& f,
                                const QuadSpec& spec) {
    DensityGrid grid;
    const double r_out = cf.cutoff.outer, r_in = cf.cutoff.inner;
    const double mu = cf.mu;
    const double xi_min = spec.xi_min_factor * r_out, xi_max = r_out;
    auto rho_full = [cf, f](Cpx z) -> Cpx {
        if (!(z.imag() > 0.0)) return {};
        const Cpx dchi = dbar_chi(cf, z);
        if (dchi == Cpx{}) return {};
        return f(z) * dchi;
    };
    auto in_corridor = [cf, mu](Cpx z) {
        const double gv = cf.g.value(z.real());
        return gv > 0.0 && z.imag() >= gv && z.imag() <= (1.0 + mu) * gv;
    };

    {  // corridor-fitted patch: geometric columns, rows t = eta / g(xi)
        GridPatch p;
        const auto g_val = cf.g.value;
        const double t_margin = spec.zone_m * mu / spec.n_t;
        p.to_plane = [g_val](double s, double t) { return Cpx{s, t * g_val(s)}; };
        p.jac = [g_val](double s, double) { return g_val(s); };
        p.locate = [g_val, xi_min, xi_max, mu, t_margin](Cpx z, double& s, double& t) {
            s = z.real();
            if (s < xi_min || s > xi_max) return false;
            const double gv = g_val(s);
            if (!(gv > 0.0)) return false;
            t = z.imag() / gv;
            return t >= 1.0 - t_margin && t <= 1.0 + mu + t_margin;
        };
        // masked to the corridor band: the annulus patch owns the rest
        p.rho = [rho_full, in_corridor](Cpx z) -> Cpx {
            return in_corridor(z) ? rho_full(z) : Cpx{};
        };
        p.s_edges.resize(spec.n_xi + 1);
        for (int i = 0; i <= spec.n_xi; ++i)
            p.s_edges[i] = xi_min * std::pow(xi_max / xi_min, static_cast<double>(i) / spec.n_xi);
        p.t_edges.resize(spec.n_t + 1);
        for (int j = 0; j <= spec.n_t; ++j) p.t_edges[j] = 1.0 + mu * j / spec.n_t;
        for (int i = 0; i < spec.n_xi; ++i) {
            const double s0 = p.s_edges[i], s1 = p.s_edges[i + 1];
            const double sc = 0.5 * (s0 + s1);
            const double g0 = cf.g.value(s0), gc = cf.g.value(sc), g1 = cf.g.value(s1);
            if (!(gc > 0.0)) continue;
            const double col_area = (s1 - s0) * (g0 + 4.0 * gc + g1) / 6.0;  // Simpson in xi
            for (int j = 0; j < spec.n_t; ++j) {
                const double tc = 0.5 * (p.t_edges[j] + p.t_edges[j + 1]);
                const Cpx c{sc, tc * gc};
                append_cell(p, i, j, c, rho_full(c) * col_area * (mu / spec.n_t));
            }
        }
        grid.patches.push_back(std::move(p));
    }

    {  // cutoff annulus patch (polar chart), corridor band masked out
        GridPatch p;
        const double r_margin = spec.zone_m * (r_out - r_in) / spec.annulus_nr;
        p.to_plane = [](double s, double t) { return Cpx{s * std::cos(t), s * std::sin(t)}; };
        p.jac = [](double s, double) { return s; };
        p.locate = [r_in, r_out, r_margin](Cpx z, double& s, double& t) {
            s = std::abs(z);
            if (s < r_in - r_margin || s > r_out + r_margin || !(z.imag() > 0.0)) return false;
            t = std::arg(z);
            return t > 0.0 && t < kPi;
        };
        p.rho = [rho_full, in_corridor](Cpx z) -> Cpx {
            if (in_corridor(z)) return {};  // the corridor patch owns this band
            return rho_full(z);
        };
        p.s_edges.resize(spec.annulus_nr + 1);
        for (int i = 0; i <= spec.annulus_nr; ++i)
            p.s_edges[i] = r_in + (r_out - r_in) * i / spec.annulus_nr;
        p.t_edges.resize(spec.annulus_nth + 1);
        for (int j = 0; j <= spec.annulus_nth; ++j) p.t_edges[j] = kPi * j / spec.annulus_nth;
        for (int i = 0; i < spec.annulus_nr; ++i) {
            const double r0 = p.s_edges[i], r1 = p.s_edges[i + 1];
            const double rc = 0.5 * (r0 + r1);
            for (int j = 0; j < spec.annulus_nth; ++j) {
                const double t0 = p.t_edges[j], t1 = p.t_edges[j + 1];
                const double tc = 0.5 * (t0 + t1);
                const Cpx c = p.to_plane(rc, tc);
                const double area = 0.5 * (r1 * r1 - r0 * r0) * (t1 - t0);
                append_cell(p, i, j, c, p.rho(c) * area);
            }
        }
        grid.patches.push_back(std::move(p));
    }
    return grid;
}

Cpx cauchy_transform(const DensityGrid& grid, const QuadSpec& spec, Cpx z) {
    Cpx acc{};
    for (const auto& p : grid.patches) {
        double sz = 0, tz = 0;
        const bool inside = p.locate ? p.locate(z, sz, tz) : false;
        if (!inside) {
            const std::size_t n = p.centers.size();
            for (std::size_t q = 0; q < n; ++q) acc += p.masses[q] / (z - p.centers[q]);
            continue;
        }
        const std::size_t i0 = edge_index(p.s_edges, sz);
        const std::size_t j0 = edge_index(p.t_edges, tz);
        const int m = spec.zone_m;
        const std::size_t n = p.centers.size();
        for (std::size_t q = 0; q < n; ++q) {
            if (std::abs(p.idx_s[q] - static_cast<int>(i0)) <= m &&
                std::abs(p.idx_t[q] - static_cast<int>(j0)) <= m)
                continue;
            acc += p.masses[q] / (z - p.centers[q]);
        }
        acc += polar_block(p, spec, z, sz, tz, i0, j0);
    }
    return acc / kPi;
}

SolutionField standard_cauchy_solution(std::shared_ptr<const DensityGrid> grid, QuadSpec spec) {
    if (!std::isfinite(grid->total_abs_mass()))
        throw std::domain_error("standard_cauchy_solution: density is not integrable");
    SolutionField u;
    u.solver = "standard";
    u.grid_spec = "cells=" + std::to_string(grid->cell_count());
    u.eval = [grid, spec](Cpx z) { return cauchy_transform(*grid, spec, z); };
    return u;
}

// ---------------------------------------------------------------------------
// Jones solution
// ---------------------------------------------------------------------------

struct JonesData {
    std::vector<Cpx> zeta, mass;
    std::vector<double> absmass, y;
    std::vector<std::size_t> group_end;  // index of last cell with the same Im
    std::vector<Cpx> hq;                 // H(zeta_q, y_q)
    std::vector<int> patch, is, it;
    double alpha_inv = 0.0, alpha = 0.0;
    std::shared_ptr<const DensityGrid> grid;
    QuadSpec spec;

    double alpha_inv_for_stride(int stride) const {
        const std::size_t n = zeta.size();
        std::vector<double> best(std::max<std::size_t>(1, (n + stride - 1) / stride), 0.0);
        parallel_for(best.size(), [&](std::size_t b) {
            const std::size_t q = b * stride;
            if (q >= n) return;
            const double yq = y[q];
            double s = 0.0;
            for (std::size_t p2 = 0; p2 < n; ++p2) {
                if (y[p2] > yq) break;  // sorted by Im
                s += 2.0 * yq * absmass[p2] / std::norm(zeta[p2] - std::conj(zeta[q]));
            }
            best[b] = s;
        });
        double out = 0.0;
        for (double v : best) out = std::max(out, v);
        return out;
    }
};

JonesSolution jones_solution(std::shared_ptr<const DensityGrid> grid, QuadSpec spec,
                             JonesOptions opt) {
    auto data = std::make_shared<JonesData>();
    data->grid = grid;
    data->spec = spec;
    // Flatten and sort all cells by height.
    std::vector<std::size_t> order;
    {
        std::vector<Cpx> zs, ms;
        std::vector<int> pa, ii, jj;
        for (std::size_t pi = 0; pi < grid->patches.size(); ++pi) {
            const auto& p = grid->patches[pi];
            for (std::size_t q = 0; q < p.centers.size(); ++q) {
                zs.push_back(p.centers[q]);
                ms.push_back(p.masses[q]);
                pa.push_back(static_cast<int>(pi));
                ii.push_back(p.idx_s[q]);
                jj.push_back(p.idx_t[q]);
            }
        }
        order.resize(zs.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return zs[a].imag() < zs[b].imag(); });
        for (std::size_t k : order) {
            data->zeta.push_back(zs[k]);
            data->mass.push_back(ms[k]);
            data->absmass.push_back(std::abs(ms[k]));
            data->y.push_back(zs[k].imag());
            data->patch.push_back(pa[k]);
            data->is.push_back(ii[k]);
            data->it.push_back(jj[k]);
        }
    }
    const std::size_t n = data->zeta.size();
    JonesSolution sol;
    sol.data = data;
    if (n == 0) {
        sol.alpha_inv = 0.0;
        sol.field.solver = "jones";
        sol.field.grid_spec = "cells=0";
        sol.field.eval = [](Cpx) { return Cpx{}; };
        return sol;
    }
    data->group_end.resize(n);
    for (std::size_t k = n; k-- > 0;) {
        if (k + 1 < n && data->y[k + 1] == data->y[k])
            data->group_end[k] = data->group_end[k + 1];
        else
            data->group_end[k] = k;
    }
    // H(zeta_q, y_q): exponent integral at the quadrature nodes.
    data->hq.resize(n);
    parallel_for(n, [&](std::size_t q) {
        const std::size_t last = data->group_end[q];
        Cpx s{};
        for (std::size_t p2 = 0; p2 <= last; ++p2)
            s += data->absmass[p2] / (data->zeta[q] - std::conj(data->zeta[p2]));
        data->hq[q] = s;
    });
    data->alpha_inv = data->alpha_inv_for_stride(std::max(1, opt.probe_stride));
    sol.alpha_inv = data->alpha_inv;
    if (!(std::isfinite(data->alpha_inv)))
        throw std::domain_error("jones_solution: Carleson probe diverged");
    if (data->alpha_inv == 0.0) {
        sol.field.solver = "jones";
        sol.field.grid_spec = "cells=0";
        sol.field.eval = [](Cpx) { return Cpx{}; };
        return sol;
    }
    data->alpha = 1.0 / data->alpha_inv;

    sol.field.solver = "jones";
    sol.field.grid_spec = "cells=" + std::to_string(n);
    auto d = data;
    sol.field.eval = [d](Cpx z) -> Cpx {
        const std::size_t n = d->zeta.size();
        // prefix sums of |rho| dA / (z - conj(w)) in height order
        std::vector<Cpx> prefix(n);
        Cpx run{};
        for (std::size_t k = 0; k < n; ++k) {
            run += d->absmass[k] / (z - std::conj(d->zeta[k]));
            prefix[k] = run;
        }
        // zone bookkeeping per patch
        const auto& patches = d->grid->patches;
        std::vector<int> zi(patches.size(), -1), zj(patches.size(), -1);
        std::vector<double> zs(patches.size()), zt(patches.size());
        for (std::size_t pi = 0; pi < patches.size(); ++pi) {
            double s = 0, t = 0;
            if (patches[pi].locate && patches[pi].locate(z, s, t)) {
                zi[pi] = static_cast<int>(edge_index(patches[pi].s_edges, s));
                zj[pi] = static_cast<int>(edge_index(patches[pi].t_edges, t));
                zs[pi] = s;
                zt[pi] = t;
            }
        }
        const int m = d->spec.zone_m;
        const Cpx ialpha{0.0, d->alpha};
        Cpx acc{};
        for (std::size_t q = 0; q < n; ++q) {
            const int pi = d->patch[q];
            if (zi[pi] >= 0 && std::abs(d->is[q] - zi[pi]) <= m &&
                std::abs(d->it[q] - zj[pi]) <= m)
                continue;
            const Cpx kc = 1.0 / (z - d->zeta[q]);
            const Cpx kr = d->y[q] / (z - std::conj(d->zeta[q]));
            const Cpx ex = std::exp(ialpha * (d->hq[q] - prefix[d->group_end[q]]));
            acc += kc * kr * ex * d->mass[q];
        }
        Cpx u = (Cpx{0.0, 2.0} / kPi) * acc;
        // Singular block: the analytic factor is exactly 1 on the diagonal, so
        // the zone reduces to the plain Cauchy patch integral.
        for (std::size_t pi = 0; pi < patches.size(); ++pi) {
            if (zi[pi] < 0) continue;
            u += polar_block(patches[pi], d->spec, z, zs[pi], zt[pi],
                             static_cast<std::size_t>(zi[pi]), static_cast<std::size_t>(zj[pi])) /
                 kPi;
        }
        return u;
    };
    return sol;
}

double jones_alpha_inv_refined(const JonesSolution& sol, int stride) {
    if (!sol.data || sol.data->zeta.empty()) return 0.0;
    return sol.data->alpha_inv_for_stride(std::max(1, stride));
}

SolutionField transversal_solution(std::shared_ptr<const DensityGrid> grid,
                                   const SectorSpec& sector, QuadSpec spec) {
    // Geometry precondition: the near-origin support must sit inside the
    // declared sector (the cutoff annulus is exempt: it is compact and away
    // from the origin).
    for (const auto& p : grid->patches) {
        for (const Cpx& c : p.centers) {
            if (std::abs(c) > sector.radius) continue;
            const double xi = c.real(), eta = c.imag();
            if (xi <= 0.0 || eta < sector.slope_lo * xi * (1.0 - 1e-9) ||
                eta > sector.slope_hi * xi * (1.0 + 1e-9))
                throw std::domain_error("transversal_solution: support outside declared sector");
        }
    }
    SolutionField u;
    u.solver = "transversal";
    u.grid_spec = "cells=" + std::to_string(grid->cell_count());
    u.eval = [grid, spec](Cpx z) {
        Cpx c = cauchy_transform(*grid, spec, z);
        // analytic correction a(z): kernel poles lie in the lower half-plane
        Cpx a{};
        for (const auto& p : grid->patches) {
            const std::size_t n = p.centers.size();
            for (std::size_t q = 0; q < n; ++q) {
                const Cpx w = p.centers[q];
                a += (std::conj(w) / w) * p.masses[q] / (z - std::conj(w));
            }
        }
        return c - a / kPi;
    };
    return u;
}

SolutionField tangential_solution(const std::function<Cpx(Cpx)>& f, const CuttingFunction& cf,
                                  double b, std::shared_ptr<const DensityGrid> grid,
                                  QuadSpec spec, double contour_tol) {
    for (int i = 1; i <= 128; ++i) {
        const double x = b * i / 128.0;
        if (!(cf.g.value(x) > 0.0))
            throw std::domain_error("tangential_solution: g must be positive on (0,b]");
    }
    SolutionField u;
    u.solver = "tangential";
    u.grid_spec = "cells=" + std::to_string(grid->cell_count());
    const GraphFunction g = cf.g;
    const double mu = cf.mu;
    u.eval = [f, g, mu, b, grid, spec, contour_tol](Cpx z) {
        const Cpx area = cauchy_transform(*grid, spec, z);
        // contour over the reflected graph t -> t - i g(t)
        const Cpx contour = integrate_complex(
            [&](double t) -> Cpx {
                const double gv = t > 0.0 ? g.value(t) : 0.0;
                const Cpx node{t, -gv};
                const Cpx dz{1.0, t > 0.0 ? -g.derivative(t) : 0.0};
                return f(Cpx{t, gv}) * dz / (z - node);
            },
            0.0, b, contour_tol);
        return area + mu / (2.0 * kPi * Cpx{0.0, 1.0}) * contour;
    };
    return u;
}

ResidualReport dbar_residual(const SolutionField& u, const DensityField& rho,
                             const std::vector<Cpx>& points, double h_fd,
                             const std::function<bool(Cpx)>& guard) {
    ResidualReport rep;
    rep.h_fd = h_fd;
    std::vector<Cpx> accepted;
    for (const Cpx& z : points) {
        if (guard && guard(z)) {
            ++rep.points_skipped;
            continue;
        }
        accepted.push_back(z);
    }
    std::vector<double> res(accepted.size(), 0.0), rhos(accepted.size(), 0.0);
    parallel_for(accepted.size(), [&](std::size_t i) {
        const Cpx z = accepted[i];
        const Cpx ux = (u.eval(z + h_fd) - u.eval(z - h_fd)) / (2.0 * h_fd);
        const Cpx uy = (u.eval(z + Cpx{0, h_fd}) - u.eval(z - Cpx{0, h_fd})) / (2.0 * h_fd);
        const Cpx db = 0.5 * (ux + Cpx{0, 1} * uy);
        res[i] = std::abs(db - rho.rho(z));
        rhos[i] = std::abs(rho.rho(z));
    });
    for (std::size_t i = 0; i < accepted.size(); ++i) {
        rep.sup_abs = std::max(rep.sup_abs, res[i]);
        rep.sup_rho = std::max(rep.sup_rho, rhos[i]);
    }
    rep.points_used = static_cast<int>(accepted.size());
    return rep;
}

double cr_residual(const std::function<Cpx(Cpx)>& f, const std::vector<Cpx>& points,
                   double h_fd) {
    std::vector<double> res(points.size(), 0.0);
    parallel_for(points.size(), [&](std::size_t i) {
        const Cpx z = points[i];
        const Cpx fx = (f(z + h_fd) - f(z - h_fd)) / (2.0 * h_fd);
        const Cpx fy = (f(z + Cpx{0, h_fd}) - f(z - Cpx{0, h_fd})) / (2.0 * h_fd);
        res[i] = std::abs(0.5 * (fx + Cpx{0, 1} * fy));
    });
    double sup = 0.0;
    for (double r : res) sup = std::max(sup, r);
    return sup;
}

}  // namespace bsep
