#include "bsep/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsep/quadrature.hpp"

namespace bsep {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr Cpx kI{0.0, 1.0};
}  // namespace

// ---------------------------------------------------------------------------
// Cells
// ---------------------------------------------------------------------------

double CellEdge::length() const {
    if (kind == Kind::Segment) return std::abs(b - a);
    return radius * (theta1 - theta0);
}

double CellEdge::distance(Cpx p) const {
    if (kind == Kind::Segment) {
        const Cpx d = b - a;
        const double len2 = std::norm(d);
        if (len2 == 0.0) return std::abs(p - a);
        double s = ((p - a).real() * d.real() + (p - a).imag() * d.imag()) / len2;
        s = std::clamp(s, 0.0, 1.0);
        return std::abs(p - (a + s * d));
    }
    const double ang = std::arg(p - arc_center);
    // bring ang into [theta0, theta0 + 2pi)
    double a0 = ang;
    while (a0 < theta0) a0 += 2.0 * kPi;
    if (a0 <= theta1) return std::abs(std::abs(p - arc_center) - radius);
    const Cpx e0 = arc_center + radius * std::polar(1.0, theta0);
    const Cpx e1 = arc_center + radius * std::polar(1.0, theta1);
    return std::min(std::abs(p - e0), std::abs(p - e1));
}

Cell make_polygon_cell(const std::vector<Cpx>& vertices, Cpx center) {
    if (vertices.size() < 3) throw std::invalid_argument("polygon cell needs >= 3 vertices");
    Cell c;
    c.center = center;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        CellEdge e;
        e.kind = CellEdge::Kind::Segment;
        e.a = vertices[i];
        e.b = vertices[(i + 1) % vertices.size()];
        c.boundary.push_back(e);
    }
    return c;
}

Cell make_disc_cell(Cpx disc_center, double radius, Cpx center) {
    if (!(radius > 0.0)) throw std::invalid_argument("disc cell needs radius > 0");
    Cell c;
    c.center = center;
    CellEdge e;
    e.kind = CellEdge::Kind::Arc;
    e.arc_center = disc_center;
    e.radius = radius;
    e.theta0 = 0.0;
    e.theta1 = 2.0 * kPi;
    e.a = disc_center + radius;
    e.b = disc_center + radius;
    c.boundary.push_back(e);
    return c;
}

double cell_perimeter(const Cell& cell) {
    double l = 0.0;
    for (const auto& e : cell.boundary) l += e.length();
    return l;
}

double cell_boundary_distance(const Cell& cell, Cpx p) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& e : cell.boundary) d = std::min(d, e.distance(p));
    return d;
}

std::vector<Cpx> cell_boundary_points(const Cell& cell, int per_edge) {
    std::vector<Cpx> pts;
    for (const auto& e : cell.boundary) {
        for (int i = 0; i < per_edge; ++i) {
            const double s = (i + 0.5) / per_edge;
            if (e.kind == CellEdge::Kind::Segment)
                pts.push_back(e.a + s * (e.b - e.a));
            else
                pts.push_back(e.arc_center +
                              e.radius * std::polar(1.0, e.theta0 + s * (e.theta1 - e.theta0)));
        }
    }
    return pts;
}

bool cell_contains(const Cell& cell, Cpx p) {
    // winding number of a dense boundary polyline
    const auto pts = cell_boundary_points(cell, 256);
    double winding = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Cpx a = pts[i] - p, b = pts[(i + 1) % pts.size()] - p;
        winding += std::arg(b / a);
    }
    return std::abs(winding) > kPi;  // |winding| ~ 2 pi inside, ~ 0 outside
}

double rotundity(const Cell& cell) {
    const double d = cell_boundary_distance(cell, cell.center);
    if (!(d > 0.0) || !cell_contains(cell, cell.center))
        throw std::invalid_argument("rotundity: center must lie strictly inside the cell");
    return 2.0 * kPi * d / cell_perimeter(cell);
}

// ---------------------------------------------------------------------------
// Witness pairs
// ---------------------------------------------------------------------------

Cpx WitnessPair::arc_point(int j, double t) const {
    const GraphFunction& phi = (j == 1) ? phi1 : phi2;
    return {t, phi.value(t)};
}

Cpx WitnessPair::arc_velocity(int j, double t) const {
    const GraphFunction& phi = (j == 1) ? phi1 : phi2;
    return {1.0, phi.derivative(t)};
}

Cpx WitnessPair::anchor() const { return {params.x, phi1.value(params.x)}; }

WitnessPair make_witness_pair(GraphFunction phi1, GraphFunction phi2, WitnessParams params) {
    WitnessPair p;
    p.phi1 = std::move(phi1);
    p.phi2 = std::move(phi2);
    p.params = params;
    validate_witness_params(p.params, p.phi1, p.phi2);
    return p;
}

void validate_witness_params(const WitnessParams& p, const GraphFunction& phi1,
                             const GraphFunction& phi2, int grid_n) {
    if (!(p.x > 0.0) || !(p.h > 0.0) || !(p.x < p.X))
        throw ScheduleInfeasible("witness window needs 0 < x < X and h > 0", p.x);
    if (p.x1() > p.x2() + 1e-12 * (p.X - p.x))
        throw ScheduleInfeasible("witness window needs x + h <= X - h", p.x);
    for (int i = 0; i <= grid_n; ++i) {
        const double t = p.x + (p.X - p.x) * i / grid_n;
        const double delta = phi2.value(t) - phi1.value(t);
        if (delta <= 0.0)
            throw ScheduleInfeasible("witness arcs K1, K2 must be disjoint over [x, X]", t);
        if (delta > p.h)
            throw ScheduleInfeasible("proximity constraint Delta(t) <= h violated", t);
    }
}

std::function<double(double)> trapezoid(const WitnessParams& p) {
    const double x = p.x, X = p.X, x1 = p.x1(), x2 = p.x2();
    const double h = p.h;
    return [x, X, x1, x2, h](double t) -> double {
        if (t <= x || t >= X) return 0.0;
        if (t < x1) return (t - x) / h;
        if (t > x2) return (X - t) / h;
        return 1.0;
    };
}

namespace {

// Integral of f^x(t) z_j'(t) / (z_j(t) - zeta) over [x, X], split at the
// trapezoid kinks. exclude in (x, X) removes a symmetric principal-value
// window around it.
Cpx witness_integral(const WitnessPair& pair, int j, Cpx zeta, double tol, double exclude = -1.0,
                     double exclude_radius = 0.0) {
    const WitnessParams& p = pair.params;
    const auto f = trapezoid(p);
    auto integrand = [&](double t) -> Cpx {
        const Cpx z = pair.arc_point(j, t);
        const Cpx d = z - zeta;
        if (std::norm(d) == 0.0) {
            // zeta is the window-edge arc point where the density vanishes:
            // the integrand limit is the ramp slope
            const double slope = t < p.x1() ? 1.0 / p.h : (t > p.x2() ? -1.0 / p.h : 0.0);
            return Cpx{slope, 0.0};
        }
        return f(t) * pair.arc_velocity(j, t) / d;
    };
    std::vector<double> cuts{p.x, p.x1(), p.x2(), p.X};
    if (exclude > p.x && exclude < p.X) {
        cuts.push_back(std::max(p.x, exclude - exclude_radius));
        cuts.push_back(std::min(p.X, exclude + exclude_radius));
    }
    std::sort(cuts.begin(), cuts.end());
    Cpx acc{};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        if (!(b > a)) continue;
        if (exclude > p.x && a >= exclude - exclude_radius && b <= exclude + exclude_radius)
            continue;  // principal-value window
        acc += integrate_complex(integrand, a, b, tol);
    }
    return acc;
}

}  // namespace

Cpx phi_witness(int j, const WitnessPair& pair, Cpx zeta, ArcSide side, double tol) {
    if (j != 1 && j != 2) throw std::invalid_argument("phi_witness: j must be 1 or 2");
    const double sign = (j == 1) ? 1.0 : -1.0;
    const WitnessParams& p = pair.params;
    const GraphFunction& phi = (j == 1) ? pair.phi1 : pair.phi2;
    // on-arc detection at rounding scale only: genuinely nearby probes are
    // regular evaluations
    const double t0 = zeta.real();
    const bool on_arc = t0 > p.x && t0 < p.X &&
                        std::abs(zeta.imag() - phi.value(t0)) <
                            1e-14 * std::max(1.0, std::abs(zeta.imag()));
    if (on_arc) {
        if (side == ArcSide::None)
            throw std::invalid_argument("phi_witness: on-arc evaluation needs a side flag");
        const double delta = 1e-9 * (p.X - p.x);
        const Cpx z0 = pair.arc_point(j, t0);
        const Cpx pv = witness_integral(pair, j, z0, tol, t0, delta) / (2.0 * kPi * kI);
        const double jump = trapezoid(p)(t0);
        // Sokhotski: the limit from the left of the orientation (above) adds
        // +f/2, from the right (below) subtracts it.
        const double half = (side == ArcSide::Above) ? 0.5 : -0.5;
        return sign * (pv + half * jump);
    }
    return sign * witness_integral(pair, j, zeta, tol) / (2.0 * kPi * kI);
}

Cpx phi1_at_A(const WitnessPair& pair, double tol) {
    // The density vanishes at t = x, so the boundary limit at the anchor is a
    // convergent integral.
    return witness_integral(pair, 1, pair.anchor(), tol) / (2.0 * kPi * kI);
}

double phi1_blowup_lower_bound(const WitnessParams& p) {
    return std::log((p.x2() - p.x1()) / (2.0 * p.h)) / (2.0 * kPi) - 2.0;
}

WitnessParams schedule(ScheduleKind kind, double x, const GraphFunction& phi1,
                       const GraphFunction& phi2, int sup_samples) {
    if (!(x > 0.0)) throw ScheduleInfeasible("schedule needs x > 0", x);
    WitnessParams p;
    p.x = x;
    p.schedule = kind;
    if (kind == ScheduleKind::Angle) {
        double eps = 0.0;
        for (int i = 1; i <= sup_samples; ++i) {
            const double t = 2.0 * x * i / sup_samples;
            eps = std::max(eps, (std::abs(phi1.value(t)) + std::abs(phi2.value(t))) / t);
        }
        p.epsilon = eps;
        p.X = 2.0 * x;
        p.h = 2.0 * eps * x;
    } else {
        const double p1 = phi1.value(x);
        if (!(p1 > 0.0))
            throw ScheduleInfeasible("upper-angle schedule needs phi1(x) > 0", x);
        p.X = x + 0.5 * p1;
        double sup_dprime = 0.0;
        for (int i = 0; i <= sup_samples; ++i) {
            const double t = p.X * i / sup_samples;
            sup_dprime = std::max(sup_dprime,
                                  std::abs(phi2.derivative(t) - phi1.derivative(t)));
        }
        p.epsilon = (phi2.value(x) - p1) / p1 + sup_dprime;
        p.h = 2.0 * p1 * p.epsilon;
    }
    validate_witness_params(p, phi1, phi2);
    return p;
}

Cell cell_for(ScheduleKind kind, double x, const GraphFunction& phi1, double k,
              const WitnessParams& params) {
    Cell cell;
    const Cpx anchor{x, phi1.value(x)};
    if (kind == ScheduleKind::Angle) {
        // truncated full angle A_k cut at Re zeta = 3x
        cell = make_polygon_cell({Cpx{0.0, 0.0}, Cpx{3.0 * x, 3.0 * k * x},
                                  Cpx{3.0 * x, -3.0 * k * x}},
                                 anchor);
    } else {
        const double p1 = phi1.value(x);
        cell = make_polygon_cell({Cpx{x - p1, 0.0}, Cpx{x + p1, 0.0}, Cpx{x + p1, 2.0 * p1},
                                  Cpx{x - p1, 2.0 * p1}},
                                 anchor);
    }
    // containment of K_1 at sampled resolution
    const int n = 512;
    for (int i = 0; i <= n; ++i) {
        const double t = params.x + (params.X - params.x) * i / n;
        if (!cell_contains(cell, Cpx{t, phi1.value(t)}))
            throw std::invalid_argument("cell_for: K_1 escapes the cell at t = " +
                                        std::to_string(t));
    }
    return cell;
}

GapReport lemma21_gap(const std::function<Cpx(Cpx)>& phi, Cpx phi_at_center, const Cell& cell,
                      const std::vector<Cpx>& K_polyline, const std::function<Cpx(Cpx)>& h_test,
                      double h_fd) {
    const double diam = cell_perimeter(cell) / kPi;
    // h_test must be analytic inside the cell; the difference step scales
    // with the cell so the check stays meaningful for tiny cells
    {
        const double h = std::min(h_fd, 1e-4 * diam);
        std::vector<Cpx> interior;
        for (const Cpx& q : cell_boundary_points(cell, 8)) {
            const Cpx p = q + 0.25 * (cell.center - q);
            if (cell_boundary_distance(cell, p) > 4.0 * h) interior.push_back(p);
        }
        double cr = 0.0;
        for (const Cpx& p : interior) {
            const Cpx fx = (h_test(p + h) - h_test(p - h)) / (2.0 * h);
            const Cpx fy = (h_test(p + Cpx{0, h}) - h_test(p - Cpx{0, h})) / (2.0 * h);
            cr = std::max(cr, std::abs(0.5 * (fx + kI * fy)));
        }
        if (cr * diam > 1e-4 * std::max(1.0, std::abs(phi_at_center)))
            throw std::invalid_argument("lemma21_gap: h_test is not analytic in the cell");
    }
    auto dist_to_K = [&](Cpx p) {
        double d = std::numeric_limits<double>::infinity();
        for (const Cpx& q : K_polyline) d = std::min(d, std::abs(p - q));
        return d;
    };
    GapReport rep;
    rep.rhs = 0.5 * rotundity(cell) * std::abs(phi_at_center);
    const double k_guard = 1e-7 * diam;
    // ring just inside the boundary plus probes collapsing onto the center
    std::vector<Cpx> probes;
    for (const Cpx& q : cell_boundary_points(cell, 96)) {
        const double d = std::abs(cell.center - q);
        if (d == 0.0) continue;
        probes.push_back(q + 1e-6 * diam * (cell.center - q) / d);
    }
    for (int ring = 1; ring <= 6; ++ring) {
        const double r = diam * std::pow(10.0, -1.5 - 0.5 * ring);
        for (int a = 0; a < 12; ++a)
            probes.push_back(cell.center + std::polar(r, 2.0 * kPi * (a + 0.5) / 12.0));
    }
    for (const Cpx& p : probes) {
        if (!cell_contains(cell, p)) continue;
        if (dist_to_K(p) < k_guard) continue;
        rep.lhs = std::max(rep.lhs, std::abs(phi(p) - h_test(p)));
        ++rep.probes;
    }
    return rep;
}

SumScanReport sum_bound_scan(const WitnessPair& pair, const SumScanSpec& spec) {
    const WitnessParams& p = pair.params;
    SumScanReport rep;
    rep.probe_offset = spec.probe_offset_factor * p.h;
    const double delta = rep.probe_offset;
    auto sum_at = [&](Cpx z) {
        return std::abs(phi_witness(1, pair, z) + phi_witness(2, pair, z));
    };
    double sup = 0.0;
    for (int i = 0; i < spec.n_along; ++i) {
        const double t = p.x + (p.X - p.x) * (i + 0.5) / spec.n_along;
        const double p1 = pair.phi1.value(t), p2 = pair.phi2.value(t);
        sup = std::max(sup, sum_at(Cpx{t, p1 - delta}));          // below both arcs
        sup = std::max(sup, sum_at(Cpx{t, 0.5 * (p1 + p2)}));     // between the arcs
        sup = std::max(sup, sum_at(Cpx{t, p2 + delta}));          // above both arcs
    }
    for (int i = 0; i < spec.n_ring; ++i) {
        const Cpx z = std::polar(spec.ring_factor * p.X, 2.0 * kPi * (i + 0.5) / spec.n_ring);
        sup = std::max(sup, sum_at(z));
    }
    rep.sup_sum = sup;
    rep.sup_w1_anchor = std::abs(phi1_at_A(pair));
    return rep;
}

KernelSplit kernel_split(double t, double t0, const GraphFunction& phi1,
                         const GraphFunction& phi2) {
    if (t == t0) throw std::domain_error("kernel_split: t == t0 is singular");
    const Cpx z1{t, phi1.value(t)}, z2{t, phi2.value(t)};
    const Cpx z0{t0, phi1.value(t0)};
    const Cpx v1{1.0, phi1.derivative(t)}, v2{1.0, phi2.derivative(t)};
    auto remainder = [t, t0](double val_t, double val_t0, double deriv_t) {
        return val_t - val_t0 - deriv_t * (t - t0);
    };
    const double d1 = phi1.derivative(t), d2 = phi2.derivative(t);
    const double r1 = remainder(phi1.value(t), phi1.value(t0), d1);
    const double r2 = remainder(phi2.value(t), phi2.value(t0), d2);
    const double rd = remainder(phi2.value(t) - phi1.value(t), phi2.value(t0) - phi1.value(t0),
                                d2 - d1);
    const double delta0 = phi2.value(t0) - phi1.value(t0);
    const Cpx denom = (z1 - z0) * (z2 - z0);
    KernelSplit ks;
    ks.k1 = (kI * rd + d2 * r1 - d1 * r2) / denom;
    ks.k2 = kI * delta0 * v1 / denom;
    ks.direct = v1 / (z1 - z0) - v2 / (z2 - z0);
    return ks;
}

std::function<Cpx(Cpx)> fit_minimax_polynomial(const std::vector<Cpx>& points,
                                               const std::vector<Cpx>& values, int degree,
                                               int iterations) {
    const std::size_t n = points.size();
    const int m = degree + 1;
    if (n < static_cast<std::size_t>(m))
        throw std::invalid_argument("fit_minimax_polynomial: not enough points");
    // scale to the unit disc for conditioning
    Cpx mean{};
    for (const Cpx& p : points) mean += p;
    mean /= static_cast<double>(n);
    double scale = 0.0;
    for (const Cpx& p : points) scale = std::max(scale, std::abs(p - mean));
    if (scale == 0.0) scale = 1.0;

    std::vector<double> w(n, 1.0);
    std::vector<Cpx> coef(m, Cpx{});
    for (int it = 0; it < iterations; ++it) {
        // weighted least squares via normal equations
        std::vector<std::vector<Cpx>> A(m, std::vector<Cpx>(m, Cpx{}));
        std::vector<Cpx> rhs(m, Cpx{});
        for (std::size_t i = 0; i < n; ++i) {
            const Cpx z = (points[i] - mean) / scale;
            Cpx powj{1.0, 0.0};
            std::vector<Cpx> pows(m);
            for (int j = 0; j < m; ++j) {
                pows[j] = powj;
                powj *= z;
            }
            for (int r = 0; r < m; ++r) {
                for (int c = 0; c < m; ++c) A[r][c] += w[i] * std::conj(pows[r]) * pows[c];
                rhs[r] += w[i] * std::conj(pows[r]) * values[i];
            }
        }
        // Gaussian elimination with partial pivoting
        for (int col = 0; col < m; ++col) {
            int piv = col;
            for (int r = col + 1; r < m; ++r)
                if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
            std::swap(A[col], A[piv]);
            std::swap(rhs[col], rhs[piv]);
            if (std::abs(A[col][col]) < 1e-300) continue;
            for (int r = col + 1; r < m; ++r) {
                const Cpx f = A[r][col] / A[col][col];
                for (int c = col; c < m; ++c) A[r][c] -= f * A[col][c];
                rhs[r] -= f * rhs[col];
            }
        }
        for (int r = m - 1; r >= 0; --r) {
            Cpx s = rhs[r];
            for (int c = r + 1; c < m; ++c) s -= A[r][c] * coef[c];
            coef[r] = std::abs(A[r][r]) < 1e-300 ? Cpx{} : s / A[r][r];
        }
        // Lawson reweighting toward the minimax solution
        double wsum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Cpx z = (points[i] - mean) / scale;
            Cpx v{};
            Cpx powj{1.0, 0.0};
            for (int j = 0; j < m; ++j) {
                v += coef[j] * powj;
                powj *= z;
            }
            w[i] *= std::abs(values[i] - v) + 1e-14;
            wsum += w[i];
        }
        if (wsum <= 0.0) break;
        for (double& wi : w) wi /= wsum;
    }
    return [coef, mean, scale](Cpx z) {
        const Cpx zz = (z - mean) / scale;
        Cpx v{};
        Cpx powj{1.0, 0.0};
        for (const Cpx& c : coef) {
            v += c * powj;
            powj *= zz;
        }
        return v;
    };
}

}  // namespace bsep
