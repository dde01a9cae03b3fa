#include "bsep/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bsep/parallel.hpp"
#include "bsep/quadrature.hpp"

namespace bsep {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr Cpx kI{0.0, 1.0};
}  // namespace

std::string to_string(SolverKind k) {
    switch (k) {
        case SolverKind::Standard: return "standard";
        case SolverKind::Jones: return "jones";
        case SolverKind::Transversal: return "transversal";
        default: return "tangential";
    }
}

double sup_abs(const std::function<Cpx(Cpx)>& F, const std::vector<Cpx>& points) {
    std::vector<double> vals(points.size(), 0.0);
    parallel_for(points.size(), [&](std::size_t i) { vals[i] = std::abs(F(points[i])); });
    double s = 0.0;
    for (double v : vals) s = std::max(s, v);
    return s;
}

namespace {

std::vector<Cpx> default_probe_grid(const CuttingFunction& cf) {
    // corridor vicinity plus rings inside the cutoff plateau and outside the
    // support; the transition annulus is skipped (its quadrature cannot
    // support pointwise finite differences)
    std::vector<Cpx> pts;
    const double R = cf.R;
    for (int i = 0; i < 24; ++i) {
        const double xi = R * (0.05 + 0.9 * i / 23.0);
        const double gv = cf.g.value(xi);
        if (gv <= 0.0) continue;
        const Cpx mid{xi, gv * (1.0 + 0.5 * cf.mu)};
        const Cpx above{xi, gv * (1.0 + cf.mu) * 1.5 + 0.05 * R};
        if (std::abs(mid) < 0.9 * R) pts.push_back(mid);
        if (std::abs(above) < 0.9 * R) pts.push_back(above);
    }
    for (int i = 1; i < 16; ++i) {
        const double th = kPi * i / 16.0;
        pts.push_back(0.6 * R * std::polar(1.0, th));
        pts.push_back(2.5 * cf.cutoff.outer / 2.0 * std::polar(1.0, th));
    }
    return pts;
}

bool near_any(Cpx z, const std::vector<Cpx>& set, double radius) {
    for (const Cpx& s : set)
        if (std::abs(z - s) < radius) return true;
    return false;
}

}  // namespace

SplitResult split(const AnalyticFunction& f, const CuttingFunction& cf, SolverKind solver,
                  const std::vector<Cpx>& s1_samples, const std::vector<Cpx>& s2_samples,
                  const SplitOptions& opt) {
    const SeparationReport sep = separation_check(s1_samples, s2_samples, cf.g, cf.mu);
    if (!sep.separated)
        throw std::domain_error("split: sample sets are not separated by (g, mu)");

    auto grid = std::make_shared<DensityGrid>(build_corridor_grid(cf, f.eval, opt.quad));
    SolutionField u;
    switch (solver) {
        case SolverKind::Standard:
            u = standard_cauchy_solution(grid, opt.quad);
            break;
        case SolverKind::Jones:
            u = jones_solution(grid, opt.quad).field;
            break;
        case SolverKind::Transversal:
            u = transversal_solution(grid, opt.sector, opt.quad);
            break;
        case SolverKind::Tangential:
            u = tangential_solution(f.eval, cf, opt.tangential_b, grid, opt.quad);
            break;
    }

    SplitResult sr;
    sr.u = u;
    const auto f_eval = f.eval;
    auto chi = [cf](Cpx z) { return chi_eval(cf, z); };
    sr.f1.eval = [f_eval, chi, u](Cpx z) { return f_eval(z) * chi(z) - u.eval(z); };
    // algebraically f(1-chi) + u; this arrangement keeps f = f1 + f2 exact
    sr.f1.singular_support = "S1";
    sr.f1.support_samples = s1_samples;
    auto f1_eval = sr.f1.eval;
    sr.f2.eval = [f_eval, f1_eval](Cpx z) { return f_eval(z) - f1_eval(z); };
    sr.f2.singular_support = "S2";
    sr.f2.support_samples = s2_samples;

    std::vector<Cpx> probes = opt.probe_points.empty() ? default_probe_grid(cf) : opt.probe_points;
    const double guard = 4.0 * opt.h_fd;
    std::vector<Cpx> off_s1, off_s2, off_all;
    for (const Cpx& z : probes) {
        if (!(z.imag() > guard)) continue;
        const bool n1 = near_any(z, s1_samples, guard), n2 = near_any(z, s2_samples, guard);
        if (!n1) off_s1.push_back(z);
        if (!n2) off_s2.push_back(z);
        if (!n1 && !n2) off_all.push_back(z);
    }
    SplitDiagnostics d;
    d.identity_residual = sup_abs(
        [&](Cpx z) { return f_eval(z) - sr.f1.eval(z) - sr.f2.eval(z); }, off_all);
    // CR residual of f1 off S1 inherits the corridor guard band: ramp edges
    // carry the d-bar mass that the solver matches only to quadrature order.
    std::vector<Cpx> cr1_pts, cr2_pts;
    for (const Cpx& z : off_s1) {
        const double gv = cf.g.value(z.real());
        if (gv > 0.0 && z.imag() > gv - guard && z.imag() < (1.0 + cf.mu) * gv + guard) continue;
        cr1_pts.push_back(z);
    }
    for (const Cpx& z : off_s2) {
        const double gv = cf.g.value(z.real());
        if (gv > 0.0 && z.imag() > gv - guard && z.imag() < (1.0 + cf.mu) * gv + guard) continue;
        cr2_pts.push_back(z);
    }
    d.cr_residual_f1 = cr_residual(sr.f1.eval, cr1_pts, opt.h_fd);
    d.cr_residual_f2 = cr_residual(sr.f2.eval, cr2_pts, opt.h_fd);
    d.sup_f1 = sup_abs(sr.f1.eval, off_s1);
    d.sup_f2 = sup_abs(sr.f2.eval, off_s2);
    sr.f1.sup_bound = d.sup_f1;
    sr.f2.sup_bound = d.sup_f2;
    sr.diagnostics = d;
    return sr;
}

AnalyticFunction test_constant(Cpx value) {
    AnalyticFunction f;
    f.eval = [value](Cpx) { return value; };
    f.sup_bound = std::abs(value);
    f.singular_support = "none";
    return f;
}

AnalyticFunction test_moebius_power(Cpx p, Cpx q, double beta, const std::vector<Cpx>& arc_samples,
                                    double tol) {
    // The principal-branch cut sits where w = (z-p)/(z-q) is negative real;
    // the declared arc must realize that circline.
    for (const Cpx& s : arc_samples) {
        if (std::abs(s - p) < 1e-12 || std::abs(s - q) < 1e-12) continue;
        const Cpx w = (s - p) / (s - q);
        if (!(w.real() < 0.0) || std::abs(w.imag()) > tol * std::abs(w))
            throw std::invalid_argument(
                "test_moebius_power: branch cut does not follow the declared arc");
    }
    AnalyticFunction f;
    f.eval = [p, q, beta](Cpx z) -> Cpx {
        const Cpx w = (z - p) / (z - q);
        return std::exp(kI * beta * std::log(w));
    };
    f.sup_bound = std::exp(std::abs(beta) * kPi);  // |w^{i beta}| = e^{-beta arg w}
    f.singular_support = "moebius-cut";
    f.support_samples = arc_samples;
    return f;
}

AnalyticFunction test_cauchy_density(const GraphFunction& phi, double a, double b,
                                     double quad_tol, DensityProfile profile) {
    if (!(a < b)) throw std::invalid_argument("test_cauchy_density: empty arc window");
    AnalyticFunction f;
    auto val = phi.value;
    auto der = phi.derivative;
    auto density = [a, b, profile](double t) -> double {
        if (t <= a || t >= b) return 0.0;
        if (profile == DensityProfile::HalfWave) return std::sin(kPi * (t - a) / (b - a));
        const double up = 2.0 * a, down = 0.5 * b;
        auto smooth = [](double s) { return 0.5 - 0.5 * std::cos(kPi * std::clamp(s, 0.0, 1.0)); };
        if (t < up) return smooth((t - a) / a);
        if (t > down) return smooth((b - t) / (b - down));
        return 1.0;
    };
    f.eval = [a, b, val, der, quad_tol, density](Cpx z) -> Cpx {
        // split at the profile breakpoints so the adaptive rule sees smooth
        // pieces
        const double cuts[3] = {2.0 * a, 0.5 * b, b};
        Cpx acc{};
        double lo = a;
        for (double hi : cuts) {
            if (hi <= lo) continue;
            acc += integrate_complex(
                [&](double t) -> Cpx {
                    const Cpx node{t, val(t)};
                    return density(t) * Cpx{1.0, der(t)} / (node - z);
                },
                lo, hi, quad_tol);
            lo = hi;
        }
        return acc / (2.0 * kPi * kI);
    };
    f.singular_support = "graph-arc";
    for (int i = 0; i <= 64; ++i) {
        const double t = a + (b - a) * i / 64.0;
        f.support_samples.push_back(Cpx{t, val(t)});
    }
    // |density| <= 1 and the endpoint vanishing keeps the transform bounded;
    // measured on a probe ring in practice
    f.sup_bound = 1.0;
    return f;
}

AnalyticFunction test_witness_function(const WitnessPair& pair) {
    AnalyticFunction f;
    f.eval = [pair](Cpx z) { return phi_witness(1, pair, z); };
    f.singular_support = "K1";
    for (int i = 0; i <= 64; ++i) {
        const double t = pair.params.x + (pair.params.X - pair.params.x) * i / 64.0;
        f.support_samples.push_back(pair.arc_point(1, t));
    }
    f.sup_bound = std::abs(phi1_at_A(pair)) + 1.0;
    return f;
}

VerifyReport verify_split(const AnalyticFunction& f, const SplitResult& sr,
                          const std::vector<Cpx>& diag_grid,
                          const std::vector<std::vector<Cpx>>& level_grids, double h_fd) {
    VerifyReport rep;
    rep.diagnostics.identity_residual = sup_abs(
        [&](Cpx z) { return f.eval(z) - sr.f1.eval(z) - sr.f2.eval(z); }, diag_grid);
    rep.diagnostics.cr_residual_f1 = cr_residual(sr.f1.eval, diag_grid, h_fd);
    rep.diagnostics.cr_residual_f2 = cr_residual(sr.f2.eval, diag_grid, h_fd);
    rep.diagnostics.sup_f1 = sup_abs(sr.f1.eval, diag_grid);
    rep.diagnostics.sup_f2 = sup_abs(sr.f2.eval, diag_grid);

    auto scan = [&](const AnalyticFunction& fj) {
        BoundednessScan s;
        for (const auto& grid : level_grids) s.sups.push_back(sup_abs(fj.eval, grid));
        bool monotone_breach = true;
        for (std::size_t l = 1; l < s.sups.size(); ++l) {
            const double g = s.sups[l] / std::max(s.sups[l - 1], 1e-300) - 1.0;
            s.growth.push_back(g);
            if (g <= 0.10) monotone_breach = false;
        }
        if (!s.growth.empty() && monotone_breach) s.certified_bounded = false;
        return s;
    };
    rep.f1_scan = scan(sr.f1);
    rep.f2_scan = scan(sr.f2);
    rep.not_certified_bounded = !rep.f1_scan.certified_bounded || !rep.f2_scan.certified_bounded;
    return rep;
}

}  // namespace bsep
