// Acceptance suite: one line per criterion, nonzero exit count on failure.
//
// Each criterion pins its tolerances in code; the suite prints the measured
// numbers next to every verdict so reports can be audited offline.

#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "bsep/cli_io.hpp"
#include "bsep/fit.hpp"
#include "bsep/parallel.hpp"
#include "bsep/scenarios.hpp"

using namespace bsep;

namespace {

constexpr double kTau = 2.0 * 3.14159265358979323846;

int g_failures = 0;

void verdict(int criterion, bool pass, const std::string& what, const std::string& detail) {
    std::printf("CRITERION %d [%s] %s :: %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// 1. Unit-disc Cauchy transform oracle
// ---------------------------------------------------------------------------
void criterion_1() {
    QuadSpec spec;
    spec.nx = spec.ny = 512;
    spec.subsample = 4;
    auto grid = std::make_shared<DensityGrid>(build_tensor_grid(make_disc_density(), spec));
    SolutionField u = standard_cauchy_solution(grid, spec);
    const int n = 64;
    std::vector<double> err(n * n, 0.0);
    parallel_for(n * n, [&](std::size_t idx) {
        const int i = static_cast<int>(idx) % n, j = static_cast<int>(idx) / n;
        const Cpx z{-1.2 + 2.4 * (i + 0.5) / n, -1.2 + 2.4 * (j + 0.5) / n};
        const Cpx exact = std::abs(z) <= 1.0 ? std::conj(z) : 1.0 / z;
        err[idx] = std::abs(u(z) - exact) / std::max(1.0, std::abs(exact));
    });
    double worst = 0.0;
    for (double e : err) worst = std::max(worst, e);
    verdict(1, worst <= 1e-3, "unit-disc identity u = conj(z) / 1/z",
            "max relative error " + fmt(worst) + " on 64x64 evals, 512x512 quadrature (tol 1e-3)");
}

// ---------------------------------------------------------------------------
// 2. d-bar residual for every solver/scenario pair
// ---------------------------------------------------------------------------
struct ResidualLevels {
    double rel0 = 0.0, rel1 = 0.0;
    double order() const { return std::log2(rel0 / rel1); }
};

std::vector<Cpx> corridor_probes(const CuttingFunction& cf, double lo, double hi, int n) {
    std::vector<Cpx> pts;
    for (int i = 0; i < n; ++i) {
        const double xi = lo + (hi - lo) * (i + 0.5) / n;
        const double gv = cf.g.value(xi);
        pts.push_back(Cpx{xi, gv * (1.0 + 0.35 * cf.mu)});
        pts.push_back(Cpx{xi, gv * (1.0 + 0.65 * cf.mu)});
        pts.push_back(Cpx{xi, gv * (1.0 + cf.mu) * 1.3});  // above the corridor, rho = 0
    }
    return pts;
}

std::function<bool(Cpx)> corridor_guard(const CuttingFunction& cf, double h) {
    return [cf, h](Cpx z) {
        const double gv = cf.g.value(z.real());
        if (gv <= 0.0) return true;
        const double d = std::min(std::abs(z.imag() - gv),
                                  std::abs(z.imag() - (1.0 + cf.mu) * gv));
        return d < 2.0 * h;
    };
}

void criterion_2() {
    bool all = true;
    std::string detail;
    auto one = [](Cpx) { return Cpx{1.0, 0.0}; };

    auto run_pair = [&](const char* name, const CuttingFunction& cf,
                        const std::vector<Cpx>& pts, double h0, const QuadSpec& spec0,
                        const QuadSpec& spec1, auto&& make_solver) {
        const DensityField rho = make_corridor_density(cf, one);
        ResidualLevels lv;
        {
            auto grid = std::make_shared<DensityGrid>(build_corridor_grid(cf, one, spec0));
            lv.rel0 = dbar_residual(make_solver(grid, spec0), rho, pts, h0,
                                    corridor_guard(cf, h0))
                          .relative();
        }
        {
            auto grid = std::make_shared<DensityGrid>(build_corridor_grid(cf, one, spec1));
            lv.rel1 = dbar_residual(make_solver(grid, spec1), rho, pts, 0.5 * h0,
                                    corridor_guard(cf, 0.5 * h0))
                          .relative();
        }
        const bool ok = lv.rel0 <= 0.05 && lv.rel1 <= 0.05 && lv.order() >= 1.5;
        all = all && ok;
        detail += std::string(name) + ": rel " + fmt(lv.rel0) + " -> " + fmt(lv.rel1) +
                  " (order " + fmt(lv.order()) + (ok ? ") " : " BELOW GATE) ");
    };

    ScenarioBundle ex1 = scenario_ex1(1.0, 1.0);
    QuadSpec a0, a1;
    a0.n_xi = 512;
    a0.n_t = 32;
    a1.n_xi = 1024;
    a1.n_t = 64;
    a1.annulus_nr = 64;
    a1.annulus_nth = 192;
    const auto pts1 = corridor_probes(ex1.cf, 0.30 * ex1.cf.R, 0.80 * ex1.cf.R, 10);
    run_pair("ex1/standard", ex1.cf, pts1, 0.04 * ex1.cf.R, a0, a1,
             [](auto grid, const QuadSpec& s) { return standard_cauchy_solution(grid, s); });
    run_pair("ex1/transversal", ex1.cf, pts1, 0.04 * ex1.cf.R, a0, a1,
             [&](auto grid, const QuadSpec& s) {
                 return transversal_solution(grid, ex1.sector, s);
             });
    run_pair("ex1/jones", ex1.cf, pts1, 0.04 * ex1.cf.R, a0, a1,
             [](auto grid, const QuadSpec& s) {
                 return jones_solution(grid, s, JonesOptions{8}).field;
             });

    ScenarioBundle ex3 = scenario_ex3(make_power_graph(1.0, 2.0, 0.5), 0.5);
    QuadSpec b0, b1;
    b0.n_xi = 1024;
    b0.n_t = 48;
    b1.n_xi = 4096;
    b1.n_t = 96;
    b1.annulus_nr = 64;
    b1.annulus_nth = 192;
    run_pair("ex3/tangential", ex3.cf, corridor_probes(ex3.cf, 0.30, 0.50, 10), 0.015, b0, b1,
             [&](auto grid, const QuadSpec& s) {
                 return tangential_solution(one, ex3.cf, ex3.tangential_b, grid, s);
             });

    verdict(2, all, "finite-difference d-bar residual <= 5%, order >= 1.5", detail);
}

// ---------------------------------------------------------------------------
// 3. Carleson box certificate
// ---------------------------------------------------------------------------
void criterion_3() {
    const double k = 0.25;
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    bool ratio_ok = true, log_ok = true;
    std::string detail;
    for (double mu : {0.5, 1.0, 2.0}) {
        CuttingFunction cf = CuttingFunction::make(make_linear_graph(k, 400.0), mu, 400.0);
        const double a_slope = 1.0 / ((1.0 + mu) * k) - 1.0;  // box keeps the corridor inside
        double rmin = 1e300, rmax = 0.0, emin = 1e300, emax = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const double side = std::pow(10.0, -4.0 * unit(rng));  // 4 decades
            const double a = 0.95 * a_slope * side * unit(rng);
            const BoxIntegral bi = carleson_box_integral(cf, a, a + side);
            rmin = std::min(rmin, bi.ratio());
            rmax = std::max(rmax, bi.ratio());
            emin = std::min(emin, bi.envelope_ratio());
            emax = std::max(emax, bi.envelope_ratio());
        }
        const double lg = std::log(1.0 + mu);
        ratio_ok = ratio_ok && (rmax / rmin <= 1.1);
        log_ok = log_ok && (emax / lg <= 1.1) && (emin / lg >= 0.9);
        detail += "mu=" + fmt(mu) + ": grad ratio " + fmt(rmin) + ".." + fmt(rmax) +
                  " (max/min " + fmt(rmax / rmin) + "), corridor envelope/(log(1+mu)) " +
                  fmt(emin / lg) + ".." + fmt(emax / lg) + "; ";
    }
    verdict(3, ratio_ok && log_ok,
            "box mass ratio constant over 100 boxes x 4 decades; envelope = log(1+mu) +-10%",
            detail);
}

// ---------------------------------------------------------------------------
// 4. Boundedness contrast
// ---------------------------------------------------------------------------
struct ShellScan {
    std::vector<double> sups, growth;
};

ShellScan shell_scan(const std::function<Cpx(Cpx)>& F, double r0, int levels) {
    ShellScan s;
    for (int l = 0; l < levels; ++l) {
        const double hi = r0 * std::pow(0.5, l), lo = 0.5 * hi;
        double sup = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int a = 1; a < 12; ++a) {
                const double r = lo + (hi - lo) * (i + 0.5) / 3;
                sup = std::max(sup, std::abs(F(std::polar(r, 3.14159265358979323846 * a / 12))));
            }
        if (!s.sups.empty()) s.growth.push_back(sup / s.sups.back() - 1.0);
        s.sups.push_back(sup);
    }
    return s;
}

void criterion_4() {
    auto one = [](Cpx) { return Cpx{1.0, 0.0}; };
    bool plateau_ok = true;
    std::string detail;
    auto check_plateau = [&](const char* name, const ShellScan& s) {
        bool ok = true;
        for (double g : s.growth) ok = ok && g < 0.10;
        plateau_ok = plateau_ok && ok;
        detail += std::string(name) + " growth/level:";
        for (double g : s.growth) detail += " " + fmt(100 * g) + "%";
        detail += ok ? " (plateau); " : " (NOT a plateau); ";
    };

    ScenarioBundle ex1 = scenario_ex1(1.0, 1.0);
    QuadSpec spec;
    spec.n_xi = 768;
    spec.n_t = 24;
    spec.xi_min_factor = 1e-7;
    auto grid = std::make_shared<DensityGrid>(build_corridor_grid(ex1.cf, one, spec));
    const double r0 = 0.1 * ex1.cf.R;
    check_plateau("ex1 transversal",
                  shell_scan(transversal_solution(grid, ex1.sector, spec).eval, r0, 4));
    check_plateau("ex1 jones",
                  shell_scan(jones_solution(grid, spec, JonesOptions{8}).field.eval, r0, 4));

    AnalyticFunction f = test_moebius_power(ex1.s1_start, ex1.s1_end, 0.7, ex1.s1_samples);
    SplitOptions opt;
    opt.sector = ex1.sector;
    opt.quad = spec;
    SplitResult sr = split(f, ex1.cf, SolverKind::Transversal, ex1.s1_samples, ex1.s2_samples,
                           opt);
    check_plateau("ex1 split f1", shell_scan(sr.f1.eval, r0, 4));
    check_plateau("ex1 split f2", shell_scan(sr.f2.eval, r0, 4));

    // contrast: the uncorrected standard solution on the tangential scenario,
    // driven by the catalog density whose transform stays O(1) down to the
    // 1e-5 scale (the strongest bounded witness of the blow-up)
    ScenarioBundle ex3 = scenario_ex3(make_power_graph(1.0, 2.0, 0.5), 0.5);
    QuadSpec spec3;
    spec3.n_xi = 1024;
    spec3.n_t = 24;
    spec3.xi_min_factor = 1e-8;
    AnalyticFunction fw = test_cauchy_density(make_scaled_graph(ex3.cf.g, 0.5), 1e-5, 0.4, 1e-8,
                                              DensityProfile::Plateau);
    auto grid3 = std::make_shared<DensityGrid>(build_corridor_grid(ex3.cf, fw.eval, spec3));
    const ShellScan blow = shell_scan(standard_cauchy_solution(grid3, spec3).eval, 0.1, 4);
    double total = 1.0;
    for (double g : blow.growth) total *= 1.0 + g;
    const double mean_growth = std::pow(total, 1.0 / blow.growth.size()) - 1.0;
    const bool blow_ok = mean_growth >= 0.25;
    detail += "ex3 uncorrected standard growth/level:";
    for (double g : blow.growth) detail += " " + fmt(100 * g) + "%";
    detail += " mean " + fmt(100 * mean_growth) + "%/level, total " + fmt(100 * (total - 1)) +
              "% over the scan, monotone (gate 25%/level; log-type blow-up cannot sustain a "
              "fixed per-level rate)";
    verdict(4, plateau_ok && blow_ok,
            "bounded solvers plateau (<10%/level); uncorrected standard blows up (>=25%/level)",
            detail);
}

// ---------------------------------------------------------------------------
// 5. Witness blow-up with bounded sum
// ---------------------------------------------------------------------------
void criterion_5() {
    GraphFunction p1 = make_power_graph(1.0, 2.0, 0.05);
    GraphFunction p2 = make_power_graph(2.0, 2.0, 0.05);
    const double b = 0.04, k = 1.0;
    std::vector<double> lx, vals, scans, rots;
    bool lower_ok = true;
    for (int n = 3; n <= 13; ++n) {
        const double x = b * std::pow(2.0, -n);
        const WitnessParams wp = schedule(ScheduleKind::Angle, x, p1, p2);
        const WitnessPair pair = make_witness_pair(p1, p2, wp);
        const double v = std::abs(phi1_at_A(pair));
        lower_ok = lower_ok && v >= phi1_blowup_lower_bound(wp);
        scans.push_back(sum_bound_scan(pair).sup_sum);
        rots.push_back(rotundity(cell_for(ScheduleKind::Angle, x, p1, k, wp)));
        lx.push_back(std::log((wp.X - wp.x) / wp.h));
        vals.push_back(v);
    }
    const LinearFit fit = linear_fit(lx, vals);
    const double target = 1.0 / kTau;
    const bool slope_ok = std::abs(fit.slope - target) <= 0.2 * target;
    double smax = 0, smin = 1e300, rmax = 0, rmin = 1e300;
    for (double s : scans) {
        smax = std::max(smax, s);
        smin = std::min(smin, s);
    }
    for (double r : rots) {
        rmax = std::max(rmax, r);
        rmin = std::min(rmin, r);
    }
    const bool scan_ok = smax / smin <= 4.0;
    const bool rot_ok = rmin > 0.0 && (rmax / rmin - 1.0) < 0.01;
    verdict(5, lower_ok && slope_ok && scan_ok && rot_ok,
            "witness family n=3..13: blow-up lower bound, slope 1/(2pi), bounded sum, rotundity",
            "slope " + fmt(fit.slope) + " (target " + fmt(target) + "), sum scan max/min " +
                fmt(smax / smin) + ", |phi1(A)| " + fmt(vals.front()) + " -> " +
                fmt(vals.back()) + ", rotundity variation " + fmt(100 * (rmax / rmin - 1)) + "%");
}

// ---------------------------------------------------------------------------
// 6. Kernel-split identity
// ---------------------------------------------------------------------------
void criterion_6() {
    GraphFunction p1 = make_power_graph(1.0, 2.0, 0.5);
    GraphFunction p2 = make_power_graph(2.0, 2.0, 0.5);
    std::mt19937_64 rng(999);
    std::uniform_real_distribution<double> ts(0.05, 0.45);
    double worst = 0.0;
    int tested = 0;
    while (tested < 10000) {
        const double t = ts(rng), t0 = ts(rng);
        if (std::abs(t - t0) < 1e-9) continue;
        ++tested;
        const KernelSplit ks = kernel_split(t, t0, p1, p2);
        worst = std::max(worst,
                         std::abs(ks.k1 + ks.k2 - ks.direct) / std::max(1.0, std::abs(ks.direct)));
    }
    verdict(6, worst <= 1e-10, "K1 + K2 equals the direct kernel at 10^4 random points",
            "max deviation " + fmt(worst) + " (tol 1e-10)");
}

// ---------------------------------------------------------------------------
// 7. Cell inequality with minimax competitors
// ---------------------------------------------------------------------------
void criterion_7() {
    GraphFunction p1 = make_power_graph(1.0, 2.0, 0.05);
    GraphFunction p2 = make_power_graph(2.0, 2.0, 0.05);
    int done = 0, ok = 0;
    double worst_margin = 1e300;
    for (double x : {0.02, 0.01, 0.005, 0.0025, 0.00125}) {
        const WitnessParams wp = schedule(ScheduleKind::Angle, x, p1, p2);
        const WitnessPair pair = make_witness_pair(p1, p2, wp);
        auto phi = [&](Cpx z) { return phi_witness(1, pair, z); };
        const Cpx phiA = phi1_at_A(pair);
        std::vector<Cpx> K;
        for (int i = 0; i <= 96; ++i)
            K.push_back(pair.arc_point(1, wp.x + (wp.X - wp.x) * i / 96.0));
        const Cpx A = pair.anchor();
        std::vector<Cell> cells;
        cells.push_back(cell_for(ScheduleKind::Angle, x, p1, 4.0, wp));
        cells.push_back(make_polygon_cell({A + Cpx{-1.6 * x, -1.6 * x}, A + Cpx{1.6 * x, -1.6 * x},
                                           A + Cpx{1.6 * x, 1.6 * x}, A + Cpx{-1.6 * x, 1.6 * x}},
                                          A));
        cells.push_back(make_disc_cell(A + Cpx{0.0, 0.5 * x}, 2.0 * x, A));
        cells.push_back(make_disc_cell(A + Cpx{0.3 * x, 0.0}, 2.5 * x, A));
        for (const Cell& cell : cells) {
            // adversarial competitor: degree-4 minimax fit on an interior ring
            std::vector<Cpx> fit_pts, fit_vals;
            for (const Cpx& q : cell_boundary_points(cell, 24)) {
                const Cpx pt = q + 0.02 * (cell.center - q);
                fit_pts.push_back(pt);
                fit_vals.push_back(phi(pt));
            }
            auto h4 = fit_minimax_polynomial(fit_pts, fit_vals, 4);
            const GapReport g = lemma21_gap(phi, phiA, cell, K, h4);
            ++done;
            if (g.lhs >= g.rhs - 1e-6) ++ok;
            worst_margin = std::min(worst_margin, g.lhs - g.rhs);
        }
    }
    verdict(7, ok == done && done == 20,
            "sup |phi - h| >= rotundity/2 * |phi(A)| for 20 minimax-fitted triples",
            fmt(ok) + "/" + fmt(done) + " hold; worst margin " + fmt(worst_margin) +
                " (slack 1e-6)");
}

// ---------------------------------------------------------------------------
// 8. Disc-chain splitting
// ---------------------------------------------------------------------------
void criterion_8() {
    DiscChain chain = make_geometric_chain(make_power_graph(1.0, 2.0, 1.0), 0.5, 0.25, 40);
    const auto centers = chain.centers();
    AnalyticFunction f;
    const int n_poles = 10;
    std::vector<Cpx> poles(centers.begin(), centers.begin() + n_poles);
    std::vector<double> strengths(chain.radius.begin(), chain.radius.begin() + n_poles);
    f.eval = [poles, strengths](Cpx z) {
        Cpx s{};
        for (std::size_t j = 0; j < poles.size(); ++j)
            s += strengths[j] * (1.0 / (z - poles[j]) + 1.0 / (z - std::conj(poles[j])));
        return s;
    };
    double axis_sup = 0.0;
    for (int i = -400; i <= 400; ++i) axis_sup = std::max(axis_sup, std::abs(f.eval({0.0, i * 0.05})));
    f.sup_bound = 2.5;
    Theorem9Split ts = theorem9_split(f, chain, 40, 1e4);

    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> rr(-1.0, 1.0);
    auto off_discs = [&](Cpx z) {
        for (std::size_t j = 0; j < chain.xi.size(); ++j)
            if (std::abs(z - centers[j]) <= 2.0 * chain.radius[j] ||
                std::abs(z - std::conj(centers[j])) <= 2.0 * chain.radius[j])
                return false;
        return true;
    };
    // identity residual on probes across the right half-plane
    double identity = 0.0;
    int probes = 0;
    while (probes < 40) {
        const Cpx z{0.05 + 1.5 * (0.5 + 0.5 * rr(rng)), rr(rng)};
        if (!off_discs(z)) continue;
        ++probes;
        identity = std::max(identity,
                            std::abs(f.eval(z) - ts.f1(z) - ts.f_plus(z) - ts.f_minus(z)));
    }
    // Eq. (104) circle bound at 50 probe points
    bool eq104_ok = true;
    int tested = 0;
    while (tested < 50) {
        const Cpx z{rr(rng) + 1.01, rr(rng)};
        if (!off_discs(z)) continue;
        ++tested;
        for (int nidx = 0; nidx < 6; ++nidx) {
            double sup_f = 0.0;
            for (int a = 0; a < 64; ++a)
                sup_f = std::max(sup_f, std::abs(f.eval(
                                            centers[nidx] +
                                            std::polar(chain.radius[nidx], kTau * a / 64))));
            const double dist = std::abs(z - centers[nidx]) - chain.radius[nidx];
            const Cpx c = circle_cauchy_clockwise(centers[nidx], chain.radius[nidx],
                                                  [&](Cpx w) { return f.eval(w); }, z);
            if (std::abs(c) > sup_f * chain.radius[nidx] / dist * (1.0 + 1e-6) + 1e-15)
                eq104_ok = false;
        }
    }
    // |f1| slope toward the origin inside the sector (Eq. 106 shape)
    std::vector<double> lxs, vys;
    for (int i = 0; i < 12; ++i) {
        const double r = 0.5 * std::pow(10.0, -2.2 * i / 11.0);
        const Cpx z = std::polar(r, 0.3);
        lxs.push_back(std::log(1.0 / r));
        vys.push_back(std::abs(ts.f1(z)));
    }
    const double slope = linear_fit(lxs, vys).slope;
    const double shape = 2.0 * axis_sup / 3.14159265358979323846;
    const bool slope_ok = slope <= 1.2 * shape;
    verdict(8,
            identity <= 1e-3 && eq104_ok && slope_ok,
            "disc-chain split: identity <= 1e-3, circle bound, f1 log-slope",
            "identity residual " + fmt(identity) + " (axis tail " + fmt(ts.axis_tail_bound) +
                "), eq104 " + (eq104_ok ? "holds" : "VIOLATED") + ", |f1| slope " + fmt(slope) +
                " vs 1.2*shape " + fmt(1.2 * shape));
}

// ---------------------------------------------------------------------------
// 9. Classifier table
// ---------------------------------------------------------------------------
void criterion_9() {
    bool ok = true;
    std::string detail;
    {
        ScenarioBundle ex1 = scenario_ex1(1.0, 1.0);
        const Verdict v = classify_pair(ex1.arcs->first, ex1.arcs->second).verdict;
        ok = ok && v == Verdict::BS;
        detail += "ex1 rays: " + to_string(v) + "; ";
    }
    {
        ScenarioBundle ex3 = scenario_ex3(make_power_graph(1.0, 2.0, 0.5), 0.4);
        const Verdict v = classify_pair(*ex3.graphs).verdict;
        ok = ok && v == Verdict::BS;
        detail += "ex3 (phi2 = 2 phi1): " + to_string(v) + "; ";
    }
    {
        PairSpec p;
        p.lower = make_power_graph(1.0, 2.0, 0.4);
        p.upper = make_sum_graph(p.lower, make_power_graph(1.0, 3.0, 0.4));
        const Verdict v = classify_pair(p).verdict;
        ok = ok && v == Verdict::NOT_BS;
        detail += "Delta/phi1 = xi: " + to_string(v) + "; ";
    }
    {
        auto mk = [](double curvature) {
            ParametricArc a;
            const Cpx dir = std::polar(1.0, 3.14159265358979323846 / 3.0);
            a.point = [dir, curvature](double t) { return t * dir + curvature * t * t; };
            a.velocity = [dir, curvature](double t) { return dir + 2.0 * curvature * t; };
            return a;
        };
        const Verdict v = classify_pair(mk(0.1), mk(-0.1)).verdict;
        ok = ok && v == Verdict::NOT_BS;
        detail += "common tangent Im tau > 0: " + to_string(v);
    }
    verdict(9, ok, "Theorem-8 trichotomy table", detail);
}

}  // namespace

int main() {
    std::printf("bsep acceptance suite (version %s)\n", kVersion);
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%d of 9 criteria failed\n", g_failures);
    return g_failures;
}
