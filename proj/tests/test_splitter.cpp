#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bsep/scenarios.hpp"
#include "bsep/splitter.hpp"

using namespace bsep;

namespace {

SplitOptions fast_options(const ScenarioBundle& b) {
    SplitOptions opt;
    opt.sector = b.sector;
    opt.tangential_b = b.tangential_b;
    opt.quad.n_xi = 192;
    opt.quad.n_t = 10;
    opt.quad.annulus_nr = 16;
    opt.quad.annulus_nth = 48;
    return opt;
}

}  // namespace

TEST_CASE("split of the zero function is zero") {
    ScenarioBundle b = scenario_ex1(1.0, 1.0);
    SplitResult sr = split(test_constant({0.0, 0.0}), b.cf, SolverKind::Standard, b.s1_samples,
                           b.s2_samples, fast_options(b));
    CHECK(sr.diagnostics.sup_f1 == doctest::Approx(0.0));
    CHECK(sr.diagnostics.sup_f2 == doctest::Approx(0.0));
    CHECK(sr.diagnostics.identity_residual == 0.0);
}

TEST_CASE("split of the constant one: exact identity") {
    ScenarioBundle b = scenario_ex1(1.0, 1.0);
    SplitResult sr = split(test_constant({1.0, 0.0}), b.cf, SolverKind::Transversal,
                           b.s1_samples, b.s2_samples, fast_options(b));
    CHECK(sr.diagnostics.identity_residual == 0.0);  // f2 = f - f1 by construction
    CHECK(sr.diagnostics.sup_f1 < 10.0);
    CHECK(sr.diagnostics.sup_f2 < 10.0);
}

TEST_CASE("split rejects unseparated sample sets") {
    ScenarioBundle b = scenario_ex1(1.0, 1.0);
    std::vector<Cpx> bad = b.s1_samples;
    bad.push_back(Cpx{0.3, 0.31});  // above g(0.3) = 0.3
    CHECK_THROWS_AS(split(test_constant({1.0, 0.0}), b.cf, SolverKind::Standard, bad,
                          b.s2_samples, fast_options(b)),
                    std::domain_error);
}

TEST_CASE("moebius power: bounded, analytic off the segment, cut validation") {
    ScenarioBundle b = scenario_ex1(1.0, 1.0);
    AnalyticFunction f = test_moebius_power(b.s1_start, b.s1_end, 1.0, b.s1_samples);
    double sup = 0.0;
    for (int i = 1; i < 24; ++i) {
        const Cpx z = std::polar(0.8, M_PI * i / 24.0);
        sup = std::max(sup, std::abs(f(z)));
    }
    CHECK(sup <= std::exp(2.0 * M_PI));
    // analytic away from the cut
    std::vector<Cpx> pts{{-0.4, 0.5}, {0.2, 0.9}, {0.7, 0.75}};
    CHECK(cr_residual(f.eval, pts, 1e-4) < 1e-6);
    // a curved arc does not realize the principal-branch cut
    std::vector<Cpx> curved;
    for (int i = 1; i < 16; ++i) {
        const double t = i / 16.0;
        curved.push_back(Cpx{t, 0.3 * t * t} * (b.s1_end / std::abs(b.s1_end)));
    }
    CHECK_THROWS_AS(test_moebius_power(b.s1_start, b.s1_end, 1.0, curved),
                    std::invalid_argument);
}

TEST_CASE("cauchy density test function is bounded and analytic off the arc") {
    GraphFunction phi = make_power_graph(1.0, 2.0, 0.6);
    AnalyticFunction f = test_cauchy_density(phi, 0.1, 0.5);
    std::vector<Cpx> pts{{0.3, 0.4}, {-0.2, 0.3}, {0.6, 0.1}};
    CHECK(cr_residual(f.eval, pts, 1e-4) < 1e-6);
    for (const Cpx& z : pts) CHECK(std::abs(f(z)) < 5.0);
}

TEST_CASE("witness catalog entry matches phi_witness pointwise") {
    GraphFunction p1 = make_power_graph(1.0, 2.0, 0.05);
    GraphFunction p2 = make_power_graph(2.0, 2.0, 0.05);
    WitnessPair pair = make_witness_pair(p1, p2, schedule(ScheduleKind::Angle, 0.01, p1, p2));
    AnalyticFunction f = test_witness_function(pair);
    for (Cpx z : {Cpx{0.5, 0.5}, Cpx{0.015, 0.01}})
        CHECK(std::abs(f(z) - phi_witness(1, pair, z)) == doctest::Approx(0.0));
}

TEST_CASE("split diagnostics: analyticity of the pieces off their sets") {
    ScenarioBundle b = scenario_ex1(1.0, 1.0);
    AnalyticFunction f = test_moebius_power(b.s1_start, b.s1_end, 0.7, b.s1_samples);
    SplitOptions opt = fast_options(b);
    opt.quad.n_xi = 320;
    opt.quad.n_t = 16;
    SplitResult sr =
        split(f, b.cf, SolverKind::Transversal, b.s1_samples, b.s2_samples, opt);
    CHECK(sr.diagnostics.identity_residual == 0.0);
    CHECK(sr.diagnostics.cr_residual_f1 < 0.05);
    CHECK(sr.diagnostics.cr_residual_f2 < 0.05);
    CHECK(sr.diagnostics.sup_f1 < 50.0);
    CHECK(sr.diagnostics.sup_f2 < 50.0);
}

TEST_CASE("split on the tent corridor with the weighted solver") {
    ScenarioBundle b = scenario_ex2(0.0, 1.0, 1.0);
    SplitOptions opt = fast_options(b);
    SplitResult sr = split(test_constant({1.0, 0.0}), b.cf, SolverKind::Jones, b.s1_samples,
                           b.s2_samples, opt);
    CHECK(sr.diagnostics.identity_residual == 0.0);
    CHECK(std::isfinite(sr.diagnostics.sup_f1));
    CHECK(sr.diagnostics.sup_f1 < 20.0);
    CHECK(sr.diagnostics.sup_f2 < 20.0);
}

TEST_CASE("verify_split: zero split is clean; identity and boundedness are separate") {
    ScenarioBundle b = scenario_ex1(1.0, 1.0);
    AnalyticFunction zero = test_constant({0.0, 0.0});
    SplitResult sz = split(zero, b.cf, SolverKind::Standard, b.s1_samples, b.s2_samples,
                           fast_options(b));
    std::vector<Cpx> diag{{-0.5, 0.4}, {0.6, 0.2}, {0.1, 1.3}};
    std::vector<std::vector<Cpx>> levels{{Cpx{0.1, 0.2}}, {Cpx{0.05, 0.1}}, {Cpx{0.025, 0.05}}};
    const VerifyReport zr = verify_split(zero, sz, diag, levels);
    CHECK(zr.diagnostics.identity_residual == 0.0);
    CHECK(zr.diagnostics.cr_residual_f1 == doctest::Approx(0.0));
    CHECK(zr.diagnostics.sup_f1 == doctest::Approx(0.0));
    CHECK_FALSE(zr.not_certified_bounded);

    // the uncorrected standard solver on the transversal scenario: identity
    // stays exact whatever the boundedness scan concludes
    AnalyticFunction one = test_constant({1.0, 0.0});
    SplitResult su = split(one, b.cf, SolverKind::Standard, b.s1_samples, b.s2_samples,
                           fast_options(b));
    std::vector<std::vector<Cpx>> shells;
    for (int l = 0; l < 4; ++l) {
        std::vector<Cpx> shell;
        const double r = 0.1 * std::pow(0.5, l);
        for (int a = 1; a < 10; ++a) shell.push_back(std::polar(r, M_PI * a / 10.0));
        shells.push_back(shell);
    }
    const VerifyReport ur = verify_split(one, su, diag, shells);
    CHECK(ur.diagnostics.identity_residual == 0.0);
    CHECK(ur.f1_scan.sups.size() == 4);  // the scan reports regardless of its verdict
}

TEST_CASE("verify_split flags a tampered piece as not certified bounded") {
    ScenarioBundle b = scenario_ex1(1.0, 1.0);
    AnalyticFunction f = test_constant({1.0, 0.0});
    SplitResult sr = split(f, b.cf, SolverKind::Transversal, b.s1_samples, b.s2_samples,
                           fast_options(b));
    // tamper: hide a pole at a point s in the S2 region inside f1
    const Cpx s{0.25, 0.9};
    SplitResult bad = sr;
    auto f1 = sr.f1.eval;
    bad.f1.eval = [f1, s](Cpx z) { return f1(z) + 0.05 / (z - s); };
    auto f_eval = f.eval;
    auto bad_f1 = bad.f1.eval;
    bad.f2.eval = [f_eval, bad_f1](Cpx z) { return f_eval(z) - bad_f1(z); };

    std::vector<std::vector<Cpx>> levels;
    for (int l = 0; l < 4; ++l) {
        std::vector<Cpx> shell;
        const double r = 0.2 * std::pow(0.5, l);
        for (int a = 0; a < 16; ++a)
            shell.push_back(s + std::polar(r, 2.0 * M_PI * (a + 0.5) / 16.0));
        levels.push_back(shell);
    }
    std::vector<Cpx> diag{{-0.5, 0.4}, {0.6, 0.2}, {0.1, 1.3}};
    const VerifyReport good = verify_split(f, sr, diag, levels);
    CHECK_FALSE(good.not_certified_bounded);
    const VerifyReport flagged = verify_split(f, bad, diag, levels);
    CHECK(flagged.not_certified_bounded);
    // the CR residual off S1 stays small: the added pole is analytic there
    CHECK(flagged.diagnostics.cr_residual_f1 < 0.05);
}
