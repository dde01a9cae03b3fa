#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bsep/dbar.hpp"
#include "bsep/witness.hpp"

namespace bsep {

struct AnalyticFunction {
    std::function<Cpx(Cpx)> eval;
    double sup_bound = 1.0;                 // declared bound on its domain
    std::string singular_support = "none";  // description of S (or S_j)
    std::vector<Cpx> support_samples;       // sampled singular set

    Cpx operator()(Cpx z) const { return eval(z); }
};

enum class SolverKind { Standard, Jones, Transversal, Tangential };
std::string to_string(SolverKind k);

struct SplitDiagnostics {
    double identity_residual = 0.0;     // sup |f - f1 - f2| over the probe grid
    double cr_residual_f1 = 0.0;        // off S1
    double cr_residual_f2 = 0.0;        // off S2
    double sup_f1 = 0.0, sup_f2 = 0.0;
    double dbar_residual_u = 0.0;       // solver residual on the same grid scale
};

struct SplitResult {
    AnalyticFunction f1, f2;
    SolutionField u;
    SplitDiagnostics diagnostics;
};

struct SplitOptions {
    QuadSpec quad;
    double h_fd = 1e-3;
    SectorSpec sector;          // transversal solver geometry
    double tangential_b = 0.25;  // corridor depth for the contour term
    std::vector<Cpx> probe_points;  // diagnostics grid; default built from cf
};

// f1 = f chi - u, f2 = f - f1; rejects unseparated sample sets before
// solving. Solver errors propagate.
SplitResult split(const AnalyticFunction& f, const CuttingFunction& cf, SolverKind solver,
                  const std::vector<Cpx>& s1_samples, const std::vector<Cpx>& s2_samples,
                  const SplitOptions& opt = {});

// Test-function catalog.
AnalyticFunction test_constant(Cpx value);
// w(z)^{i beta} with w = (z-p)/(z-q) and the principal branch; singular on
// the circline arc through p and q where w is negative real. arc_samples
// validates that this cut follows the declared arc (construction error if
// not).
AnalyticFunction test_moebius_power(Cpx p, Cpx q, double beta,
                                    const std::vector<Cpx>& arc_samples, double tol = 1e-6);
// Cauchy transform of a Holder density vanishing at the arc endpoints.
// HalfWave is a single sine arch; Plateau ramps up by 2a, holds 1, and ramps
// down from b/2 (a multi-scale density: its transform stays O(1) down to the
// a-scale).
enum class DensityProfile { HalfWave, Plateau };
AnalyticFunction test_cauchy_density(const GraphFunction& phi, double a, double b,
                                     double quad_tol = 1e-10,
                                     DensityProfile profile = DensityProfile::HalfWave);
// Witness evaluator W_1 re-exported as a catalog entry.
AnalyticFunction test_witness_function(const WitnessPair& pair);

struct BoundednessScan {
    std::vector<double> sups;      // per refinement level
    std::vector<double> growth;    // relative growth per level
    bool certified_bounded = true;  // false when growth exceeds 10% per level
};

struct VerifyReport {
    SplitDiagnostics diagnostics;
    BoundednessScan f1_scan, f2_scan;
    bool not_certified_bounded = false;
};

// Recompute diagnostics on caller grids; level_grids are sup scans on
// successively finer probe sets toward the accumulation point.
VerifyReport verify_split(const AnalyticFunction& f, const SplitResult& sr,
                          const std::vector<Cpx>& diag_grid,
                          const std::vector<std::vector<Cpx>>& level_grids, double h_fd = 1e-3);

// sup |F| over a point set (parallel).
double sup_abs(const std::function<Cpx(Cpx)>& F, const std::vector<Cpx>& points);

}  // namespace bsep
