#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bsep/splitter.hpp"

namespace bsep {

// A ready-to-run problem bundle: separated sets, cutting data, and the
// solver the geometry calls for.
struct ScenarioBundle {
    std::string name;
    CuttingFunction cf;
    std::vector<Cpx> s1_samples, s2_samples;
    // arcs carrying the singular supports (endpoints for test functions)
    Cpx s1_start{}, s1_end{};
    Cpx s2_start{}, s2_end{};
    SolverKind recommended = SolverKind::Standard;
    SectorSpec sector;            // transversal geometry when applicable
    double tangential_b = 0.25;   // corridor depth for the contour solver
    // classification inputs
    std::optional<PairSpec> graphs;
    std::optional<std::pair<ParametricArc, ParametricArc>> arcs;
};

ScenarioBundle scenario_ex1(double k, double mu, double set_radius = 1.0);
ScenarioBundle scenario_ex2(double lo, double hi, double mu);
ScenarioBundle scenario_ex3(const GraphFunction& g, double b);
ScenarioBundle scenario_tangent_bs(const GraphFunction& phi1, double ratio, double b);
ScenarioBundle scenario_tangent_not_bs(const GraphFunction& phi1, const GraphFunction& delta,
                                       double b);
// Delta/phi1 oscillating between the classifier thresholds: designed
// INDETERMINATE.
ScenarioBundle scenario_tangent_oscillating(double b);

struct DiscChain {
    GraphFunction g;             // g(xi) <= xi, positive on the sequence
    std::vector<double> xi;      // strictly decreasing to 0
    std::vector<double> radius;  // r_n < g(xi_n), disjointness enforced

    std::vector<Cpx> centers() const;  // zeta_n = xi_n + i g(xi_n)
    // partial sums of r_n / g(xi_n) plus a geometric remainder estimate
    double eq100_partial_sum() const;
    double eq100_tail_bound() const;
};

DiscChain make_geometric_chain(const GraphFunction& g, double ratio_xi, double ratio_r, int n);
void validate_chain(const DiscChain& chain);

struct Theorem9Split {
    std::function<Cpx(Cpx)> f1, f_plus, f_minus;
    double axis_tail_bound = 0.0;    // truncation estimate of the axis integral
    double circle_tail_bound = 0.0;  // truncation estimate of the circle sum
    int n_discs = 0;
    double axis_window = 0.0;
    // Both groupings are reported: the identity reads f = f1 + f+ + f-, the
    // statement groups (f1 + f+) and -f-; the orientation convention absorbs
    // the sign. Flagged, not silently resolved.
    std::string grouping_note;
};

// f1 from the axis integral (oriented upwards, truncated at [-iY, iY]);
// f+/f- from clockwise circle integrals over the first N discs and their
// reflections.
Theorem9Split theorem9_split(const AnalyticFunction& f, const DiscChain& chain, int truncation_n,
                             double axis_window_y, double quad_tol = 1e-9);

// Cauchy-type integral over one circle, clockwise, of k(w)/(w - zeta).
Cpx circle_cauchy_clockwise(Cpx center, double radius, const std::function<Cpx(Cpx)>& k,
                            Cpx zeta, int min_nodes = 64);

struct ChainCertificates {
    double min_dist_ratio = 0.0;  // min over grid x discs of dist(zeta, B_n)/g(xi_n)
    double eq100_sum = 0.0, eq100_tail = 0.0;
    bool eq105_positive = false;  // the distance ratio admits a positive constant
};

ChainCertificates chain_bound_certificates(const DiscChain& chain, double k_slope,
                                           const std::vector<Cpx>& grid);

}  // namespace bsep
