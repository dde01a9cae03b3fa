#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bsep {

using Cpx = std::complex<double>;

// A real function on [0, domain_end] given by value and derivative callables.
// Carries the regularity data the witness and classifier machinery needs.
// The callables are defined on all of R when the function extends naturally
// (e.g. corridor profiles that vanish on the negative axis).
struct GraphFunction {
    double domain_end = 1.0;  // b
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    double holder_exponent = 1.0;   // epsilon in C^{1+eps}
    double lipschitz_bound = 0.5;   // sup |derivative|
    bool origin_anchored = true;    // value(0) == 0

    double operator()(double xi) const { return value(xi); }
};

// Built-in graph families.
GraphFunction make_linear_graph(double slope, double b = 1.0);        // slope*max(xi,0)
GraphFunction make_power_graph(double coeff, double power, double b); // coeff*max(xi,0)^power
GraphFunction make_tent_graph(double lo, double hi);                  // dist(xi, R \ (lo,hi))
GraphFunction make_sum_graph(const GraphFunction& f, const GraphFunction& g);
GraphFunction make_scaled_graph(const GraphFunction& f, double c);

// Validates the Theorem-8 input regime: origin-anchored, derivative(0) = 0,
// |derivative| < 1/2 on a sample grid. Throws std::invalid_argument.
void require_classifier_regime(const GraphFunction& g);

struct ParametricArc {
    std::function<Cpx(double)> point;     // gamma(t), t in [0, t_end]
    std::function<Cpx(double)> velocity;  // gamma'(t)
    double t_end = 1.0;
};

struct PairSpec {
    GraphFunction lower;   // phi_1
    GraphFunction upper;   // phi_2
    double containing_angle_slope = 1.0;  // k with both graphs inside |eta| < k*xi
};

enum class Verdict { BS, NOT_BS, INDETERMINATE };

std::string to_string(Verdict v);

struct BsEvidence {
    Cpx tau1{}, tau2{};
    std::string branch;                 // which Theorem-8 case decided
    std::vector<double> ratio_probes;   // Delta/phi_1 on the geometric grid (case II(b))
    std::vector<double> probe_points;
};

struct BsDecision {
    Verdict verdict = Verdict::INDETERMINATE;
    BsEvidence evidence;
};

struct ClassifierOptions {
    int probe_depth = 40;     // deepest n in x = b*2^-n
    int probe_start = 1;
    int tail_window = 8;
    double delta_pos = 1e-3;
    double delta_zero = 1e-6;
    int resample_points = 512;  // parametric arc -> graph reduction
};

// Poincare distance on the upper half-plane. Throws std::domain_error if
// either point has non-positive imaginary part.
double hyperbolic_distance(Cpx z, Cpx w);

// inf over sampled xi with g(xi) > 0 of the hyperbolic gap between the
// corridor edges; equals log(1+mu) for every positive g. Throws
// std::domain_error if g vanishes on the whole sample set.
double corridor_width(const GraphFunction& g, double mu, int samples = 256);

// Unit tangent at the origin. Throws std::domain_error on a vanishing
// derivative.
Cpx tangent_at_origin(const GraphFunction& gamma);
Cpx tangent_at_origin(const ParametricArc& gamma);

BsDecision classify_pair(const PairSpec& pair, const ClassifierOptions& opt = {});
BsDecision classify_pair(const ParametricArc& a1, const ParametricArc& a2,
                         const ClassifierOptions& opt = {});

struct SeparationReport {
    bool separated = true;
    double min_slack_lower = 0.0;  // min over S1 of g(xi) - eta
    double min_slack_upper = 0.0;  // min over S2 of eta - (1+mu) g(xi)
    std::optional<Cpx> violating_point;
};

SeparationReport separation_check(const std::vector<Cpx>& s1_samples,
                                  const std::vector<Cpx>& s2_samples, const GraphFunction& g,
                                  double mu);

}  // namespace bsep
