#include "bsep/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace bsep {

GraphFunction make_linear_graph(double slope, double b) {
    GraphFunction g;
    g.domain_end = b;
    g.value = [slope](double xi) { return xi > 0.0 ? slope * xi : 0.0; };
    g.derivative = [slope](double xi) { return xi >= 0.0 ? slope : 0.0; };
    g.lipschitz_bound = std::abs(slope);
    return g;
}

GraphFunction make_power_graph(double coeff, double power, double b) {
    if (power < 1.0) throw std::invalid_argument("make_power_graph: power < 1 is not C^1");
    GraphFunction g;
    g.domain_end = b;
    g.value = [coeff, power](double xi) { return xi > 0.0 ? coeff * std::pow(xi, power) : 0.0; };
    g.derivative = [coeff, power](double xi) {
        return xi > 0.0 ? coeff * power * std::pow(xi, power - 1.0) : 0.0;
    };
    g.holder_exponent = std::min(1.0, power - 1.0);
    g.lipschitz_bound = std::abs(coeff) * power * std::pow(b, power - 1.0);
    return g;
}

GraphFunction make_tent_graph(double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("make_tent_graph: empty interval");
    GraphFunction g;
    g.domain_end = hi;
    g.value = [lo, hi](double xi) {
        if (xi <= lo || xi >= hi) return 0.0;
        return std::min(xi - lo, hi - xi);
    };
    g.derivative = [lo, hi](double xi) {
        if (xi <= lo || xi >= hi) return 0.0;
        return (xi - lo < hi - xi) ? 1.0 : -1.0;
    };
    g.holder_exponent = 1.0;
    g.lipschitz_bound = 1.0;
    g.origin_anchored = (lo >= 0.0);
    return g;
}

GraphFunction make_sum_graph(const GraphFunction& f, const GraphFunction& g) {
    GraphFunction s;
    s.domain_end = std::min(f.domain_end, g.domain_end);
    s.value = [fv = f.value, gv = g.value](double xi) { return fv(xi) + gv(xi); };
    s.derivative = [fd = f.derivative, gd = g.derivative](double xi) { return fd(xi) + gd(xi); };
    s.holder_exponent = std::min(f.holder_exponent, g.holder_exponent);
    s.lipschitz_bound = f.lipschitz_bound + g.lipschitz_bound;
    s.origin_anchored = f.origin_anchored && g.origin_anchored;
    return s;
}

GraphFunction make_scaled_graph(const GraphFunction& f, double c) {
    GraphFunction s = f;
    s.value = [fv = f.value, c](double xi) { return c * fv(xi); };
    s.derivative = [fd = f.derivative, c](double xi) { return c * fd(xi); };
    s.lipschitz_bound = std::abs(c) * f.lipschitz_bound;
    return s;
}

void require_classifier_regime(const GraphFunction& g) {
    if (!g.origin_anchored || std::abs(g.value(0.0)) > 1e-14)
        throw std::invalid_argument("classifier input must vanish at the origin");
    if (std::abs(g.derivative(0.0)) > 1e-12)
        throw std::invalid_argument("classifier input must have derivative 0 at the origin");
    const int n = 256;
    for (int i = 1; i <= n; ++i) {
        const double xi = g.domain_end * i / n;
        if (std::abs(g.derivative(xi)) >= 0.5)
            throw std::invalid_argument("classifier input must satisfy |phi'| < 1/2");
    }
}

namespace {

// The trichotomy depends only on the germ at the origin; shrink b until the
// |phi'| < 1/2 normalization holds there.
double classifier_window(const GraphFunction& a, const GraphFunction& b) {
    double end = std::min(a.domain_end, b.domain_end);
    for (int shrink = 0; shrink <= 40; ++shrink) {
        bool ok = true;
        for (int i = 1; i <= 256 && ok; ++i) {
            const double xi = end * i / 256.0;
            ok = std::abs(a.derivative(xi)) < 0.5 && std::abs(b.derivative(xi)) < 0.5;
        }
        if (ok) return end;
        end *= 0.5;
    }
    throw std::invalid_argument("classifier input must satisfy |phi'| < 1/2 near the origin");
}

GraphFunction restrict_graph(const GraphFunction& g, double end) {
    GraphFunction r = g;
    r.domain_end = end;
    return r;
}

}  // namespace

double hyperbolic_distance(Cpx z, Cpx w) {
    if (!(z.imag() > 0.0) || !(w.imag() > 0.0))
        throw std::domain_error("hyperbolic_distance: points must lie in the upper half-plane");
    const double d2 = std::norm(z - w);
    return std::acosh(1.0 + d2 / (2.0 * z.imag() * w.imag()));
}

double corridor_width(const GraphFunction& g, double mu, int samples) {
    if (!(mu > 0.0)) throw std::domain_error("corridor_width: mu must be positive");
    double best = std::numeric_limits<double>::infinity();
    bool any = false;
    for (int i = 1; i <= samples; ++i) {
        const double xi = g.domain_end * i / samples;
        const double gv = g.value(xi);
        if (gv <= 0.0) continue;
        any = true;
        best = std::min(best, hyperbolic_distance({xi, gv}, {xi, (1.0 + mu) * gv}));
    }
    if (!any) throw std::domain_error("corridor_width: g vanishes on the whole sample set");
    return best;
}

Cpx tangent_at_origin(const GraphFunction& gamma) {
    const Cpx v{1.0, gamma.derivative(0.0)};
    return v / std::abs(v);
}

Cpx tangent_at_origin(const ParametricArc& gamma) {
    const Cpx v = gamma.velocity(0.0);
    const double n = std::abs(v);
    if (!(n > 0.0)) throw std::domain_error("tangent_at_origin: vanishing derivative");
    Cpx tau = v / n;
    if (tau.imag() < -1e-12)
        throw std::domain_error("tangent_at_origin: arc leaves the closed upper half-plane");
    if (tau.imag() < 0.0) tau = Cpx{tau.real(), 0.0};
    return tau;
}

namespace {

BsDecision classify_graphs(const GraphFunction& lower, const GraphFunction& upper,
                           const ClassifierOptions& opt, BsEvidence ev) {
    const double b = std::min(lower.domain_end, upper.domain_end);
    // Case II(b): common real tangent; probe r(x) = Delta(x)/phi_1(x) on a
    // geometric grid and read off the liminf at the configured resolution.
    std::vector<double> probes, points;
    for (int n = opt.probe_start; n <= opt.probe_depth; ++n) {
        const double x = b * std::pow(2.0, -n);
        const double p1 = lower.value(x), p2 = upper.value(x);
        if (!(p1 > 0.0)) continue;  // ratio undefined where phi_1 <= 0
        points.push_back(x);
        probes.push_back(std::abs(p2 - p1) / p1);
    }
    ev.ratio_probes = probes;
    ev.probe_points = points;

    BsDecision d;
    d.evidence = std::move(ev);
    if (probes.size() < static_cast<std::size_t>(opt.tail_window)) {
        d.verdict = Verdict::INDETERMINATE;
        d.evidence.branch = "II(b): too few valid probes";
        return d;
    }
    const std::size_t tail = probes.size() - opt.tail_window;
    double tail_min = probes[tail], tail_max = probes[tail];
    for (std::size_t i = tail; i < probes.size(); ++i) {
        tail_min = std::min(tail_min, probes[i]);
        tail_max = std::max(tail_max, probes[i]);
    }
    if (tail_min >= opt.delta_pos) {
        d.verdict = Verdict::BS;
        d.evidence.branch = "II(b): liminf Delta/phi_1 > 0 at probe resolution";
    } else if (tail_max < opt.delta_zero) {
        d.verdict = Verdict::NOT_BS;
        d.evidence.branch = "II(b): Delta/phi_1 decreases below delta_zero";
    } else {
        d.verdict = Verdict::INDETERMINATE;
        d.evidence.branch = "II(b): probe cannot separate 0 from positive";
    }
    return d;
}

// Reduce a parametric arc with horizontal tangent to a graph over Re zeta by
// resampling; linear interpolation on a geometric grid toward t = 0.
GraphFunction arc_to_graph(const ParametricArc& arc, int points) {
    auto xs = std::make_shared<std::vector<double>>();
    auto ys = std::make_shared<std::vector<double>>();
    auto ds = std::make_shared<std::vector<double>>();
    const double t1 = arc.t_end;
    xs->push_back(0.0);
    ys->push_back(0.0);
    {
        const Cpx v0 = arc.velocity(0.0);
        ds->push_back(std::abs(v0.real()) > 0 ? v0.imag() / v0.real() : 0.0);
    }
    for (int i = points; i >= 0; --i) {
        const double t = t1 * std::pow(2.0, -static_cast<double>(i) * 30.0 / points);
        const Cpx p = arc.point(t);
        const Cpx v = arc.velocity(t);
        if (!(p.real() > xs->back())) continue;  // keep strictly increasing in Re
        xs->push_back(p.real());
        ys->push_back(p.imag());
        ds->push_back(std::abs(v.real()) > 1e-300 ? v.imag() / v.real() : 0.0);
    }
    if (xs->size() < 8) throw std::invalid_argument("arc is not a graph over Re zeta");

    GraphFunction g;
    g.domain_end = xs->back();
    auto locate = [xs](double x) -> std::size_t {
        auto it = std::upper_bound(xs->begin(), xs->end(), x);
        std::size_t j = static_cast<std::size_t>(it - xs->begin());
        if (j == 0) j = 1;
        if (j >= xs->size()) j = xs->size() - 1;
        return j;
    };
    g.value = [xs, ys, locate](double x) {
        if (x <= 0.0) return 0.0;
        const std::size_t j = locate(x);
        const double w = (x - (*xs)[j - 1]) / ((*xs)[j] - (*xs)[j - 1]);
        return (1.0 - w) * (*ys)[j - 1] + w * (*ys)[j];
    };
    g.derivative = [xs, ds, locate](double x) {
        if (x <= 0.0) return (*ds)[0];
        const std::size_t j = locate(x);
        const double w = (x - (*xs)[j - 1]) / ((*xs)[j] - (*xs)[j - 1]);
        return (1.0 - w) * (*ds)[j - 1] + w * (*ds)[j];
    };
    double lip = 0.0;
    for (double d : *ds) lip = std::max(lip, std::abs(d));
    g.lipschitz_bound = lip;
    return g;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::BS: return "BS";
        case Verdict::NOT_BS: return "NOT_BS";
        default: return "INDETERMINATE";
    }
}

BsDecision classify_pair(const PairSpec& pair, const ClassifierOptions& opt) {
    const double b = classifier_window(pair.lower, pair.upper);
    require_classifier_regime(restrict_graph(pair.lower, b));
    require_classifier_regime(restrict_graph(pair.upper, b));
    // Pairs must stay disjoint away from the origin: no touching, no crossing.
    bool above_somewhere = false, below_somewhere = false;
    const int n = 512;
    for (int i = 1; i <= n; ++i) {
        const double xi = b * i / n;
        const double lo = pair.lower.value(xi), hi = pair.upper.value(xi);
        if (lo == hi) throw std::invalid_argument("classify_pair: graphs intersect off the origin");
        (lo < hi ? below_somewhere : above_somewhere) = true;
    }
    if (above_somewhere && below_somewhere)
        throw std::invalid_argument("classify_pair: graphs intersect off the origin");
    if (pair.containing_angle_slope > 0.0) {
        for (int i = 1; i <= n; ++i) {
            const double xi = b * i / n;
            if (std::abs(pair.lower.value(xi)) > pair.containing_angle_slope * xi ||
                std::abs(pair.upper.value(xi)) > pair.containing_angle_slope * xi)
                throw std::invalid_argument(
                    "classify_pair: graphs leave the declared containing angle");
        }
    }
    GraphFunction lower = restrict_graph(pair.lower, b), upper = restrict_graph(pair.upper, b);
    if (above_somewhere) std::swap(lower, upper);  // relabel so lower < upper
    BsEvidence ev;
    ev.tau1 = tangent_at_origin(lower);
    ev.tau2 = tangent_at_origin(upper);
    // Graphs in the classifier regime have phi'(0) = 0, hence common tangent 1:
    // only case II(b) of the trichotomy is live.
    return classify_graphs(lower, upper, opt, std::move(ev));
}

BsDecision classify_pair(const ParametricArc& a1, const ParametricArc& a2,
                         const ClassifierOptions& opt) {
    // arcs may touch the real axis only at the origin
    for (const ParametricArc* arc : {&a1, &a2}) {
        for (int i = 1; i <= 128; ++i) {
            const double t = arc->t_end * i / 128.0;
            if (!(arc->point(t).imag() > 0.0))
                throw std::invalid_argument(
                    "classify_pair: arcs must stay in the open upper half-plane off the origin");
        }
    }
    BsEvidence ev;
    ev.tau1 = tangent_at_origin(a1);
    ev.tau2 = tangent_at_origin(a2);
    BsDecision d;
    if (std::abs(ev.tau1 - ev.tau2) > 1e-9) {
        d.verdict = Verdict::BS;
        ev.branch = "I: tau_1 != tau_2";
        d.evidence = std::move(ev);
        return d;
    }
    if (ev.tau1.imag() > 1e-9) {
        d.verdict = Verdict::NOT_BS;
        ev.branch = "II(a): common tangent with Im tau > 0";
        d.evidence = std::move(ev);
        return d;
    }
    // Common real tangent: reduce to graphs over Re zeta and probe the ratio.
    GraphFunction g1 = arc_to_graph(a1, opt.resample_points);
    GraphFunction g2 = arc_to_graph(a2, opt.resample_points);
    const double b = std::min(g1.domain_end, g2.domain_end);
    bool above = false, below = false;
    for (int i = 1; i <= 512; ++i) {
        const double xi = b * i / 512.0;
        const double lo = g1.value(xi), hi = g2.value(xi);
        if (lo == hi) throw std::invalid_argument("classify_pair: arcs intersect off the origin");
        (lo < hi ? below : above) = true;
    }
    if (above && below)
        throw std::invalid_argument("classify_pair: arcs intersect off the origin");
    if (above) std::swap(g1, g2);
    return classify_graphs(g1, g2, opt, std::move(ev));
}

SeparationReport separation_check(const std::vector<Cpx>& s1_samples,
                                  const std::vector<Cpx>& s2_samples, const GraphFunction& g,
                                  double mu) {
    SeparationReport rep;
    rep.min_slack_lower = std::numeric_limits<double>::infinity();
    rep.min_slack_upper = std::numeric_limits<double>::infinity();
    for (const Cpx& z : s1_samples) {
        const double slack = g.value(z.real()) - z.imag();
        if (slack < rep.min_slack_lower) rep.min_slack_lower = slack;
        if (slack <= 0.0) {
            rep.separated = false;
            if (!rep.violating_point) rep.violating_point = z;
        }
    }
    for (const Cpx& z : s2_samples) {
        const double slack = z.imag() - (1.0 + mu) * g.value(z.real());
        if (slack < rep.min_slack_upper) rep.min_slack_upper = slack;
        if (slack <= 0.0) {
            rep.separated = false;
            if (!rep.violating_point) rep.violating_point = z;
        }
    }
    if (s1_samples.empty()) rep.min_slack_lower = 0.0;
    if (s2_samples.empty()) rep.min_slack_upper = 0.0;
    return rep;
}

}  // namespace bsep
