#pragma once

#include "bsep/geometry.hpp"

namespace bsep {

// Smooth radial cutoff: 1 on {|zeta| <= inner}, 0 on {|zeta| >= outer},
// exp(-1/t)-based C-infinity transition in between.
struct CutoffProfile {
    double inner = 1.0;
    double outer = 2.0;

    double eval(double r) const;        // profile value at radius r
    double radial_derivative(double r) const;
};

// The corridor cutting function chi = chi0 * chi1 attached to (g, mu):
// chi0 ramps linearly from 0 at eta = g(xi) to 1 at eta = (1+mu) g(xi),
// chi1 is the radial cutoff.
struct CuttingFunction {
    GraphFunction g;
    double mu = 1.0;
    double R = 1.0;  // support radius: the separated sets live in {|zeta| < R}
    CutoffProfile cutoff{1.0, 2.0};

    static CuttingFunction make(GraphFunction g, double mu, double R);
};

struct Grad2 {
    double dx = 0.0, dy = 0.0;
};

double chi0_eval(const CuttingFunction& cf, Cpx zeta);
double chi1_eval(const CuttingFunction& cf, Cpx zeta);
double chi_eval(const CuttingFunction& cf, Cpx zeta);

// Piecewise-analytic gradient on corridor interiors; central finite
// differences of step h_fd within h_fd of the corridor edges (where g' may
// jump across the ramp lines). On an edge itself the corridor-side value is
// returned.
Grad2 grad_chi(const CuttingFunction& cf, Cpx zeta, double h_fd = 1e-6);

// d-bar chi = (d/dx + i d/dy) chi / 2.
Cpx dbar_chi(const CuttingFunction& cf, Cpx zeta, double h_fd = 1e-6);

struct BoxIntegral {
    double a = 0.0, b = 0.0;        // box (a,b) x (0, b-a)
    double gradient_mass = 0.0;      // integral of |grad chi| over the box
    double corridor_envelope = 0.0;  // integral of 1/eta over corridor within the box
    double ratio() const { return gradient_mass / (b - a); }
    double envelope_ratio() const { return corridor_envelope / (b - a); }
};

// Corridor-aligned quadrature over the Carleson box (a,b) x (0, b-a):
// the eta-integral over [g, (1+mu)g] clipped to the box is done in closed
// form per slice, then adaptively in xi. corridor_envelope is the same
// integral of 1/eta, which evaluates to log(1+mu)(b-a) for boxes containing
// the corridor section (the quantity the Carleson estimate pins down).
BoxIntegral carleson_box_integral(const CuttingFunction& cf, double a, double b,
                                  double tol = 1e-8);

// sup over the grid of Im(zeta) * |grad chi(zeta)|; refinement stability of
// this number is the Theorem-3(b) certificate.
struct GradBoundGrid {
    double xi_min = 1e-4, xi_max = 1.0;
    int n_xi = 200;
    int n_eta = 24;  // corridor rows per slice
};

double verify_gradient_bound(const CuttingFunction& cf, const GradBoundGrid& grid);

}  // namespace bsep
