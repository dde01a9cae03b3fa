#include "bsep/cutting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bsep/quadrature.hpp"

namespace bsep {

namespace {

double psi(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double psi_prime(double t) { return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0; }

}  // namespace

double CutoffProfile::eval(double r) const {
    if (r <= inner) return 1.0;
    if (r >= outer) return 0.0;
    const double t = (r - inner) / (outer - inner);
    const double a = psi(t), b = psi(1.0 - t);
    return b / (a + b);
}

double CutoffProfile::radial_derivative(double r) const {
    if (r <= inner || r >= outer) return 0.0;
    const double t = (r - inner) / (outer - inner);
    const double a = psi(t), b = psi(1.0 - t);
    const double ap = psi_prime(t), bp = psi_prime(1.0 - t);
    // d/dt [b/(a+b)] with db/dt = -bp
    const double num = -bp * (a + b) - b * (ap - bp);
    return num / ((a + b) * (a + b)) / (outer - inner);
}

CuttingFunction CuttingFunction::make(GraphFunction g, double mu, double R) {
    if (!(mu > 0.0)) throw std::invalid_argument("cutting function requires mu > 0");
    if (!(R > 0.0)) throw std::invalid_argument("cutting function requires R > 0");
    CuttingFunction cf;
    cf.g = std::move(g);
    cf.mu = mu;
    cf.R = R;
    cf.cutoff = CutoffProfile{R, 2.0 * R};
    return cf;
}

double chi0_eval(const CuttingFunction& cf, Cpx zeta) {
    if (!(zeta.imag() > 0.0)) throw std::domain_error("chi0_eval: Im zeta must be positive");
    const double gv = cf.g.value(zeta.real());
    if (gv <= 0.0) return 1.0;
    const double eta = zeta.imag();
    if (eta < gv) return 0.0;
    if (eta > (1.0 + cf.mu) * gv) return 1.0;
    return (eta - gv) / (cf.mu * gv);
}

double chi1_eval(const CuttingFunction& cf, Cpx zeta) { return cf.cutoff.eval(std::abs(zeta)); }

double chi_eval(const CuttingFunction& cf, Cpx zeta) {
    return chi0_eval(cf, zeta) * chi1_eval(cf, zeta);
}

namespace {

Grad2 grad_chi1(const CuttingFunction& cf, Cpx zeta) {
    const double r = std::abs(zeta);
    const double d = cf.cutoff.radial_derivative(r);
    if (d == 0.0 || r == 0.0) return {};
    return {d * zeta.real() / r, d * zeta.imag() / r};
}

Grad2 grad_analytic(const CuttingFunction& cf, Cpx zeta) {
    const double xi = zeta.real(), eta = zeta.imag();
    const double gv = cf.g.value(xi);
    const double chi1 = chi1_eval(cf, zeta);
    const Grad2 g1 = grad_chi1(cf, zeta);
    if (gv <= 0.0 || eta > (1.0 + cf.mu) * gv) {
        // chi0 == 1 here, so grad chi = grad chi1.
        return g1;
    }
    if (eta < gv) return {};  // chi == 0 below the corridor
    const double gp = cf.g.derivative(xi);
    const double ramp = (eta - gv) / (cf.mu * gv);
    const double d_xi = -gp * eta / (cf.mu * gv * gv);
    const double d_eta = 1.0 / (cf.mu * gv);
    return {chi1 * d_xi + ramp * g1.dx, chi1 * d_eta + ramp * g1.dy};
}

}  // namespace

Grad2 grad_chi(const CuttingFunction& cf, Cpx zeta, double h_fd) {
    if (!(zeta.imag() > 0.0)) throw std::domain_error("grad_chi: Im zeta must be positive");
    if (std::abs(zeta) >= cf.cutoff.outer) return {};
    const double xi = zeta.real(), eta = zeta.imag();
    const double gv = cf.g.value(xi);
    if (gv > 0.0) {
        const double lo = gv, hi = (1.0 + cf.mu) * gv;
        const double scale = std::max(1.0, std::abs(eta));
        // Exactly on a ramp edge: corridor-side convention.
        if (std::abs(eta - lo) < 1e-13 * scale || std::abs(eta - hi) < 1e-13 * scale) {
            const double mid = 0.5 * (lo + hi);
            return grad_analytic(cf, Cpx{xi, eta < mid ? std::nextafter(eta, hi) : eta});
        }
        // Near an edge the xi-derivative of chi0 jumps with g'; fall back to
        // central differences of chi itself.
        if (std::min(std::abs(eta - lo), std::abs(eta - hi)) < h_fd && eta > h_fd) {
            const double cx = (chi_eval(cf, zeta + h_fd) - chi_eval(cf, zeta - h_fd)) / (2 * h_fd);
            const double cy =
                (chi_eval(cf, zeta + Cpx{0, h_fd}) - chi_eval(cf, zeta - Cpx{0, h_fd})) /
                (2 * h_fd);
            return {cx, cy};
        }
    }
    return grad_analytic(cf, zeta);
}

Cpx dbar_chi(const CuttingFunction& cf, Cpx zeta, double h_fd) {
    const Grad2 g = grad_chi(cf, zeta, h_fd);
    return 0.5 * Cpx{g.dx, g.dy};
}

BoxIntegral carleson_box_integral(const CuttingFunction& cf, double a, double b, double tol) {
    if (!(a < b)) throw std::invalid_argument("carleson_box_integral: need a < b");
    BoxIntegral out;
    out.a = a;
    out.b = b;
    const double side = b - a;
    const double mu = cf.mu;

    // Gradient mass of one corridor slice, closed form in eta.
    auto slice_mass = [&](double xi) -> double {
        const double gv = cf.g.value(xi);
        if (gv <= 0.0) return 0.0;
        const double lo = gv, hi = std::min((1.0 + mu) * gv, side);
        if (hi <= lo) return 0.0;
        const double A = std::abs(cf.g.derivative(xi)) / gv;
        auto F = [A](double eta) {
            if (A == 0.0) return eta;
            const double s = std::hypot(1.0, A * eta);
            return 0.5 * (eta * s + std::asinh(A * eta) / A);
        };
        double mass = (F(hi) - F(lo)) / (mu * gv);
        // Cutoff contribution: chi1 is 1 on |zeta| < inner; slices reaching the
        // transition annulus are integrated numerically instead.
        const double r_far = std::hypot(std::max(std::abs(xi), 0.0), hi);
        if (r_far >= cf.cutoff.inner) {
            mass = integrate(
                [&](double eta) {
                    const Grad2 gr = grad_analytic(cf, Cpx{xi, eta});
                    return std::hypot(gr.dx, gr.dy);
                },
                lo, hi, tol);
        }
        return mass;
    };
    auto slice_envelope = [&](double xi) -> double {
        const double gv = cf.g.value(xi);
        if (gv <= 0.0) return 0.0;
        const double lo = gv, hi = std::min((1.0 + mu) * gv, side);
        if (hi <= lo) return 0.0;
        return std::log(hi / lo);
    };

    const double lo = std::max(a, 0.0);
    if (lo < b) {
        out.gradient_mass = integrate(slice_mass, lo, b, tol);
        out.corridor_envelope = integrate(slice_envelope, lo, b, tol);
    }
    return out;
}

double verify_gradient_bound(const CuttingFunction& cf, const GradBoundGrid& grid) {
    double sup = 0.0;
    for (int i = 0; i <= grid.n_xi; ++i) {
        const double xi =
            grid.xi_min * std::pow(grid.xi_max / grid.xi_min, static_cast<double>(i) / grid.n_xi);
        const double gv = cf.g.value(xi);
        if (gv <= 0.0) continue;
        for (int j = 0; j < grid.n_eta; ++j) {
            const double eta = gv * (1.0 + cf.mu * (j + 0.5) / grid.n_eta);
            const Grad2 gr = grad_analytic(cf, Cpx{xi, eta});
            sup = std::max(sup, eta * std::hypot(gr.dx, gr.dy));
        }
    }
    // Cutoff annulus samples: grad chi1 is bounded there and weighted by eta.
    for (int i = 0; i < 64; ++i) {
        const double r = cf.cutoff.inner + (cf.cutoff.outer - cf.cutoff.inner) * (i + 0.5) / 64;
        for (int j = 1; j < 16; ++j) {
            const double th = 3.14159265358979323846 * j / 16;
            const Cpx z{r * std::cos(th), r * std::sin(th)};
            const Grad2 gr = grad_analytic(cf, z);
            sup = std::max(sup, z.imag() * std::hypot(gr.dx, gr.dy));
        }
    }
    return sup;
}

}  // namespace bsep
