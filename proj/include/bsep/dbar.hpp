#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bsep/cutting.hpp"
#include "bsep/geometry.hpp"

namespace bsep {

// Right side of the d-bar problem: a compactly supported complex density.
struct DensityField {
    std::function<Cpx(Cpx)> rho;  // 0 outside support
    double x0 = -1, x1 = 1, y0 = 0, y1 = 1;  // support bounding box
    double height_bound = 0.0;      // estimate of sup |rho(z) Im z|
    double carleson_estimate = 0.0;  // estimate of the Carleson constant of |rho| dA
};

DensityField make_disc_density(double radius = 1.0, Cpx value = {1.0, 0.0});

// rho = f * dbar(chi); f is never evaluated where dbar(chi) = 0 (the support
// mask realizes the f|S = 0 extension).
DensityField make_corridor_density(const CuttingFunction& cf,
                                   const std::function<Cpx(Cpx)>& f);

// One tensor-product quadrature patch in its own chart (s,t) -> zeta.
struct GridPatch {
    std::function<Cpx(double, double)> to_plane;
    std::function<double(double, double)> jac;  // area factor
    std::function<bool(Cpx, double&, double&)> locate;  // plane -> chart, false if outside
    std::function<Cpx(Cpx)> rho;  // patch-masked density
    std::vector<double> s_edges, t_edges;
    // flattened cells with nonzero mass
    std::vector<Cpx> centers, masses;
    std::vector<int> idx_s, idx_t;
};

struct DensityGrid {
    std::vector<GridPatch> patches;
    std::size_t cell_count() const;
    double total_abs_mass() const;
};

struct QuadSpec {
    int nx = 256, ny = 256;  // tensor patch resolution
    int subsample = 4;       // mass subsampling per axis (tensor patch)
    int zone_m = 2;          // singular zone half-width in cells
    int polar_theta = 32, polar_r = 8;
    int polar_segments = 2;  // radial Gauss panels per ray
    // corridor-fitted patch
    double xi_min_factor = 1e-6;  // innermost column at xi = factor * 2R
    int n_xi = 512, n_t = 16;
    int annulus_nr = 32, annulus_nth = 96;
};

DensityGrid build_tensor_grid(const DensityField& rho, const QuadSpec& spec);
// Corridor-fitted columns (geometric toward the origin) plus the cutoff
// annulus where dbar(chi1) lives.
DensityGrid build_corridor_grid(const CuttingFunction& cf, const std::function<Cpx(Cpx)>& f,
                                const QuadSpec& spec);

// (1/pi) integral of rho(zeta)/(z - zeta) dA with the singular cell block
// integrated in chart polar coordinates.
Cpx cauchy_transform(const DensityGrid& grid, const QuadSpec& spec, Cpx z);

struct SolutionField {
    std::function<Cpx(Cpx)> eval;
    std::string solver;
    std::string grid_spec;

    Cpx operator()(Cpx z) const { return eval(z); }
};

SolutionField standard_cauchy_solution(std::shared_ptr<const DensityGrid> grid,
                                       QuadSpec spec = {});

struct JonesOptions {
    int probe_stride = 4;  // alpha sup over every stride-th cell center
};

struct JonesData;  // precomputed exponent integrals

struct JonesSolution {
    SolutionField field;
    double alpha_inv = 0.0;  // 0 means rho == 0 (u == 0)
    std::shared_ptr<const JonesData> data;
};

JonesSolution jones_solution(std::shared_ptr<const DensityGrid> grid, QuadSpec spec = {},
                             JonesOptions opt = {});
// alpha recomputed with a denser probe set (stability certificate).
double jones_alpha_inv_refined(const JonesSolution& sol, int stride);

struct SectorSpec {
    double slope_lo = 0.0;  // eta >= slope_lo * xi
    double slope_hi = 1e9;  // eta <= slope_hi * xi
    double radius = 1e9;
};

// u = C^rho - a with the reflected-kernel correction; a is analytic in the
// upper half-plane. Throws std::domain_error if the corridor support is not
// inside the declared sector.
SolutionField transversal_solution(std::shared_ptr<const DensityGrid> grid,
                                   const SectorSpec& sector, QuadSpec spec = {});

// Area term plus the contour term over the reflected graph t -> t - i g(t).
SolutionField tangential_solution(const std::function<Cpx(Cpx)>& f, const CuttingFunction& cf,
                                  double b, std::shared_ptr<const DensityGrid> grid,
                                  QuadSpec spec = {}, double contour_tol = 1e-9);

// sup over grid points of |(d/dx + i d/dy) u / 2 - rho| by central
// differences; points inside the guard predicate are skipped.
struct ResidualReport {
    double sup_abs = 0.0;
    double sup_rho = 0.0;  // sup |rho| over the accepted points
    double relative() const { return sup_rho > 0 ? sup_abs / sup_rho : sup_abs; }
    int points_used = 0, points_skipped = 0;
    double h_fd = 0.0;
};

ResidualReport dbar_residual(const SolutionField& u, const DensityField& rho,
                             const std::vector<Cpx>& points, double h_fd,
                             const std::function<bool(Cpx)>& guard = {});

// Cauchy-Riemann residual |dbar f| by central differences (for analyticity
// certificates).
double cr_residual(const std::function<Cpx(Cpx)>& f, const std::vector<Cpx>& points,
                   double h_fd);

}  // namespace bsep
