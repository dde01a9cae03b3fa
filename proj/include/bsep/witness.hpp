#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsep/geometry.hpp"

namespace bsep {

// ---------------------------------------------------------------------------
// Cells and rotundity
// ---------------------------------------------------------------------------

// Boundary pieces are exact primitives so that perimeter and center distance
// carry no polyline truncation error.
struct CellEdge {
    enum class Kind { Segment, Arc } kind = Kind::Segment;
    Cpx a, b;             // segment endpoints
    Cpx arc_center{};     // arc data
    double radius = 0.0, theta0 = 0.0, theta1 = 0.0;  // ccw from theta0 to theta1

    double length() const;
    double distance(Cpx p) const;
};

struct Cell {
    std::vector<CellEdge> boundary;  // closed chain
    Cpx center;
};

Cell make_polygon_cell(const std::vector<Cpx>& vertices, Cpx center);
Cell make_disc_cell(Cpx disc_center, double radius, Cpx center);

double cell_perimeter(const Cell& cell);
double cell_boundary_distance(const Cell& cell, Cpx p);
bool cell_contains(const Cell& cell, Cpx p);
// boundary sampled with per_edge points per primitive, ordered along the chain
std::vector<Cpx> cell_boundary_points(const Cell& cell, int per_edge);

// rho(g) = 2 pi dist(A, boundary) / length(boundary), in (0, 1]; throws
// std::invalid_argument when the center is not strictly inside.
double rotundity(const Cell& cell);

// ---------------------------------------------------------------------------
// Witness pairs (arcs K_j, trapezoid density, boundary-integral evaluators)
// ---------------------------------------------------------------------------

enum class ScheduleKind { Angle, UpperAngle };

struct WitnessParams {
    double x = 0.0, X = 0.0, h = 0.0;
    double epsilon = 0.0;  // the schedule's epsilon(x)
    ScheduleKind schedule = ScheduleKind::Angle;

    double x1() const { return x + h; }
    double x2() const { return X - h; }
};

struct ScheduleInfeasible : std::runtime_error {
    double violating_t;
    ScheduleInfeasible(const std::string& msg, double t)
        : std::runtime_error(msg), violating_t(t) {}
};

struct WitnessPair {
    WitnessParams params;
    GraphFunction phi1, phi2;

    Cpx arc_point(int j, double t) const;   // z_j(t) = t + i phi_j(t)
    Cpx arc_velocity(int j, double t) const;
    Cpx anchor() const;  // A^x = x + i phi1(x)
};

WitnessPair make_witness_pair(GraphFunction phi1, GraphFunction phi2, WitnessParams params);

// Window invariants plus the proximity constraint Delta(t) <= h on a fine
// grid of [x, X]; throws ScheduleInfeasible with the violating t.
void validate_witness_params(const WitnessParams& p, const GraphFunction& phi1,
                             const GraphFunction& phi2, int grid_n = 2048);

// Plateau density: 0 off (x,X), 1 on [x1,x2], linear ramps of width h.
std::function<double(double)> trapezoid(const WitnessParams& p);

enum class ArcSide { None, Above, Below };

// The Eq.-(19)-type boundary integral W_j(zeta); on-arc evaluation requires a
// side flag (one-sided limit via principal value + half jump).
Cpx phi_witness(int j, const WitnessPair& pair, Cpx zeta, ArcSide side = ArcSide::None,
                double tol = 1e-10);

// Boundary limit at the anchor A^x (the density vanishes at the arc end, so
// the limit is a plain integral).
Cpx phi1_at_A(const WitnessPair& pair, double tol = 1e-10);

// Lower bound the blow-up estimate yields for this window geometry:
// log((x2-x1)/(2h))/(2 pi) - 2.
double phi1_blowup_lower_bound(const WitnessParams& p);

// Parameter schedules. Angle: X = 2x, h = 2 eps(x) x with
// eps(x) = sup (|phi1|+|phi2|)/t over (0, 2x]. UpperAngle: X = x + phi1(x)/2,
// h = 2 phi1(x) eps(x) with eps(x) = Delta(x)/phi1(x) + sup |Delta'| over [0, X].
WitnessParams schedule(ScheduleKind kind, double x, const GraphFunction& phi1,
                       const GraphFunction& phi2, int sup_samples = 4096);

// Cells of the two schedules: the truncated full angle A_k (cut at Re = 3x)
// and the square of side 2 phi1(x); both centered at A^x. Verifies K_1 stays
// inside at sampled resolution.
Cell cell_for(ScheduleKind kind, double x, const GraphFunction& phi1, double k,
              const WitnessParams& params);

struct GapReport {
    double lhs = 0.0;  // sup |phi - h_test| over the probe grid of cell \ K
    double rhs = 0.0;  // rotundity/2 * |phi(A)|
    int probes = 0;
};

// The cell inequality: any h analytic in the cell stays far from phi in the
// sup norm of cell \ K. h_test is validated by a CR-residual check inside
// the cell.
GapReport lemma21_gap(const std::function<Cpx(Cpx)>& phi, Cpx phi_at_center, const Cell& cell,
                      const std::vector<Cpx>& K_polyline,
                      const std::function<Cpx(Cpx)>& h_test, double h_fd = 1e-5);

struct SumScanSpec {
    double probe_offset_factor = 0.1;  // delta = h * factor off each arc
    int n_along = 96;
    double ring_factor = 10.0;  // far ring |zeta| = factor * X
    int n_ring = 48;
};

struct SumScanReport {
    double sup_sum = 0.0;      // sup |W_1 + W_2| over the probe set
    double sup_w1_anchor = 0.0;  // |W_1| at the anchor (blow-up contrast)
    double probe_offset = 0.0;
};

SumScanReport sum_bound_scan(const WitnessPair& pair, const SumScanSpec& spec = {});

struct KernelSplit {
    Cpx k1, k2, direct;
};

// Eq. (21)-(22) decomposition of the difference kernel; throws at t == t0.
KernelSplit kernel_split(double t, double t0, const GraphFunction& phi1,
                         const GraphFunction& phi2);

// Least-maximum polynomial fit in z of given degree on (points, values);
// Lawson-weighted least squares. Used to build adversarial h_test functions.
std::function<Cpx(Cpx)> fit_minimax_polynomial(const std::vector<Cpx>& points,
                                               const std::vector<Cpx>& values, int degree,
                                               int iterations = 60);

}  // namespace bsep
