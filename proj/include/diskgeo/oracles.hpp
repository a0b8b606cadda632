#pragma once

#include <cstdint>
#include <utility>

#include "diskgeo/circles.hpp"
#include "diskgeo/geometry.hpp"

namespace diskgeo::oracles {

/// Maximal boundary angle by exhaustive search: scans `grid` points of the
/// unit circle for the angle subtended by a and b, then refines the best cell
/// by golden section to |dtheta| <= 1e-10. Independent of the closed-form
/// evaluation it certifies.
double visual_angle_bruteforce(DiskPoint a, DiskPoint b, int grid = 10000);

/// The point at Hilbert distance t from z0 along the given direction, found
/// by bisection between z0 and the boundary; throws ConvergenceFailure if 200
/// steps do not settle |h - t| <= 1e-12.
DiskPoint hilbert_ray_point(DiskPoint z0, Complex direction, double t);

/// Same bisection inside a convex polygon, against the polygon Hilbert
/// metric.
Complex polygon_ray_point(const ConvexPolygon& poly, Complex z0, Complex direction, double t);

/// Orthogonal projection of the origin onto the line through a and b.
Complex foot_of_perpendicular(Complex a, Complex b);

/// (min, max) of the hyperbolic distance rho(z0, .) over the parameterized
/// ellipse boundary: 720-point scan plus golden-section refinement.
std::pair<double, double> rho_extrema_on_ellipse(const HilbertEllipse& e);

/// Collinear intersection configuration: a positive real g, two unit-circle
/// points a and d, their companions b, c on the lines through g, and the four
/// intersections of the transversal L[g, e] with the lines of the complete
/// quadrilateral. All four derived points must land inside the unit disk,
/// otherwise the configuration is rejected as inadmissible.
struct CollinearConfig {
    double g;
    Complex a, d, e;
    Complex b, c;
    Complex h, j, k, l;
};

/// Residuals of the six metric equalities (hyperbolic, Hilbert, visual angle)
/// between the opposite pairs (h,j)/(k,l) and (h,k)/(j,l), the two
/// Möbius pseudo-distance equalities, and the collinearity audit of the four
/// points against L[g, e].
struct ConfigReport {
    CollinearConfig cfg;
    double rho_gap_hj_kl;
    double rho_gap_hk_jl;
    double hil_gap_hj_kl;
    double hil_gap_hk_jl;
    double vis_gap_hj_kl;
    double vis_gap_hk_jl;
    double pseudo_gap_1;  // | |(h-j)/(1-conj(j)h)| - |(k-l)/(1-conj(l)k)| |
    double pseudo_gap_2;  // | |(h-k)/(1-conj(k)h)| - |(j-l)/(1-conj(l)j)| |
    double collinearity_residual;

    double max_rho_gap() const;
    double max_hilbert_gap() const;
    double max_visual_gap() const;
    double max_pseudo_gap() const;
};

/// Builds the configuration from (g, a, d, e) and certifies the equalities.
/// Throws InadmissibleConfiguration if inputs are off the unit circle, lines
/// degenerate, or derived points leave the disk.
ConfigReport collinear_config_check(double g, Complex a, Complex d, Complex e);

/// Sign sweep of C2 over quasi-random interior points (Halton pairs offset by
/// `seed`, capped at |z| <= 0.999).
struct SignReport {
    bool constant_sign;
    int sign;        // sign of C2 at the first sample
    double min_abs;  // min |C2| over the sweep
    long samples;
    std::uint64_t seed;
};

SignReport c2_disk_sign_sweep(DiskPoint z0, double t, long n, std::uint64_t seed = 1);

}  // namespace diskgeo::oracles
