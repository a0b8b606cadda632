#pragma once

#include "diskgeo/geometry.hpp"

namespace diskgeo {

struct EuclideanDisk {
    Complex center;
    double radius;
};

/// Hilbert circle boundary B_h(z0, t) as a Euclidean ellipse. The minor axis
/// points along z0 (semi_radial <= semi_transverse, equality iff z0 = 0).
struct HilbertEllipse {
    Complex z0;
    double t;
    double r;  // e^t

    Complex center;
    double semi_radial;      // along e^{i orientation}
    double semi_transverse;  // along i e^{i orientation}
    double orientation;      // arg(z0); 0 when z0 = 0

    /// center + e^{i orientation} (semi_radial cos(theta) + i semi_transverse sin(theta)).
    Complex boundary_point(double theta) const;
};

/// Hyperbolic disk B_rho(x, M) as the Euclidean disk with
/// y = x (1-t^2) / (1-|x|^2 t^2), r = (1-|x|^2) t / (1-|x|^2 t^2), t = th(M/2).
EuclideanDisk hyperbolic_disk_euclidean(DiskPoint x, double M);

/// Ellipse parameters of the Hilbert circle of radius t > 0 around z0.
/// Stated for real z0 >= 0 and carried to general z0 by rotation.
HilbertEllipse hilbert_circle(DiskPoint z0, double t);

/// Defining polynomial of the Hilbert circle, evaluated at z. Vanishes
/// exactly on the boundary of B_h(z0, t); negative inside.
double implicit_c1(DiskPoint z0, double t, Complex z);

/// The spurious companion factor of the elimination; its zero set lies
/// outside the unit disk, so it keeps one sign on the whole disk.
double implicit_c2(DiskPoint z0, double t, Complex z);

/// Largest absolute coefficient of the expanded polynomial, used to
/// normalize residual tolerances.
double implicit_c1_scale(DiskPoint z0, double t);
double implicit_c2_scale(DiskPoint z0, double t);

/// Euclidean norm of the gradient of C1 at z; |C1| / |grad C1| estimates the
/// distance from z to the ellipse.
double implicit_c1_gradient_norm(DiskPoint z0, double t, Complex z);

/// Radius of the largest hyperbolic disk centered at z0 inside B_h(z0, t):
/// equal to t itself (the hyperbolic circle touches the ellipse at the two
/// radial vertices).
double inscribed_radius(DiskPoint z0, double t);

/// Radius s of the smallest hyperbolic disk centered at z0 containing
/// B_h(z0, t): th(s/2) = (r-1) / sqrt((r+1)^2 - 4 r |z0|^2), r = e^t.
double circumscribed_radius(DiskPoint z0, double t);

/// The point c = (1-t) a + t b on the segment that is equidistant from a and
/// b in both the Hilbert and the hyperbolic metric, with the stable parameter
/// t = sqrt(1-|a|^2) / (sqrt(1-|a|^2) + sqrt(1-|b|^2)).
DiskPoint hilbert_midpoint(DiskPoint a, DiskPoint b);

struct DiameterBound {
    double bound;  // 2 th(h(x, y) / 4)
    double slack;  // bound - |x - y| >= 0; zero when y = -x
};

/// Euclidean separation bound |x - y| <= 2 th(h(x, y) / 4).
DiameterBound diameter_bound(DiskPoint x, DiskPoint y);

struct InclusionReport {
    double target;       // rho(z0, z0 + s) = Hilbert radius of the covering ball
    double max_hilbert;  // max of h(z0, p) over the sampled Euclidean boundary
    double min_slack;    // target - max_hilbert, nonnegative up to tolerance
    double tangent_gap;  // |h(z0, z0 + s) - target|, the sharpness point
    int samples;
};

/// Certifies B^2(z0, s) inside B_h(z0, rho(z0, z0 + s)) on a sampled
/// boundary, for real z0 in (0, 1) and s in (0, 1 - z0).
InclusionReport euclidean_inclusion_check(double z0, double s, int samples = 360);

}  // namespace diskgeo
