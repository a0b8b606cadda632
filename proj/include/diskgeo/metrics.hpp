#pragma once

#include "diskgeo/geometry.hpp"

namespace diskgeo {

/// A point of the upper half plane, Im(z) > 0 strictly.
class HalfPlanePoint {
public:
    explicit HalfPlanePoint(Complex z);
    HalfPlanePoint(double re, double im) : HalfPlanePoint(Complex(re, im)) {}
    Complex value() const { return z_; }

private:
    Complex z_;
};

/// Hyperbolic distance of the unit disk,
/// rho = 2 arsh(|a-b| / sqrt((1-|a|^2)(1-|b|^2))).
double rho_disk(DiskPoint a, DiskPoint b);

/// Hyperbolic distance of the upper half plane,
/// rho = arch(1 + |a-b|^2 / (2 Im(a) Im(b))).
double rho_halfplane(HalfPlanePoint a, HalfPlanePoint b);

/// Hilbert distance of the unit disk: log of the ordered cross-ratio of the
/// chord endpoints with the two points. Zero for coincident points.
double hilbert_disk(DiskPoint a, DiskPoint b);

/// Hilbert distance in closed form, log H with
///   H = [Re((1 - a conj(b))^2) + |a-b|^2
///        + 2 Re(1 - conj(a) b) sqrt(|a-b|^2 - Im(a conj(b))^2)]
///       / ((1-|a|^2)(1-|b|^2)).
/// H and 1/H are the two roots of the eliminated quadratic; the larger root
/// is returned as log H >= 0.
double hilbert_closed_form(DiskPoint a, DiskPoint b);

/// Visual angle distance of the unit disk: the supremum over boundary points
/// z of the angle at z subtended by a and b. Evaluated in closed form through
/// tan(v/2) = (1+m) u / (1 + sqrt(1 + (1-m^2) u^2)) with u = sh(rho/2).
double visual_angle_disk(DiskPoint a, DiskPoint b);

/// v = 2 atan(sqrt((1+m)/(1-m)) th(h/4)). Throws InvalidOffset for m outside
/// [0, 1).
double visual_from_hilbert(double h, double m);

/// h = 2 arsh(sqrt(1-m^2) sh(rho/2)); h <= rho with equality iff m = 0.
double hilbert_from_rho(double rho, double m);

/// Hilbert distance of a bounded convex polygon: log of the ordered
/// cross-ratio with the polygon chord endpoints. Zero for coincident points.
double hilbert_polygon(const ConvexPolygon& poly, Complex a, Complex b);

}  // namespace diskgeo
