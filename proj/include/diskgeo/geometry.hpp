#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "diskgeo/errors.hpp"

namespace diskgeo {

using Complex = std::complex<double>;

// Degeneracy thresholds. Coincidence is absolute, parallelism is relative to
// the coefficient scale of the line pair; both sit well below the certified
// tolerances (1e-10 .. 1e-12) so tolerance tests never race the guards.
inline constexpr double kCoincidentTol   = 1e-14;
inline constexpr double kParallelTol     = 1e-14;
inline constexpr double kNearBoundaryTol = 1e-12;

inline double dot(Complex a, Complex b) { return std::real(std::conj(a) * b); }
inline double cross(Complex a, Complex b) { return std::imag(std::conj(a) * b); }

bool is_finite(Complex z);

/// A point of the open unit disk. Construction rejects non-finite
/// coordinates and |z| >= 1. Points with |z| in [1 - 1e-12, 1) are accepted
/// but report near_boundary(); random samplers stay at |z| <= 0.999 because
/// every disk metric blows up at the boundary.
class DiskPoint {
public:
    explicit DiskPoint(Complex z);
    DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

    Complex value() const { return z_; }
    double modulus() const { return std::abs(z_); }
    bool near_boundary() const { return std::abs(z_) >= 1.0 - kNearBoundaryTol; }

private:
    Complex z_;
};

/// Chord of the unit circle through two interior points: the endpoints u, v
/// ordered so that |u - a| <= |u - b|, and the Euclidean distance m from the
/// origin to the supporting line (equal to the modulus of the chord midpoint
/// (u + v) / 2).
struct Chord {
    Complex u;
    Complex v;
    double m;  // in [0, 1)
};

/// Counterclockwise, strictly convex polygon with at least three vertices.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Complex> vertices);

    const std::vector<Complex>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    /// Strict interior test (boundary points count as outside).
    bool contains(Complex p) const;

private:
    std::vector<Complex> vertices_;
};

/// Intersection of the lines through (a, b) and (c, d).
/// Throws DegenerateLine if either point pair coincides, ParallelLines if the
/// lines are parallel within tolerance.
Complex line_intersection(Complex a, Complex b, Complex c, Complex d);

/// Endpoints of the unit-circle chord through two distinct disk points, as
/// the roots of (conj(a)-conj(b)) z^2 - (conj(a) b - a conj(b)) z - (a-b) = 0,
/// solved with the stable larger-root-first recipe.
Chord chord_of(DiskPoint a, DiskPoint b);

/// Distance from the origin to the line through a and b,
/// m = |Im(conj(a) b)| / |a - b|; equals |u + v| / 2 for the chord endpoints.
double chord_offset(DiskPoint a, DiskPoint b);

/// Absolute cross-ratio |u,a,b,v| = (|u-b| |a-v|) / (|u-a| |b-v|).
double cross_ratio(Complex u, Complex a, Complex b, Complex v);

/// Center of the circle through three non-collinear points, via the
/// intersection of two perpendicular bisectors.
Complex circumcenter(Complex a, Complex b, Complex c);

/// The two boundary points of the polygon chord through interior points a, b,
/// ordered so that |u - a| <= |u - b|. Vertex hits are deduplicated.
std::pair<Complex, Complex> polygon_chord(const ConvexPolygon& poly, Complex a, Complex b);

}  // namespace diskgeo
