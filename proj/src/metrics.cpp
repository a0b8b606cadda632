#include "diskgeo/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace diskgeo {

HalfPlanePoint::HalfPlanePoint(Complex z) : z_(z) {
    if (!is_finite(z)) throw InvalidPoint("HalfPlanePoint: non-finite coordinate");
    if (z.imag() <= 0.0) throw OutsideHalfPlane("HalfPlanePoint: Im(z) <= 0");
}

double rho_disk(DiskPoint ap, DiskPoint bp) {
    const Complex a = ap.value();
    const Complex b = bp.value();
    const double s = std::abs(a - b) /
                     std::sqrt((1.0 - std::norm(a)) * (1.0 - std::norm(b)));
    return 2.0 * std::asinh(s);
}

double rho_halfplane(HalfPlanePoint ap, HalfPlanePoint bp) {
    const Complex a = ap.value();
    const Complex b = bp.value();
    const double c = 1.0 + std::norm(a - b) / (2.0 * a.imag() * b.imag());
    return std::acosh(std::max(c, 1.0));
}

double hilbert_disk(DiskPoint ap, DiskPoint bp) {
    // Chord direction is ill-conditioned for nearly coincident points.
    if (std::abs(ap.value() - bp.value()) < kCoincidentTol) return 0.0;
    const Chord ch = chord_of(ap, bp);
    return std::log(cross_ratio(ch.u, ap.value(), bp.value(), ch.v));
}

double hilbert_closed_form(DiskPoint ap, DiskPoint bp) {
    const Complex a = ap.value();
    const Complex b = bp.value();
    const Complex w = 1.0 - a * std::conj(b);  // 1 - a conj(b)
    const double d2 = std::norm(a - b);
    const double im = std::imag(a * std::conj(b));

    double rad = d2 - im * im;
    if (rad < 0.0) {
        // Collinearity makes the radicand a difference of nearly equal
        // squares; anything below the rounding floor is a real defect.
        if (rad < -1e-15) throw Error("hilbert_closed_form: radicand below -1e-15");
        rad = 0.0;
    }

    const double num = (w.real() * w.real() - w.imag() * w.imag()) + d2 +
                       2.0 * w.real() * std::sqrt(rad);
    const double den = (1.0 - std::norm(a)) * (1.0 - std::norm(b));
    const double H = num / den;
    return std::log(std::max(H, 1.0));
}

double visual_angle_disk(DiskPoint ap, DiskPoint bp) {
    if (std::abs(ap.value() - bp.value()) < kCoincidentTol) return 0.0;
    const double m = chord_offset(ap, bp);
    const double u = std::abs(ap.value() - bp.value()) /
                     std::sqrt((1.0 - std::norm(ap.value())) * (1.0 - std::norm(bp.value())));
    const double t = (1.0 + m) * u / (1.0 + std::sqrt(1.0 + (1.0 - m * m) * u * u));
    return 2.0 * std::atan(t);
}

double visual_from_hilbert(double h, double m) {
    if (!(m >= 0.0 && m < 1.0)) throw InvalidOffset("visual_from_hilbert: m outside [0, 1)");
    if (!(h >= 0.0)) throw Error("visual_from_hilbert: negative distance");
    return 2.0 * std::atan(std::sqrt((1.0 + m) / (1.0 - m)) * std::tanh(h / 4.0));
}

double hilbert_from_rho(double rho, double m) {
    if (!(m >= 0.0 && m < 1.0)) throw InvalidOffset("hilbert_from_rho: m outside [0, 1)");
    if (!(rho >= 0.0)) throw Error("hilbert_from_rho: negative distance");
    return 2.0 * std::asinh(std::sqrt((1.0 - m) * (1.0 + m)) * std::sinh(rho / 2.0));
}

double hilbert_polygon(const ConvexPolygon& poly, Complex a, Complex b) {
    if (!poly.contains(a) || !poly.contains(b))
        throw PointOutsidePolygon("hilbert_polygon: point not strictly interior");
    if (std::abs(a - b) < kCoincidentTol) return 0.0;
    const auto [u, v] = polygon_chord(poly, a, b);
    return std::log(cross_ratio(u, a, b, v));
}

}  // namespace diskgeo
