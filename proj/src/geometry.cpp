#include "diskgeo/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace diskgeo {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

DiskPoint::DiskPoint(Complex z) : z_(z) {
    if (!is_finite(z)) throw InvalidPoint("DiskPoint: non-finite coordinate");
    if (std::abs(z) >= 1.0) throw OutsideDisk("DiskPoint: |z| >= 1");
}

ConvexPolygon::ConvexPolygon(std::vector<Complex> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw InvalidPolygon("ConvexPolygon: fewer than three vertices");
    for (const Complex& v : vertices_)
        if (!is_finite(v)) throw InvalidPolygon("ConvexPolygon: non-finite vertex");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(vertices_[i] - vertices_[j]) <= 1e-12)
                throw InvalidPolygon("ConvexPolygon: repeated vertex");
    for (std::size_t i = 0; i < n; ++i) {
        const Complex& a = vertices_[i];
        const Complex& b = vertices_[(i + 1) % n];
        const Complex& c = vertices_[(i + 2) % n];
        if (cross(b - a, c - b) <= 0.0)
            throw InvalidPolygon("ConvexPolygon: vertices not strictly convex counterclockwise");
    }
}

bool ConvexPolygon::contains(Complex p) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex& a = vertices_[i];
        const Complex& b = vertices_[(i + 1) % n];
        if (cross(b - a, p - a) <= 0.0) return false;
    }
    return true;
}

Complex line_intersection(Complex a, Complex b, Complex c, Complex d) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(c) || !is_finite(d))
        throw InvalidPoint("line_intersection: non-finite input");
    if (std::abs(a - b) <= kCoincidentTol || std::abs(c - d) <= kCoincidentTol)
        throw DegenerateLine("line_intersection: coincident defining points");

    // The line through p, q is (conj(p)-conj(q)) z - (p-q) conj(z) = conj(p) q - p conj(q);
    // eliminating conj(z) from the two line equations gives the quotient below.
    const Complex ab = std::conj(a) * b - a * std::conj(b);
    const Complex cd = std::conj(c) * d - c * std::conj(d);
    const Complex num = ab * (c - d) - (a - b) * cd;
    const Complex den = (std::conj(a) - std::conj(b)) * (c - d) - (a - b) * (std::conj(c) - std::conj(d));

    const double scale = std::abs(a - b) * std::abs(c - d);
    if (std::abs(den) < kParallelTol * scale)
        throw ParallelLines("line_intersection: parallel lines");
    return num / den;
}

Chord chord_of(DiskPoint ap, DiskPoint bp) {
    const Complex a = ap.value();
    const Complex b = bp.value();
    if (std::abs(a - b) <= kCoincidentTol)
        throw CoincidentPoints("chord_of: coincident points");

    // Endpoints solve qa z^2 + qb z + qc = 0 on the unit circle.
    const Complex qa = std::conj(a) - std::conj(b);
    const Complex qb = -(std::conj(a) * b - a * std::conj(b));
    const Complex qc = -(a - b);

    // Larger-magnitude root first, second root from the product; avoids
    // cancellation when a, b sit near the boundary.
    Complex disc = std::sqrt(qb * qb - 4.0 * qa * qc);
    if (std::real(std::conj(qb) * disc) < 0.0) disc = -disc;
    const Complex q = -0.5 * (qb + disc);
    const Complex r1 = q / qa;
    const Complex r2 = qc / q;

    const double d1a = std::abs(r1 - a), d1b = std::abs(r1 - b);
    Complex u, v;
    if (d1a < d1b) {
        u = r1; v = r2;
    } else if (d1a > d1b) {
        u = r2; v = r1;
    } else {
        // Symmetric pair; pick the root with smaller principal argument.
        // Either ordering yields the same cross-ratio.
        if (std::arg(r1) <= std::arg(r2)) { u = r1; v = r2; }
        else                              { u = r2; v = r1; }
    }
    return Chord{u, v, 0.5 * std::abs(u + v)};
}

double chord_offset(DiskPoint ap, DiskPoint bp) {
    const Complex a = ap.value();
    const Complex b = bp.value();
    if (std::abs(a - b) <= kCoincidentTol)
        throw CoincidentPoints("chord_offset: coincident points");
    return std::abs(std::imag(std::conj(a) * b)) / std::abs(a - b);
}

double cross_ratio(Complex u, Complex a, Complex b, Complex v) {
    const double ub = std::abs(u - b);
    const double av = std::abs(a - v);
    const double ua = std::abs(u - a);
    const double bv = std::abs(b - v);
    const double scale = std::max({ub, av, ua, bv});
    if (ua < 1e-14 * scale || bv < 1e-14 * scale)
        throw DegenerateCrossRatio("cross_ratio: vanishing denominator factor");
    return (ub * av) / (ua * bv);
}

Complex circumcenter(Complex a, Complex b, Complex c) {
    const double scale = std::max({std::abs(b - a), std::abs(c - b), std::abs(c - a)});
    if (std::abs(a - b) <= kCoincidentTol || std::abs(b - c) <= kCoincidentTol ||
        std::abs(a - c) <= kCoincidentTol)
        throw CollinearPoints("circumcenter: coincident points");
    if (std::abs(cross(b - a, c - a)) <= kParallelTol * scale * scale)
        throw CollinearPoints("circumcenter: collinear points");

    const Complex mab = 0.5 * (a + b);
    const Complex mbc = 0.5 * (b + c);
    const Complex i(0.0, 1.0);
    return line_intersection(mab, mab + i * (b - a), mbc, mbc + i * (c - b));
}

std::pair<Complex, Complex> polygon_chord(const ConvexPolygon& poly, Complex a, Complex b) {
    if (!poly.contains(a) || !poly.contains(b))
        throw PointOutsidePolygon("polygon_chord: point not strictly interior");
    if (std::abs(a - b) <= kCoincidentTol)
        throw CoincidentPoints("polygon_chord: coincident points");

    std::vector<Complex> hits;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex c = poly.vertices()[i];
        const Complex d = poly.vertices()[(i + 1) % n];
        Complex pt;
        try {
            pt = line_intersection(a, b, c, d);
        } catch (const ParallelLines&) {
            continue;
        }
        // On-segment test; keeps vertex hits from both incident edges.
        if (std::abs(c - pt) + std::abs(d - pt) - std::abs(c - d) <= 1e-12 * std::abs(c - d)) {
            bool duplicate = false;
            for (const Complex& h : hits)
                if (std::abs(h - pt) < 1e-10) { duplicate = true; break; }
            if (!duplicate) hits.push_back(pt);
        }
    }
    if (hits.size() != 2)
        throw Error("polygon_chord: expected exactly two boundary points, found " +
                    std::to_string(hits.size()));

    const double d0a = std::abs(hits[0] - a), d0b = std::abs(hits[0] - b);
    if (d0a <= d0b) return {hits[0], hits[1]};
    return {hits[1], hits[0]};
}

}  // namespace diskgeo
