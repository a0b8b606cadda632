#include <cmath>

#include "doctest.h"

#include "diskgeo/geometry.hpp"
#include "diskgeo/oracles.hpp"
#include "diskgeo/sampling.hpp"

using namespace diskgeo;

namespace {

// Independent route for line intersections: solve the 2x2 real system
// a + t (b - a) = c + s (d - c).
Complex solve_linear_intersection(Complex a, Complex b, Complex c, Complex d) {
    const Complex u = b - a, v = d - c, r = c - a;
    const double det = -u.real() * v.imag() + v.real() * u.imag();
    const double t = (-r.real() * v.imag() + v.real() * r.imag()) / det;
    return a + t * u;
}

double point_line_residual(Complex p, Complex a, Complex b) {
    return std::abs(cross(b - a, p - a)) / std::abs(b - a);
}

const ConvexPolygon kSquare({Complex(1, -1), Complex(1, 1), Complex(-1, 1), Complex(-1, -1)});
const ConvexPolygon kTriangle({Complex(0, 0), Complex(2, 0), Complex(0, 1)});

}  // namespace

TEST_CASE("DiskPoint validation") {
    CHECK_NOTHROW(DiskPoint(0.999, 0.0));
    CHECK_THROWS_AS(DiskPoint(1.0, 0.0), OutsideDisk);
    CHECK_THROWS_AS(DiskPoint(-1.5, 0.0), OutsideDisk);
    CHECK_THROWS_AS(DiskPoint(std::nan(""), 0.0), InvalidPoint);
    CHECK(DiskPoint(1.0 - 1e-13, 0.0).near_boundary());
    CHECK_FALSE(DiskPoint(0.999, 0.0).near_boundary());
}

TEST_CASE("line_intersection examples") {
    CHECK(std::abs(line_intersection(Complex(0, 0), Complex(1, 1), Complex(1, 0), Complex(0, 1)) -
                   Complex(0.5, 0.5)) < 1e-14);
    CHECK(std::abs(line_intersection(Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 1))) <
          1e-14);

    const Complex a(0.2, 0.1), b(0.9, -0.3), c(0, -0.5), d(0, 0.8);
    const Complex got = line_intersection(a, b, c, d);
    const Complex want = solve_linear_intersection(a, b, c, d);
    CHECK(std::abs(got - want) < 1e-12);
}

TEST_CASE("line_intersection errors") {
    CHECK_THROWS_AS(line_intersection(Complex(0, 0), Complex(1, 0), Complex(0, 1), Complex(1, 1)),
                    ParallelLines);
    CHECK_THROWS_AS(line_intersection(Complex(0, 0), Complex(0, 0), Complex(0, 1), Complex(1, 1)),
                    DegenerateLine);
}

TEST_CASE("line_intersection properties: on both lines, swap invariant") {
    Rng rng(101);
    for (int i = 0; i < 500; ++i) {
        const Complex a = rng.disk_point().value(), b = rng.disk_point().value();
        const Complex c = rng.disk_point().value(), d = rng.disk_point().value();
        if (std::abs(a - b) < 1e-3 || std::abs(c - d) < 1e-3) continue;
        Complex w;
        try {
            w = line_intersection(a, b, c, d);
        } catch (const ParallelLines&) {
            continue;
        }
        const double scale = 1.0 + std::abs(w);
        CHECK(point_line_residual(w, a, b) <= 1e-10 * scale);
        CHECK(point_line_residual(w, c, d) <= 1e-10 * scale);
        CHECK(std::abs(line_intersection(b, a, c, d) - w) <= 1e-10 * scale);
        CHECK(std::abs(line_intersection(a, b, d, c) - w) <= 1e-10 * scale);
    }
}

TEST_CASE("chord_of examples") {
    SUBCASE("real-axis chord") {
        const Chord ch = chord_of(DiskPoint(0, 0), DiskPoint(0.5, 0));
        CHECK(std::abs(ch.u - Complex(-1, 0)) < 1e-14);
        CHECK(std::abs(ch.v - Complex(1, 0)) < 1e-14);
        CHECK(ch.m == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("imaginary-axis chord") {
        const Chord ch = chord_of(DiskPoint(0, -0.3), DiskPoint(0, 0.3));
        CHECK(std::abs(ch.u - Complex(0, -1)) < 1e-14);
        CHECK(std::abs(ch.v - Complex(0, 1)) < 1e-14);
        CHECK(ch.m == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("vertical chord at x = 0.5") {
        // Intersecting x = 0.5 with the unit circle gives y = +-sqrt(3)/2.
        const double y = std::sqrt(3.0) / 2.0;
        const Chord ch = chord_of(DiskPoint(0.5, 0.1), DiskPoint(0.5, -0.1));
        CHECK(std::abs(ch.u - Complex(0.5, y)) < 1e-13);
        CHECK(std::abs(ch.v - Complex(0.5, -y)) < 1e-13);
        CHECK(ch.m == doctest::Approx(0.5).epsilon(1e-13));
    }
    CHECK_THROWS_AS(chord_of(DiskPoint(0.1, 0.2), DiskPoint(0.1, 0.2)), CoincidentPoints);
}

TEST_CASE("chord_of properties on random pairs") {
    Rng rng(202);
    for (int i = 0; i < 10000; ++i) {
        const DiskPoint a = rng.disk_point(), b = rng.disk_point();
        if (std::abs(a.value() - b.value()) < 1e-6) continue;
        const Chord ch = chord_of(a, b);
        CHECK(std::abs(std::abs(ch.u) - 1.0) <= 1e-12);
        CHECK(std::abs(std::abs(ch.v) - 1.0) <= 1e-12);
        CHECK(point_line_residual(ch.u, a.value(), b.value()) <= 1e-10);
        CHECK(point_line_residual(ch.v, a.value(), b.value()) <= 1e-10);
        CHECK(std::abs(ch.u - a.value()) <= std::abs(ch.u - b.value()) + 1e-12);
        CHECK(ch.m == doctest::Approx(0.5 * std::abs(ch.u + ch.v)).epsilon(1e-12));
        CHECK(std::abs(ch.m - chord_offset(a, b)) <= 1e-12);
    }
}

TEST_CASE("chord_offset examples and oracle agreement") {
    CHECK(chord_offset(DiskPoint(0, 0), DiskPoint(0.7, 0)) == doctest::Approx(0.0));
    CHECK(chord_offset(DiskPoint(-0.4, 0), DiskPoint(0.4, 0)) == doctest::Approx(0.0));
    CHECK(chord_offset(DiskPoint(0.5, 0.1), DiskPoint(0.5, -0.1)) ==
          doctest::Approx(0.5).epsilon(1e-13));
    CHECK_THROWS_AS(chord_offset(DiskPoint(0.3, 0), DiskPoint(0.3, 0)), CoincidentPoints);

    Rng rng(303);
    for (int i = 0; i < 10000; ++i) {
        const DiskPoint a = rng.disk_point(), b = rng.disk_point();
        if (std::abs(a.value() - b.value()) < 1e-6) continue;
        const double via_foot = std::abs(oracles::foot_of_perpendicular(a.value(), b.value()));
        CHECK(std::abs(chord_offset(a, b) - via_foot) <= 1e-12);
    }
}

TEST_CASE("cross_ratio examples and swap symmetry") {
    CHECK(cross_ratio(Complex(-1, 0), Complex(0, 0), Complex(0.5, 0), Complex(1, 0)) ==
          doctest::Approx(3.0).epsilon(1e-14));
    CHECK(cross_ratio(Complex(-1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(cross_ratio(Complex(0, 0), Complex(0, 0), Complex(0.5, 0), Complex(1, 0)),
                    DegenerateCrossRatio);

    Rng rng(404);
    for (int i = 0; i < 2000; ++i) {
        const DiskPoint a = rng.disk_point(), b = rng.disk_point();
        if (std::abs(a.value() - b.value()) < 1e-6) continue;
        const Chord ch = chord_of(a, b);
        const double forward = cross_ratio(ch.u, a.value(), b.value(), ch.v);
        const double swapped = cross_ratio(ch.v, b.value(), a.value(), ch.u);
        CHECK(std::abs(forward - swapped) <= 1e-12 * forward);
    }
}

TEST_CASE("circumcenter") {
    CHECK(std::abs(circumcenter(Complex(1, 0), Complex(0, 1), Complex(-1, 0))) < 1e-13);
    CHECK(std::abs(circumcenter(Complex(0, 0), Complex(1, 0), Complex(0, 1)) -
                   Complex(0.5, 0.5)) < 1e-13);
    CHECK_THROWS_AS(circumcenter(Complex(0, 0), Complex(1, 0), Complex(2, 0)), CollinearPoints);

    const Complex pts[3] = {Complex(0.1, 0), Complex(0.8, 0.2), Complex(-0.3, 0.6)};
    const Complex w = circumcenter(pts[0], pts[1], pts[2]);
    const double r0 = std::abs(w - pts[0]);
    CHECK(std::abs(std::abs(w - pts[1]) - r0) <= 1e-10 * (1.0 + r0));
    CHECK(std::abs(std::abs(w - pts[2]) - r0) <= 1e-10 * (1.0 + r0));
}

TEST_CASE("ConvexPolygon validation") {
    CHECK_THROWS_AS(ConvexPolygon({Complex(0, 0), Complex(1, 0)}), InvalidPolygon);
    // Clockwise square.
    CHECK_THROWS_AS(ConvexPolygon({Complex(-1, -1), Complex(-1, 1), Complex(1, 1), Complex(1, -1)}),
                    InvalidPolygon);
    // Repeated vertex.
    CHECK_THROWS_AS(ConvexPolygon({Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 1)}),
                    InvalidPolygon);
    // Collinear vertex on an edge is not strictly convex.
    CHECK_THROWS_AS(ConvexPolygon({Complex(0, 0), Complex(1, 0), Complex(2, 0), Complex(0, 1)}),
                    InvalidPolygon);
    // Reflex vertex.
    CHECK_THROWS_AS(
        ConvexPolygon({Complex(0, 0), Complex(2, 0), Complex(0.1, 0.1), Complex(0, 2)}),
        InvalidPolygon);

    CHECK(kSquare.contains(Complex(0, 0)));
    CHECK_FALSE(kSquare.contains(Complex(1, 0)));   // boundary is outside
    CHECK_FALSE(kSquare.contains(Complex(2, 0)));
    CHECK(kTriangle.contains(Complex(0.5, 0.2)));
}

TEST_CASE("polygon_chord examples") {
    SUBCASE("square horizontal chord") {
        const auto [u, v] = polygon_chord(kSquare, Complex(0, 0), Complex(0.5, 0));
        CHECK(std::abs(u - Complex(-1, 0)) < 1e-12);
        CHECK(std::abs(v - Complex(1, 0)) < 1e-12);
    }
    SUBCASE("square vertical chord") {
        const auto [u, v] = polygon_chord(kSquare, Complex(0, 0), Complex(0, 0.5));
        CHECK(std::abs(u - Complex(0, -1)) < 1e-12);
        CHECK(std::abs(v - Complex(0, 1)) < 1e-12);
    }
    SUBCASE("diagonal through two corners deduplicates the vertex hits") {
        const auto [u, v] = polygon_chord(kSquare, Complex(0, 0), Complex(0.5, 0.5));
        CHECK(std::abs(u - Complex(-1, -1)) < 1e-12);
        CHECK(std::abs(v - Complex(1, 1)) < 1e-12);
    }
    SUBCASE("triangle chord endpoints lie on edges") {
        const Complex a(0.5, 0.2), b(1.0, 0.3);
        const auto [u, v] = polygon_chord(kTriangle, a, b);
        // Brute force: intersect with each edge and keep parameter hits in [0, 1].
        int on_edges = 0;
        for (int i = 0; i < 3; ++i) {
            const Complex c = kTriangle.vertices()[i];
            const Complex d = kTriangle.vertices()[(i + 1) % 3];
            for (const Complex& p : {u, v}) {
                const double s = dot(d - c, p - c) / std::norm(d - c);
                if (s >= -1e-12 && s <= 1.0 + 1e-12 && point_line_residual(p, c, d) < 1e-10)
                    ++on_edges;
            }
        }
        CHECK(on_edges >= 2);
        CHECK(std::abs(u - a) <= std::abs(u - b));
    }
    CHECK_THROWS_AS(polygon_chord(kSquare, Complex(5, 0), Complex(0, 0)), PointOutsidePolygon);
    CHECK_THROWS_AS(polygon_chord(kSquare, Complex(0.2, 0), Complex(0.2, 0)), CoincidentPoints);
}
