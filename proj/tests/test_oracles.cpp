#include <cmath>

#include "doctest.h"

#include "diskgeo/metrics.hpp"
#include "diskgeo/oracles.hpp"
#include "diskgeo/sampling.hpp"

using namespace diskgeo;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("visual_angle_bruteforce") {
    CHECK(oracles::visual_angle_bruteforce(DiskPoint(0.2, 0.3), DiskPoint(0.2, 0.3)) == 0.0);
    // Symmetric pair: the maximizer sits at the top of the circle.
    CHECK(std::abs(oracles::visual_angle_bruteforce(DiskPoint(-0.5, 0), DiskPoint(0.5, 0)) -
                   2.0 * std::atan(0.5)) <= 1e-6);
    CHECK_THROWS_AS(oracles::visual_angle_bruteforce(DiskPoint(0, 0), DiskPoint(0.5, 0), 100),
                    Error);
}

TEST_CASE("hilbert_ray_point") {
    SUBCASE("from the origin every direction reaches th(t/2)") {
        for (double t : {0.25, 1.0, 2.0}) {
            const DiskPoint p =
                oracles::hilbert_ray_point(DiskPoint(0, 0), std::polar(1.0, 1.1), t);
            CHECK(p.modulus() == doctest::Approx(std::tanh(t / 2.0)).epsilon(1e-11));
        }
    }
    SUBCASE("monotone along the ray") {
        const DiskPoint z0(0.4, 0.2);
        const Complex dir = std::polar(1.0, 0.3);
        double prev = 0.0;
        for (int k = 1; k <= 32; ++k) {
            const double s = 0.55 * k / 32.0;
            const double h = hilbert_disk(z0, DiskPoint(z0.value() + s * dir));
            CHECK(h > prev);
            prev = h;
        }
    }
    SUBCASE("unreachable radius reports failure") {
        CHECK_THROWS_AS(oracles::hilbert_ray_point(DiskPoint(0, 0), Complex(1, 0), 60.0),
                        ConvergenceFailure);
    }
    CHECK_THROWS_AS(oracles::hilbert_ray_point(DiskPoint(0, 0), Complex(0, 0), 1.0), Error);
}

TEST_CASE("polygon_ray_point and Hilbert balls in polygons") {
    const ConvexPolygon square({Complex(1, -1), Complex(1, 1), Complex(-1, 1), Complex(-1, -1)});
    const ConvexPolygon triangle({Complex(0, 0), Complex(2, 0), Complex(0, 1)});

    SUBCASE("each ball point sits at the requested distance") {
        for (int k = 0; k < 36; ++k) {
            const Complex dir = std::polar(1.0, 2.0 * kPi * k / 36.0);
            const Complex p = oracles::polygon_ray_point(square, Complex(0.2, -0.1), dir, 0.8);
            CHECK(std::abs(hilbert_polygon(square, Complex(0.2, -0.1), p) - 0.8) <= 1e-11);
        }
    }
    SUBCASE("the ball around the square's center turns into itself") {
        std::vector<Complex> pts;
        for (int k = 0; k < 36; ++k)
            pts.push_back(oracles::polygon_ray_point(
                square, Complex(0, 0), std::polar(1.0, 2.0 * kPi * k / 36.0), 1.0));
        const Complex i(0, 1);
        for (int k = 0; k < 36; ++k)
            CHECK(std::abs(pts[(k + 9) % 36] - i * pts[k]) <= 1e-10);
    }
    SUBCASE("triangle ball stays interior") {
        const Complex center(0.5, 0.3);
        for (int k = 0; k < 36; ++k) {
            const Complex p = oracles::polygon_ray_point(
                triangle, center, std::polar(1.0, 2.0 * kPi * k / 36.0), 1.5);
            CHECK(triangle.contains(p));
        }
    }
    CHECK_THROWS_AS(oracles::polygon_ray_point(square, Complex(3, 0), Complex(1, 0), 1.0),
                    PointOutsidePolygon);
    CHECK_THROWS_AS(oracles::polygon_ray_point(square, Complex(0, 0), Complex(1, 0), -1.0),
                    InvalidRadius);
}

TEST_CASE("foot_of_perpendicular") {
    CHECK(std::abs(oracles::foot_of_perpendicular(Complex(-1, 0), Complex(1, 0))) < 1e-15);
    CHECK(std::abs(oracles::foot_of_perpendicular(Complex(0.5, -1), Complex(0.5, 1)) -
                   Complex(0.5, 0)) < 1e-15);
    CHECK_THROWS_AS(oracles::foot_of_perpendicular(Complex(0.1, 0), Complex(0.1, 0)),
                    CoincidentPoints);

    Rng rng(61);
    for (int i = 0; i < 10000; ++i) {
        const Complex a = rng.disk_point().value(), b = rng.disk_point().value();
        if (std::abs(a - b) < 1e-6) continue;
        const Complex foot = oracles::foot_of_perpendicular(a, b);
        CHECK(std::abs(dot(b - a, foot)) <= 1e-12);
    }
}

TEST_CASE("rho_extrema_on_ellipse") {
    SUBCASE("origin-centered Hilbert circles are hyperbolic circles") {
        const auto [mn, mx] = oracles::rho_extrema_on_ellipse(hilbert_circle(DiskPoint(0, 0), 0.9));
        CHECK(mn == doctest::Approx(0.9).epsilon(1e-9));
        CHECK(mx == doctest::Approx(0.9).epsilon(1e-9));
    }
    SUBCASE("the minimum is attained at both radial vertices") {
        const DiskPoint z0(0.5, 0);
        const HilbertEllipse e = hilbert_circle(z0, 1.0);
        CHECK(rho_disk(z0, DiskPoint(e.center + e.semi_radial)) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rho_disk(z0, DiskPoint(e.center - e.semi_radial)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("collinear_config_check rejects bad input") {
    CHECK_THROWS_AS(oracles::collinear_config_check(-0.5, Complex(0, 1), Complex(0, -1),
                                                    Complex(1, 0)),
                    InadmissibleConfiguration);
    CHECK_THROWS_AS(oracles::collinear_config_check(0.5, Complex(0, 0.5), Complex(0, -1),
                                                    Complex(1, 0)),
                    InadmissibleConfiguration);
}

TEST_CASE("collinear_config_check: mirror-symmetric configurations") {
    // d = conj(a) with a real transversal makes the middle pair coincide and
    // the equalities hold by reflection. The anchor g sits outside the
    // circle, where two chord lines of the inscribed quadrilateral meet.
    int found = 0;
    for (double g : {1.2, 1.5, 2.0, 3.0, 5.0}) {
        for (double theta : {0.4, 0.8, 1.2, 1.9, 2.4}) {
            const Complex a = std::polar(1.0, theta);
            oracles::ConfigReport rep;
            try {
                rep = oracles::collinear_config_check(g, a, std::conj(a), Complex(1, 0));
            } catch (const InadmissibleConfiguration&) {
                continue;
            }
            ++found;
            CHECK(std::abs(rep.cfg.j - rep.cfg.k) <= 1e-9);
            CHECK(rep.max_rho_gap() <= 1e-12);
            CHECK(rep.max_hilbert_gap() <= 1e-11);
            CHECK(rep.max_visual_gap() <= 1e-11);
            CHECK(rep.max_pseudo_gap() <= 1e-12);
            CHECK(rep.collinearity_residual <= 1e-12);
        }
    }
    CHECK(found >= 5);
}

TEST_CASE("collinear_config_check: random admissible configurations") {
    Rng rng(71);
    int accepted = 0;
    int attempts = 0;
    while (accepted < 200 && attempts < 200000) {
        ++attempts;
        oracles::ConfigReport rep;
        try {
            rep = oracles::collinear_config_check(rng.uniform(1.05, 4.0), rng.unit_point(),
                                                  rng.unit_point(), rng.unit_point());
        } catch (const InadmissibleConfiguration&) {
            continue;
        }
        bool near_boundary = false;
        for (Complex p : {rep.cfg.h, rep.cfg.j, rep.cfg.k, rep.cfg.l})
            near_boundary = near_boundary || std::abs(p) > 0.99;
        if (near_boundary) continue;
        ++accepted;
        CHECK(rep.max_rho_gap() <= 1e-10);
        CHECK(rep.max_hilbert_gap() <= 1e-9);
        CHECK(rep.max_visual_gap() <= 1e-9);
        CHECK(rep.max_pseudo_gap() <= 1e-10);
        CHECK(rep.collinearity_residual <= 1e-9);
    }
    CHECK(accepted == 200);
}

TEST_CASE("c2_disk_sign_sweep") {
    const auto rep = oracles::c2_disk_sign_sweep(DiskPoint(0.5, 0), 1.0, 10000);
    CHECK(rep.constant_sign);
    CHECK(rep.min_abs > 0.0);
    CHECK(rep.samples == 10000);

    // The zero set for z0 = 0 sits outside the closed disk.
    const double r = std::exp(1.0);
    const double root = (r + 1.0) / (r - 1.0);
    CHECK(root > 1.0);
    const auto rep0 = oracles::c2_disk_sign_sweep(DiskPoint(0, 0), 1.0, 10000);
    CHECK(rep0.constant_sign);
}
