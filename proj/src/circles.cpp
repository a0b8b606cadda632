#include "diskgeo/circles.hpp"

#include <algorithm>
#include <cmath>

#include "diskgeo/metrics.hpp"

namespace diskgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Shared coefficient set for the C1/C2 evaluations: both polynomials are
//   2 r Re(conj(z0)^2 z^2) + S z conj(z) - 8 r Re(conj(z0) z) + c
// with their own S and constant term c.
struct QuadraticData {
    double r;
    Complex z0;
    double n0;  // |z0|^2
};

QuadraticData quadratic_data(DiskPoint z0, double t) {
    if (!(t > 0.0)) throw InvalidRadius("hilbert circle: radius t <= 0");
    return QuadraticData{std::exp(t), z0.value(), std::norm(z0.value())};
}

}  // namespace

Complex HilbertEllipse::boundary_point(double theta) const {
    const Complex axis = std::polar(1.0, orientation);
    return center + axis * Complex(semi_radial * std::cos(theta),
                                   semi_transverse * std::sin(theta));
}

EuclideanDisk hyperbolic_disk_euclidean(DiskPoint x, double M) {
    if (!(M > 0.0)) throw InvalidRadius("hyperbolic_disk_euclidean: M <= 0");
    const double t = std::tanh(M / 2.0);
    const double n = std::norm(x.value());
    const double den = 1.0 - n * t * t;
    return EuclideanDisk{x.value() * (1.0 - t * t) / den, (1.0 - n) * t / den};
}

HilbertEllipse hilbert_circle(DiskPoint z0, double t) {
    if (!(t > 0.0)) throw InvalidRadius("hilbert_circle: t <= 0");
    const double r = std::exp(t);
    const double zr = z0.modulus();
    const double phi = (zr == 0.0) ? 0.0 : std::arg(z0.value());

    const double den = (r + 1.0) * (r + 1.0) - (r - 1.0) * (r - 1.0) * zr * zr;
    const double center_r = 4.0 * r * zr / den;
    const double semi_radial = (r * r - 1.0) * (1.0 - zr * zr) / den;
    const double semi_transverse = (r - 1.0) * std::sqrt(1.0 - zr * zr) / std::sqrt(den);

    HilbertEllipse e;
    e.z0 = z0.value();
    e.t = t;
    e.r = r;
    e.center = std::polar(center_r, phi);
    e.semi_radial = semi_radial;
    e.semi_transverse = semi_transverse;
    e.orientation = phi;
    return e;
}

double implicit_c1(DiskPoint z0p, double t, Complex z) {
    const auto [r, z0, n0] = quadratic_data(z0p, t);
    const double S = -((r * r + 1.0) * n0 - (r + 1.0) * (r + 1.0));
    const double c = (r + 1.0) * (r + 1.0) * n0 - (r - 1.0) * (r - 1.0);
    return 2.0 * r * std::real(std::conj(z0) * std::conj(z0) * z * z) +
           S * std::norm(z) - 8.0 * r * std::real(std::conj(z0) * z) + c;
}

double implicit_c2(DiskPoint z0p, double t, Complex z) {
    const auto [r, z0, n0] = quadratic_data(z0p, t);
    const double S = (r * r + 1.0) * n0 - (r - 1.0) * (r - 1.0);
    const double c = (r + 1.0) * (r + 1.0) - (r - 1.0) * (r - 1.0) * n0;
    return 2.0 * r * std::real(std::conj(z0) * std::conj(z0) * z * z) +
           S * std::norm(z) - 8.0 * r * std::real(std::conj(z0) * z) + c;
}

double implicit_c1_scale(DiskPoint z0p, double t) {
    const auto [r, z0, n0] = quadratic_data(z0p, t);
    (void)z0;
    return std::max({r * n0,
                     std::abs((r * r + 1.0) * n0 - (r + 1.0) * (r + 1.0)),
                     4.0 * r * std::sqrt(n0),
                     std::abs((r + 1.0) * (r + 1.0) * n0 - (r - 1.0) * (r - 1.0))});
}

double implicit_c2_scale(DiskPoint z0p, double t) {
    const auto [r, z0, n0] = quadratic_data(z0p, t);
    (void)z0;
    return std::max({r * n0,
                     std::abs((r * r + 1.0) * n0 - (r - 1.0) * (r - 1.0)),
                     4.0 * r * std::sqrt(n0),
                     std::abs((r + 1.0) * (r + 1.0) - (r - 1.0) * (r - 1.0) * n0)});
}

double implicit_c1_gradient_norm(DiskPoint z0p, double t, Complex z) {
    const auto [r, z0, n0] = quadratic_data(z0p, t);
    const double S = -((r * r + 1.0) * n0 - (r + 1.0) * (r + 1.0));
    // For real-valued C1, |grad C1| = 2 |dC1/dz|.
    const Complex dz = 2.0 * r * std::conj(z0) * std::conj(z0) * z +
                       S * std::conj(z) - 4.0 * r * std::conj(z0);
    return 2.0 * std::abs(dz);
}

double inscribed_radius(DiskPoint z0, double t) {
    (void)z0;
    if (!(t > 0.0)) throw InvalidRadius("inscribed_radius: t <= 0");
    return t;
}

double circumscribed_radius(DiskPoint z0, double t) {
    if (!(t > 0.0)) throw InvalidRadius("circumscribed_radius: t <= 0");
    const double r = std::exp(t);
    const double zr = z0.modulus();
    const double R = (r - 1.0) / std::sqrt((r + 1.0) * (r + 1.0) - 4.0 * r * zr * zr);
    return 2.0 * std::atanh(R);
}

DiskPoint hilbert_midpoint(DiskPoint a, DiskPoint b) {
    if (std::abs(a.value() - b.value()) <= kCoincidentTol)
        throw CoincidentPoints("hilbert_midpoint: coincident points");
    const double sa = std::sqrt(1.0 - std::norm(a.value()));
    const double sb = std::sqrt(1.0 - std::norm(b.value()));
    const double t = sa / (sa + sb);
    return DiskPoint((1.0 - t) * a.value() + t * b.value());
}

DiameterBound diameter_bound(DiskPoint x, DiskPoint y) {
    const double bound = 2.0 * std::tanh(hilbert_disk(x, y) / 4.0);
    return DiameterBound{bound, bound - std::abs(x.value() - y.value())};
}

InclusionReport euclidean_inclusion_check(double z0, double s, int samples) {
    if (!(z0 > 0.0 && z0 < 1.0)) throw Error("euclidean_inclusion_check: z0 outside (0, 1)");
    if (!(s > 0.0 && s < 1.0 - z0)) throw Error("euclidean_inclusion_check: s outside (0, 1 - z0)");
    if (samples < 4) throw Error("euclidean_inclusion_check: too few samples");

    const DiskPoint center(z0, 0.0);
    const double target = rho_disk(center, DiskPoint(z0 + s, 0.0));

    double max_h = 0.0;
    double tangent_gap = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * kPi * k / samples;
        const DiskPoint p(z0 + s * std::cos(theta), s * std::sin(theta));
        const double h = hilbert_disk(center, p);
        max_h = std::max(max_h, h);
        if (k == 0) tangent_gap = std::abs(h - target);
    }
    return InclusionReport{target, max_h, target - max_h, tangent_gap, samples};
}

}  // namespace diskgeo
