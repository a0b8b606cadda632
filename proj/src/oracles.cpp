#include "diskgeo/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "diskgeo/metrics.hpp"

namespace diskgeo::oracles {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Golden-section maximization of f on [lo, hi]; assumes a single interior
// maximum in the bracket.
double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - (hi - lo) * inv_phi;
    double d = lo + (hi - lo) * inv_phi;
    double fc = f(c), fd = f(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d; d = c; fd = fc;
            c = hi - (hi - lo) * inv_phi;
            fc = f(c);
        } else {
            lo = c; c = d; fc = fd;
            d = lo + (hi - lo) * inv_phi;
            fd = f(d);
        }
    }
    return f(0.5 * (lo + hi));
}

// Scan n grid points of theta in [0, 2pi) and refine the best cell.
double scan_and_refine_max(const std::function<double(double)>& f, int n) {
    int best = 0;
    double best_val = f(0.0);
    for (int k = 1; k < n; ++k) {
        const double val = f(2.0 * kPi * k / n);
        if (val > best_val) { best_val = val; best = k; }
    }
    const double step = 2.0 * kPi / n;
    return golden_max(f, (best - 1) * step, (best + 1) * step, 1e-10);
}

double halton(std::uint64_t index, unsigned base) {
    double f = 1.0, value = 0.0;
    while (index > 0) {
        f /= base;
        value += f * static_cast<double>(index % base);
        index /= base;
    }
    return value;
}

}  // namespace

double visual_angle_bruteforce(DiskPoint ap, DiskPoint bp, int grid) {
    if (grid < 360) throw Error("visual_angle_bruteforce: grid < 360");
    const Complex a = ap.value();
    const Complex b = bp.value();
    if (std::abs(a - b) < kCoincidentTol) return 0.0;

    const auto angle_at = [&](double theta) {
        const Complex z = std::polar(1.0, theta);
        return std::abs(std::arg((a - z) / (b - z)));
    };
    return scan_and_refine_max(angle_at, grid);
}

DiskPoint hilbert_ray_point(DiskPoint z0, Complex direction, double t) {
    if (!(t > 0.0)) throw InvalidRadius("hilbert_ray_point: t <= 0");
    const double dn = std::abs(direction);
    if (dn <= kCoincidentTol) throw Error("hilbert_ray_point: zero direction");
    const Complex dir = direction / dn;
    const Complex z = z0.value();

    // Distance from z0 to the unit circle along dir.
    const double p = std::real(std::conj(z) * dir);
    const double s_boundary = -p + std::sqrt(p * p + 1.0 - std::norm(z));

    double lo = 0.0;
    double hi = s_boundary * (1.0 - 1e-12);
    if (hilbert_disk(z0, DiskPoint(z + hi * dir)) < t)
        throw ConvergenceFailure("hilbert_ray_point: t beyond reachable range");

    for (int step = 0; step < 200; ++step) {
        const double mid = 0.5 * (lo + hi);
        const double h = hilbert_disk(z0, DiskPoint(z + mid * dir));
        if (std::abs(h - t) <= 1e-12) return DiskPoint(z + mid * dir);
        if (h < t) lo = mid;
        else       hi = mid;
    }
    throw ConvergenceFailure("hilbert_ray_point: no convergence in 200 steps");
}

Complex polygon_ray_point(const ConvexPolygon& poly, Complex z0, Complex direction, double t) {
    if (!(t > 0.0)) throw InvalidRadius("polygon_ray_point: t <= 0");
    if (!poly.contains(z0)) throw PointOutsidePolygon("polygon_ray_point: z0 outside polygon");
    const double dn = std::abs(direction);
    if (dn <= kCoincidentTol) throw Error("polygon_ray_point: zero direction");
    const Complex dir = direction / dn;

    // Nearest positive ray-edge intersection bounds the bisection.
    double s_boundary = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex c = poly.vertices()[i];
        const Complex d = poly.vertices()[(i + 1) % n];
        Complex pt;
        try {
            pt = line_intersection(z0, z0 + dir, c, d);
        } catch (const ParallelLines&) {
            continue;
        }
        if (std::abs(c - pt) + std::abs(d - pt) - std::abs(c - d) > 1e-12 * std::abs(c - d))
            continue;
        const double s = dot(dir, pt - z0);
        if (s > 1e-12) s_boundary = std::min(s_boundary, s);
    }
    if (!std::isfinite(s_boundary))
        throw Error("polygon_ray_point: ray does not reach the boundary");

    double lo = 0.0;
    double hi = s_boundary * (1.0 - 1e-12);
    for (int step = 0; step < 200; ++step) {
        const double mid = 0.5 * (lo + hi);
        const double h = hilbert_polygon(poly, z0, z0 + mid * dir);
        if (std::abs(h - t) <= 1e-12) return z0 + mid * dir;
        if (h < t) lo = mid;
        else       hi = mid;
    }
    throw ConvergenceFailure("polygon_ray_point: no convergence in 200 steps");
}

Complex foot_of_perpendicular(Complex a, Complex b) {
    if (std::abs(a - b) <= kCoincidentTol)
        throw CoincidentPoints("foot_of_perpendicular: coincident points");
    const Complex d = b - a;
    const double tau = dot(d, -a) / std::norm(d);
    return a + tau * d;
}

std::pair<double, double> rho_extrema_on_ellipse(const HilbertEllipse& e) {
    const DiskPoint center(e.z0);
    const auto rho_at = [&](double theta) {
        return rho_disk(center, DiskPoint(e.boundary_point(theta)));
    };

    const int n = 720;
    int arg_min = 0, arg_max = 0;
    double val_min = rho_at(0.0), val_max = val_min;
    for (int k = 1; k < n; ++k) {
        const double val = rho_at(2.0 * kPi * k / n);
        if (val < val_min) { val_min = val; arg_min = k; }
        if (val > val_max) { val_max = val; arg_max = k; }
    }
    const double step = 2.0 * kPi / n;
    const double mn = -golden_max([&](double th) { return -rho_at(th); },
                                  (arg_min - 1) * step, (arg_min + 1) * step, 1e-10);
    const double mx = golden_max(rho_at, (arg_max - 1) * step, (arg_max + 1) * step, 1e-10);
    return {mn, mx};
}

double ConfigReport::max_rho_gap() const { return std::max(rho_gap_hj_kl, rho_gap_hk_jl); }
double ConfigReport::max_hilbert_gap() const { return std::max(hil_gap_hj_kl, hil_gap_hk_jl); }
double ConfigReport::max_visual_gap() const { return std::max(vis_gap_hj_kl, vis_gap_hk_jl); }
double ConfigReport::max_pseudo_gap() const { return std::max(pseudo_gap_1, pseudo_gap_2); }

ConfigReport collinear_config_check(double g, Complex a, Complex d, Complex e) {
    if (!(g > 0.0)) throw InadmissibleConfiguration("config: g must be positive");
    for (Complex p : {a, d, e})
        if (std::abs(std::abs(p) - 1.0) > 1e-12)
            throw InadmissibleConfiguration("config: a, d, e must lie on the unit circle");

    const Complex den_b = 1.0 - g * a;
    const Complex den_c = 1.0 - g * d;
    if (std::abs(den_b) <= 1e-12 || std::abs(den_c) <= 1e-12)
        throw InadmissibleConfiguration("config: companion point undefined");
    const Complex b = (g - a) / den_b;
    const Complex c = (g - d) / den_c;
    if (std::abs(std::abs(b) - 1.0) > 1e-12 || std::abs(std::abs(c) - 1.0) > 1e-12)
        throw InadmissibleConfiguration("config: companion point off the unit circle");
    if (std::abs(b - a) <= 1e-10 || std::abs(c - d) <= 1e-10)
        throw InadmissibleConfiguration("config: companion point coincides with its source");

    const Complex gg(g, 0.0);
    Complex h, j, k, l;
    try {
        h = line_intersection(b, c, gg, e);
        k = line_intersection(a, c, gg, e);
        j = line_intersection(b, d, gg, e);
        l = line_intersection(a, d, gg, e);
    } catch (const Error&) {
        throw InadmissibleConfiguration("config: degenerate or parallel lines");
    }
    for (Complex p : {h, j, k, l})
        if (std::abs(p) >= 1.0)
            throw InadmissibleConfiguration("config: intersection point outside the disk");

    ConfigReport rep{};
    rep.cfg = CollinearConfig{g, a, d, e, b, c, h, j, k, l};

    const Complex line_dir = e - gg;
    double collin = 0.0;
    for (Complex p : {h, j, k, l})
        collin = std::max(collin, std::abs(cross(line_dir, p - gg)) / std::abs(line_dir));
    rep.collinearity_residual = collin;

    const DiskPoint H(h), J(j), K(k), L(l);
    rep.rho_gap_hj_kl = std::abs(rho_disk(H, J) - rho_disk(K, L));
    rep.rho_gap_hk_jl = std::abs(rho_disk(H, K) - rho_disk(J, L));
    rep.hil_gap_hj_kl = std::abs(hilbert_disk(H, J) - hilbert_disk(K, L));
    rep.hil_gap_hk_jl = std::abs(hilbert_disk(H, K) - hilbert_disk(J, L));
    rep.vis_gap_hj_kl = std::abs(visual_angle_disk(H, J) - visual_angle_disk(K, L));
    rep.vis_gap_hk_jl = std::abs(visual_angle_disk(H, K) - visual_angle_disk(J, L));

    const auto pseudo = [](Complex p, Complex q) {
        return std::abs((p - q) / (1.0 - std::conj(q) * p));
    };
    rep.pseudo_gap_1 = std::abs(pseudo(h, j) - pseudo(k, l));
    rep.pseudo_gap_2 = std::abs(pseudo(h, k) - pseudo(j, l));
    return rep;
}

SignReport c2_disk_sign_sweep(DiskPoint z0, double t, long n, std::uint64_t seed) {
    if (n < 1) throw Error("c2_disk_sign_sweep: n < 1");

    SignReport rep{};
    rep.samples = n;
    rep.seed = seed;
    rep.constant_sign = true;
    rep.min_abs = std::numeric_limits<double>::infinity();
    for (long i = 0; i < n; ++i) {
        const double u = halton(seed + static_cast<std::uint64_t>(i), 2);
        const double v = halton(seed + static_cast<std::uint64_t>(i), 3);
        const Complex z = std::polar(0.999 * std::sqrt(u), 2.0 * kPi * v);
        const double value = implicit_c2(z0, t, z);
        if (i == 0) rep.sign = value >= 0.0 ? 1 : -1;
        else if ((value >= 0.0 ? 1 : -1) != rep.sign) rep.constant_sign = false;
        rep.min_abs = std::min(rep.min_abs, std::abs(value));
    }
    return rep;
}

}  // namespace diskgeo::oracles
