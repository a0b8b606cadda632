#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diskgeo/errors.hpp"

namespace diskgeo::verify {

inline constexpr std::uint64_t kDefaultSeed = 7919;
inline constexpr long kDefaultSamples = 10000;

/// Outcome of one certification sweep. A suite passes iff its worst observed
/// violation stays within its pinned tolerance.
struct SuiteResult {
    std::string suite;
    long cases = 0;
    double tolerance = 0.0;
    double max_violation = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> artifacts;

    /// Inputs of the worst observed case, for triage when a suite fails.
    /// Not part of the serialized report schema.
    std::string worst_case;

    /// Wall time of the sweep, filled by run_group.
    double duration_ms = 0.0;

    bool pass() const { return max_violation <= tolerance; }
};

// identities group ----------------------------------------------------------
// sh(h/2) = sqrt(1-m^2) sh(rho/2), residual normalized by 1 + sh(rho/2).
SuiteResult identity_hilbert_hyperbolic(std::uint64_t seed, long n);
// tan(v/2) = sqrt((1+m)/(1-m)) th(h/4).
SuiteResult identity_visual_hilbert(std::uint64_t seed, long n);
// chord construction vs closed form, relative to 1 + h.
SuiteResult oracle_hilbert_closed_form(std::uint64_t seed, long n);
// closed form vs boundary maximization (n/10 pairs, grid 1e4).
SuiteResult oracle_visual_angle(std::uint64_t seed, long n);
// two-sided Hilbert and hyperbolic equalities of the midpoint.
SuiteResult midpoint_equalities(std::uint64_t seed, long n);
// stable midpoint parameter vs its quotient form, evaluated in extended
// precision, on pairs with | |a|^2 - |b|^2 | > 1e-6.
SuiteResult midpoint_parameter(std::uint64_t seed, long n);

// ellipse group (fixed grid |z0| in {0,...,0.9} x 8 rotations x t in
// {0.25, 0.5, 1, 2}) ---------------------------------------------------------
SuiteResult ellipse_implicit_residual(std::uint64_t seed, long n);
SuiteResult ellipse_boundary_distance(std::uint64_t seed, long n);
SuiteResult ellipse_ray_bisection(std::uint64_t seed, long n);
SuiteResult ellipse_companion_sign(std::uint64_t seed, long n);

// tangency group -------------------------------------------------------------
// min/max of rho over the ellipse vs the two closed-form radii (real z0).
SuiteResult tangency_rho_extrema(std::uint64_t seed, long n);
// B_rho(z0,t) inside B_h(z0,t) inside B_rho(z0, s_circ) on sampled boundaries.
SuiteResult tangency_inclusion_chain(std::uint64_t seed, long n);
// equality of rho and h with t at the two radial contact points.
SuiteResult tangency_inscribed_contact(std::uint64_t seed, long n);
// B^2(z0,s) inside B_h(z0, rho(z0, z0+s)) on sampled boundaries.
SuiteResult tangency_euclidean_inclusion(std::uint64_t seed, long n);
// equality at the sharp point z0 + s.
SuiteResult tangency_euclidean_sharpness(std::uint64_t seed, long n);
// hyperbolic disks as Euclidean disks: rho(x, .) = M on sampled circles.
SuiteResult tangency_hyperbolic_disk(std::uint64_t seed, long n);
// |x - y| <= 2 th(h/4), equality at y = -x.
SuiteResult tangency_diameter(std::uint64_t seed, long n);

// config group (one sweep, five certified aspects) ---------------------------
std::vector<SuiteResult> config_suites(std::uint64_t seed, long n);

// distortion group ------------------------------------------------------------
SuiteResult distortion_bound(std::uint64_t seed, long n);
SuiteResult distortion_collinear_cases(std::uint64_t seed, long n);
SuiteResult distortion_sharpness(std::uint64_t seed, long n);

// polygon group ---------------------------------------------------------------
SuiteResult polygon_square_diameter(std::uint64_t seed, long n);
SuiteResult polygon_triangle_inequality(std::uint64_t seed, long n);

/// The verify front-end groups: identities, ellipse, tangency, config,
/// distortion, polygon.
std::vector<std::string> group_names();

/// Runs one group (or "all"); throws UnknownSuite for anything else.
std::vector<SuiteResult> run_group(const std::string& group, std::uint64_t seed, long n);

}  // namespace diskgeo::verify
