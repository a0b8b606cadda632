#pragma once

#include <cstdint>
#include <random>

#include "diskgeo/geometry.hpp"

namespace diskgeo {

/// Seeded generator for the verification sweeps. The uniform doubles are
/// produced directly from the engine output so runs reproduce bit-for-bit
/// independently of the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform over the disk |z| <= cap, by rejection from the square.
    /// The cap keeps samples away from the boundary where all the metrics
    /// blow up; 0.999 matches the certified tolerances.
    DiskPoint disk_point(double cap = 0.999) {
        for (;;) {
            const Complex z(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
            if (std::abs(z) <= cap) return DiskPoint(z);
        }
    }

    /// Uniform point of the unit circle.
    Complex unit_point() {
        return std::polar(1.0, uniform(0.0, 2.0 * 3.14159265358979323846));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace diskgeo
