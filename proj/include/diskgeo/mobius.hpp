#pragma once

#include <functional>
#include <vector>

#include "diskgeo/geometry.hpp"

namespace diskgeo {

/// Möbius transformation z -> (az + b) / (cz + d) with ad - bc != 0.
class MobiusMap {
public:
    MobiusMap(Complex a, Complex b, Complex c, Complex d);

    static MobiusMap identity() { return MobiusMap(1.0, 0.0, 0.0, 1.0); }

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }
    Complex det() const { return a_ * d_ - b_ * c_; }

    /// Throws PoleEvaluation when cz + d vanishes.
    Complex apply(Complex z) const;

    MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

private:
    Complex a_, b_, c_, d_;
};

/// Matrix product: compose(M1, M2)(z) = M1(M2(z)).
MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2);
inline MobiusMap operator*(const MobiusMap& m1, const MobiusMap& m2) { return compose(m1, m2); }

/// Disk automorphism T_a(z) = (z - a) / (1 - conj(a) z), extended by
/// T_0 = identity. T_a(a) = 0 and T_a fixes +-a/|a|.
MobiusMap disk_automorphism(Complex a);

/// Fixed map of the unit disk onto the upper half plane,
/// z -> i (1 + z) / (1 - z); sends 0 to i.
MobiusMap cayley_to_halfplane();

/// Radial stretch f(z) = z |z|^(1/K - 1), f(0) = 0; the standard
/// K-quasiconformal self-map of the disk with |f(z)| = |z|^(1/K).
DiskPoint radial_stretch(double K, DiskPoint z);

/// D = 2^(1 - 1/K) (1 / sqrt(1 - m^2))^(1/K), the constant of the Hilbert
/// distortion bound for K-quasiregular self-maps of the disk.
double distortion_constant(double K, double m);

/// One evaluation of the distortion inequality
///   th(h(f(a), f(b)) / 4) <= D(K, m) th(h(a, b) / 4)^(1/K).
struct BoundReport {
    double h_source;  // h(a, b)
    double h_image;   // h(f(a), f(b))
    double m;         // chord offset of the source pair
    double K;
    double lhs;
    double rhs;
    double slack;     // rhs - lhs, nonnegative for a valid K-qc map
};

BoundReport check_distortion_bound(const std::function<Complex(Complex)>& f,
                                   DiskPoint a, DiskPoint b, double K);

/// One point of the sharpness sweep for f = T_w, K = 1: the quotient of the
/// two sides of the distortion inequality at the conjugate pair
/// a = T_w^{-1}(it), b = T_w^{-1}(-it).
struct SharpnessSample {
    double t;
    double m;         // = |Re(a)| for this family
    double quotient;  // lhs / rhs in (0, 1], increasing toward 1 as t -> 0
};

/// Sweep over the given t values in (0, 1), w real in (0, 1).
/// Results are sorted by decreasing t.
std::vector<SharpnessSample> sharpness_sweep(double w, std::vector<double> ts);

}  // namespace diskgeo
