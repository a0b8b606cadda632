#include "diskgeo/mobius.hpp"

#include <algorithm>
#include <cmath>

#include "diskgeo/metrics.hpp"

namespace diskgeo {

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(c) || !is_finite(d))
        throw InvalidPoint("MobiusMap: non-finite coefficient");
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (std::abs(det()) <= 1e-14 * scale * scale)
        throw SingularMap("MobiusMap: vanishing determinant");
}

Complex MobiusMap::apply(Complex z) const {
    const Complex den = c_ * z + d_;
    const double den_scale = std::abs(c_) * std::abs(z) + std::abs(d_);
    if (std::abs(den) <= 1e-14 * den_scale)
        throw PoleEvaluation("MobiusMap::apply: evaluation at pole");
    return (a_ * z + b_) / den;
}

MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2) {
    return MobiusMap(m1.a() * m2.a() + m1.b() * m2.c(),
                     m1.a() * m2.b() + m1.b() * m2.d(),
                     m1.c() * m2.a() + m1.d() * m2.c(),
                     m1.c() * m2.b() + m1.d() * m2.d());
}

MobiusMap disk_automorphism(Complex a) {
    if (!is_finite(a) || std::abs(a) >= 1.0)
        throw OutsideDisk("disk_automorphism: |a| >= 1");
    return MobiusMap(1.0, -a, -std::conj(a), 1.0);
}

MobiusMap cayley_to_halfplane() {
    const Complex i(0.0, 1.0);
    return MobiusMap(i, i, -1.0, 1.0);
}

DiskPoint radial_stretch(double K, DiskPoint z) {
    if (!(K >= 1.0)) throw InvalidDilatation("radial_stretch: K < 1");
    const double r = z.modulus();
    if (r == 0.0) return z;
    return DiskPoint(z.value() * std::pow(r, 1.0 / K - 1.0));
}

double distortion_constant(double K, double m) {
    if (!(K >= 1.0)) throw InvalidDilatation("distortion_constant: K < 1");
    if (!(m >= 0.0 && m < 1.0)) throw InvalidOffset("distortion_constant: m outside [0, 1)");
    return std::pow(2.0, 1.0 - 1.0 / K) * std::pow((1.0 - m) * (1.0 + m), -0.5 / K);
}

BoundReport check_distortion_bound(const std::function<Complex(Complex)>& f,
                                   DiskPoint a, DiskPoint b, double K) {
    if (std::abs(a.value() - b.value()) <= kCoincidentTol)
        throw CoincidentPoints("check_distortion_bound: a = b");
    const DiskPoint fa(f(a.value()));
    const DiskPoint fb(f(b.value()));
    if (std::abs(fa.value() - fb.value()) <= kCoincidentTol)
        throw DegenerateImage("check_distortion_bound: f(a) = f(b)");

    BoundReport rep{};
    rep.K = K;
    rep.m = chord_offset(a, b);
    rep.h_source = hilbert_disk(a, b);
    rep.h_image = hilbert_disk(fa, fb);
    rep.lhs = std::tanh(rep.h_image / 4.0);
    rep.rhs = distortion_constant(K, rep.m) * std::pow(std::tanh(rep.h_source / 4.0), 1.0 / K);
    rep.slack = rep.rhs - rep.lhs;
    return rep;
}

std::vector<SharpnessSample> sharpness_sweep(double w, std::vector<double> ts) {
    if (!(w > 0.0 && w < 1.0)) throw Error("sharpness_sweep: w outside (0, 1)");
    for (double t : ts)
        if (!(t > 0.0 && t < 1.0)) throw Error("sharpness_sweep: t outside (0, 1)");
    std::sort(ts.begin(), ts.end(), std::greater<double>());

    const MobiusMap inv = disk_automorphism(w).inverse();
    const Complex i(0.0, 1.0);

    std::vector<SharpnessSample> out;
    out.reserve(ts.size());
    for (double t : ts) {
        const DiskPoint a(inv.apply(i * t));
        const DiskPoint b(inv.apply(-i * t));
        const double m = chord_offset(a, b);
        // For this conjugate-symmetric family the chord is vertical,
        // so m must equal |Re(a)|.
        if (std::abs(m - std::abs(a.value().real())) > 1e-12)
            throw Error("sharpness_sweep: offset does not match |Re(a)|");

        const double lhs = std::tanh(hilbert_disk(DiskPoint(i * t), DiskPoint(-i * t)) / 4.0);
        const double rhs = distortion_constant(1.0, m) * std::tanh(hilbert_disk(a, b) / 4.0);
        out.push_back(SharpnessSample{t, m, lhs / rhs});
    }
    return out;
}

}  // namespace diskgeo
