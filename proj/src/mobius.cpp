#include "hypdisk/mobius.hpp"

#include <cmath>

namespace hypdisk {

MobiusTransform::MobiusTransform(complex a, complex b, complex c, complex d)
    : a_(a), b_(b), c_(c), d_(d) {
    const complex det = a_ * d_ - b_ * c_;
    if (std::abs(det) <= kEpsDegenerate) {
        throw DegenerateTransform("Mobius coefficients have vanishing determinant");
    }
    const complex s = std::sqrt(det);
    a_ /= s;
    b_ /= s;
    c_ /= s;
    d_ /= s;
}

complex MobiusTransform::apply(complex z) const {
    const complex den = c_ * z + d_;
    if (std::abs(den) <= kEpsDegenerate) {
        throw PoleError("evaluation at the pole of the transform");
    }
    return (a_ * z + b_) / den;
}

MobiusTransform MobiusTransform::inverse() const {
    return MobiusTransform(d_, -b_, -c_, a_);
}

MobiusTransform compose(const MobiusTransform& t1, const MobiusTransform& t2) {
    return MobiusTransform(t1.a() * t2.a() + t1.b() * t2.c(),
                           t1.a() * t2.b() + t1.b() * t2.d(),
                           t1.c() * t2.a() + t1.d() * t2.c(),
                           t1.c() * t2.b() + t1.d() * t2.d());
}

bool approx_equal(const MobiusTransform& t1, const MobiusTransform& t2, double tol) {
    auto close = [tol](complex x, complex y) { return std::abs(x - y) < tol; };
    const bool plus = close(t1.a(), t2.a()) && close(t1.b(), t2.b()) &&
                      close(t1.c(), t2.c()) && close(t1.d(), t2.d());
    const bool minus = close(t1.a(), -t2.a()) && close(t1.b(), -t2.b()) &&
                       close(t1.c(), -t2.c()) && close(t1.d(), -t2.d());
    return plus || minus;
}

bool is_disk_isometry(const MobiusTransform& t, double tol) {
    // Normalized disk automorphisms lie in SU(1,1): the second row is the
    // conjugate of the first (up to the shared sign, which cancels here).
    return std::abs(t.d() - std::conj(t.a())) < tol &&
           std::abs(t.c() - std::conj(t.b())) < tol;
}

MobiusTransform isometry_to_zero(complex p) {
    if (std::abs(p) >= 1.0) {
        throw NotInDisk("point is not inside the unit disk");
    }
    return MobiusTransform(1.0, -p, std::conj(p), -1.0);
}

MobiusTransform rotation(double theta) {
    const complex h = std::polar(1.0, theta / 2.0);
    return MobiusTransform(h, 0.0, 0.0, std::conj(h));
}

MobiusTransform point_reflection(complex p) {
    const MobiusTransform j = isometry_to_zero(p);
    const MobiusTransform neg(-1.0, 0.0, 0.0, 1.0);
    // j is an involution, so j^{-1} = j.
    return compose(j, compose(neg, j));
}

} // namespace hypdisk
