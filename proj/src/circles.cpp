#include "hypdisk/circles.hpp"

#include <cmath>

#include "hypdisk/mobius.hpp"

namespace hypdisk {

using complex = std::complex<double>;

HyperbolicDisk::HyperbolicDisk(PoincarePoint center, double radius)
    : center(center), radius(radius) {
    if (radius <= 0.0) {
        throw Error("hyperbolic disk radius must be positive");
    }
}

EuclideanCircle hyperbolic_disk_to_euclidean(const HyperbolicDisk& d) {
    const double rho = std::tanh(d.radius / 2.0); // Euclidean radius about 0
    const complex z0 = d.center.z();
    if (std::abs(z0) < 1e-15) {
        return {z0, rho};
    }
    // Image of |z| = rho under the isometry swapping 0 and z0. The image is a
    // circle symmetric about the line through 0 and z0; its diameter on that
    // line is the image of the two extreme points.
    const MobiusTransform t = isometry_to_zero(z0);
    const complex dir = z0 / std::abs(z0);
    const complex e1 = t.apply(rho * dir);
    const complex e2 = t.apply(-rho * dir);
    return {(e1 + e2) / 2.0, std::abs(e1 - e2) / 2.0};
}

Horodisk::Horodisk(IdealPoint base, double size) : base(base), size(size) {
    if (size <= 0.0) {
        throw Error("horodisk size must be positive");
    }
}

Horodisk horodisk_from_euclidean(complex center, double radius) {
    if (radius <= 0.0 || radius >= 1.0 ||
        std::abs(std::abs(center) + radius - 1.0) > 1e-9) {
        throw NotAHorodisk("circle is not internally tangent to the unit circle");
    }
    const IdealPoint base(std::atan2(center.imag(), center.real()));
    return Horodisk(base, 2.0 * radius / (1.0 - radius));
}

bool are_tangent(const Horodisk& h1, const Horodisk& h2, double tol) {
    const double chord2 = std::norm(h1.base.unit() - h2.base.unit());
    if (chord2 < 1e-18) {
        throw SameBasePoint("horodisks share their base point");
    }
    const double prod = h1.size * h2.size;
    return std::abs(chord2 - prod) <= tol * std::max(chord2, prod);
}

double clipped_length_ideal(const IdealPoint& a, double sa, const IdealPoint& b, double sb) {
    const double chord2 = std::norm(a.unit() - b.unit());
    if (chord2 < 1e-18) {
        throw SameBasePoint("ideal endpoints coincide");
    }
    return std::log(chord2 / (sa * sb));
}

double clipped_length_mixed(const PoincarePoint& p, const IdealPoint& a, double sa) {
    return std::log(2.0 * std::norm(p.z() - a.unit()) / (sa * (1.0 - std::norm(p.z()))));
}

SemiIdealTriangle::SemiIdealTriangle(IdealPoint ideal1, IdealPoint ideal2, PoincarePoint apex)
    : ideal1(ideal1), ideal2(ideal2), apex(apex) {
    if (angular_separation(ideal1, ideal2) <= 1e-9) {
        throw CoincidentIdealPoints("semi-ideal triangle has coincident ideal vertices");
    }
}

double semi_ideal_A(const SemiIdealTriangle& v, double s1, double s2) {
    return clipped_length_mixed(v.apex, v.ideal1, s1) +
           clipped_length_mixed(v.apex, v.ideal2, s2) -
           clipped_length_ideal(v.ideal1, s1, v.ideal2, s2);
}

} // namespace hypdisk
