#include "hypdisk/models.hpp"

#include <cmath>

namespace hypdisk {

namespace {
constexpr double kMembershipMargin = 1e-14;

void require_in_disk(double x, double y) {
    if (x * x + y * y >= 1.0 - kMembershipMargin) {
        throw NotInDisk("point is not inside the open unit disk");
    }
}
} // namespace

KleinPoint::KleinPoint(double x, double y) : x(x), y(y) {
    require_in_disk(x, y);
}

PoincarePoint::PoincarePoint(double x, double y) : x(x), y(y) {
    require_in_disk(x, y);
}

HemispherePoint::HemispherePoint(double x, double y, double z) : x(x), y(y), z(z) {
    const double n2 = x * x + y * y + z * z;
    if (std::abs(n2 - 1.0) > 1e-9 || z <= 0.0) {
        throw NotInDisk("point is not on the open northern hemisphere");
    }
    const double n = std::sqrt(n2);
    this->x /= n;
    this->y /= n;
    this->z /= n;
}

KleinPoint f(const HemispherePoint& h) {
    return KleinPoint(h.x, h.y);
}

HemispherePoint f_inv(const KleinPoint& k) {
    return HemispherePoint(k.x, k.y, std::sqrt(1.0 - k.x * k.x - k.y * k.y));
}

PoincarePoint g(const HemispherePoint& h) {
    return PoincarePoint(h.x / (1.0 + h.z), h.y / (1.0 + h.z));
}

HemispherePoint g_inv(const PoincarePoint& p) {
    const double r2 = p.x * p.x + p.y * p.y;
    const double s = 1.0 / (1.0 + r2);
    return HemispherePoint(2.0 * p.x * s, 2.0 * p.y * s, (1.0 - r2) * s);
}

PoincarePoint klein_to_poincare(const KleinPoint& k) {
    const double r2 = k.x * k.x + k.y * k.y;
    const double den = 1.0 + std::sqrt(1.0 - r2);
    return PoincarePoint(k.x / den, k.y / den);
}

KleinPoint poincare_to_klein(const PoincarePoint& p) {
    const double den = 1.0 + p.x * p.x + p.y * p.y;
    return KleinPoint(2.0 * p.x / den, 2.0 * p.y / den);
}

} // namespace hypdisk
