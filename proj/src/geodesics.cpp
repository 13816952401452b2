#include "hypdisk/geodesics.hpp"

#include <cmath>

namespace hypdisk {

namespace {

constexpr double kEpsSeparation = 1e-9;
constexpr double kEpsAntipodal = 1e-9;
constexpr double kTwoPi = 6.283185307179586476925286766559;

using complex = std::complex<double>;

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

Carrier make_carrier(const IdealPoint& a, const IdealPoint& b) {
    const double sep = angular_separation(a, b);
    if (std::abs(sep - M_PI) < kEpsAntipodal) {
        return Diameter{a.theta};
    }
    const complex ua = a.unit();
    const complex ub = b.unit();
    const complex c = (ua + ub) / (1.0 + (ua * std::conj(ub)).real());
    return OrthoCircle{c, std::abs(c - ua)};
}

// Intersection of the chord through two interior Klein points with the unit
// circle, as ideal angles (t < 0 side first).
std::pair<IdealPoint, IdealPoint> chord_endpoints(const KleinPoint& kb, const KleinPoint& kc) {
    const double dx = kc.x - kb.x;
    const double dy = kc.y - kb.y;
    const double qa = dx * dx + dy * dy;
    const double qb = 2.0 * (kb.x * dx + kb.y * dy);
    const double qc = kb.x * kb.x + kb.y * kb.y - 1.0;
    const double disc = std::sqrt(qb * qb - 4.0 * qa * qc);
    const double t1 = (-qb - disc) / (2.0 * qa);
    const double t2 = (-qb + disc) / (2.0 * qa);
    const auto at = [&](double t) {
        return IdealPoint(std::atan2(kb.y + t * dy, kb.x + t * dx));
    };
    return {at(t1), at(t2)};
}

} // namespace

IdealPoint::IdealPoint(double angle) : theta(wrap_angle(angle)) {}

double angular_separation(const IdealPoint& a, const IdealPoint& b) {
    double d = std::abs(wrap_angle(a.theta) - wrap_angle(b.theta));
    if (d > M_PI) d = kTwoPi - d;
    return d;
}

Geodesic::Geodesic(IdealPoint a, IdealPoint b)
    : a_(a), b_(b), carrier_(make_carrier(a, b)) {
    if (angular_separation(a, b) <= kEpsSeparation) {
        throw CoincidentIdealPoints("geodesic endpoints coincide");
    }
}

Geodesic geodesic_from_ideal(IdealPoint a, IdealPoint b) {
    return Geodesic(a, b);
}

std::pair<IdealPoint, IdealPoint> ideal_endpoints(const PoincarePoint& b,
                                                  const PoincarePoint& c) {
    if (std::abs(b.z() - c.z()) <= 1e-12) {
        throw CoincidentPoints("ideal_endpoints needs two distinct points");
    }
    // The Poincare geodesic and the Klein chord share their boundary points.
    return chord_endpoints(poincare_to_klein(b), poincare_to_klein(c));
}

double hyp_distance(const PoincarePoint& b, const PoincarePoint& c) {
    const complex zb = b.z();
    const complex zc = c.z();
    if (std::abs(zb - zc) <= 1e-12) return 0.0;
    const auto [ia, id] = ideal_endpoints(b, c);
    const complex a = ia.unit();
    const complex d = id.unit();
    const complex cr = ((a - zc) * (zb - d)) / ((a - zb) * (zc - d));
    if (std::abs(cr.imag()) >= 1e-9 * (1.0 + std::abs(cr)) || cr.real() < 1.0 - 1e-12) {
        throw NumericalInstability("cross-ratio is not real >= 1");
    }
    return std::log(std::max(cr.real(), 1.0));
}

std::optional<PoincarePoint> intersect(const Geodesic& g1, const Geodesic& g2) {
    const bool same = (angular_separation(g1.a(), g2.a()) < 1e-12 &&
                       angular_separation(g1.b(), g2.b()) < 1e-12) ||
                      (angular_separation(g1.a(), g2.b()) < 1e-12 &&
                       angular_separation(g1.b(), g2.a()) < 1e-12);
    if (same) {
        throw IdenticalGeodesics("geodesics share both ideal endpoints");
    }
    // Klein chords between the same ideal points; solve the 2x2 chord system.
    const complex p1 = g1.a().unit(), q1 = g1.b().unit();
    const complex p2 = g2.a().unit(), q2 = g2.b().unit();
    const complex d1 = q1 - p1, d2 = q2 - p2;
    const double det = d1.real() * (-d2.imag()) - (-d2.real()) * d1.imag();
    if (std::abs(det) < 1e-14) return std::nullopt;
    const double rx = p2.real() - p1.real();
    const double ry = p2.imag() - p1.imag();
    const double t = (rx * (-d2.imag()) - (-d2.real()) * ry) / det;
    const double s = (d1.real() * ry - d1.imag() * rx) / det;
    constexpr double kInside = 1e-12;
    if (t <= kInside || t >= 1.0 - kInside || s <= kInside || s >= 1.0 - kInside) {
        return std::nullopt;
    }
    const complex k = p1 + t * d1;
    return klein_to_poincare(KleinPoint(k.real(), k.imag()));
}

bool on_geodesic(const Geodesic& g, const PoincarePoint& p, double tol) {
    if (const auto* diam = std::get_if<Diameter>(&g.carrier())) {
        const complex dir = std::polar(1.0, diam->direction);
        return std::abs((p.z() * std::conj(dir)).imag()) <= tol;
    }
    const auto& oc = std::get<OrthoCircle>(g.carrier());
    return std::abs(std::abs(p.z() - oc.center) - oc.radius) <= tol;
}

} // namespace hypdisk
