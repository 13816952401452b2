#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <variant>

#include "hypdisk/models.hpp"

namespace hypdisk {

// Point of the ideal boundary, stored as an angle; the unit complex value is
// always recomputed from it.
struct IdealPoint {
    double theta = 0;

    IdealPoint() = default;
    explicit IdealPoint(double angle);

    std::complex<double> unit() const { return std::polar(1.0, theta); }
};

// Angular separation in [0, pi].
double angular_separation(const IdealPoint& a, const IdealPoint& b);

// Euclidean carrier of a Poincare geodesic: a diameter for (near-)antipodal
// endpoints, otherwise a circle orthogonal to the unit circle.
struct Diameter {
    double direction; // angle of the diameter line
};
struct OrthoCircle {
    std::complex<double> center;
    double radius;
};
using Carrier = std::variant<Diameter, OrthoCircle>;

class Geodesic {
public:
    Geodesic(IdealPoint a, IdealPoint b);

    const IdealPoint& a() const { return a_; }
    const IdealPoint& b() const { return b_; }
    const Carrier& carrier() const { return carrier_; }

    bool is_diameter() const { return std::holds_alternative<Diameter>(carrier_); }

private:
    IdealPoint a_, b_;
    Carrier carrier_;
};

Geodesic geodesic_from_ideal(IdealPoint a, IdealPoint b);

// Ideal endpoints (a, d) of the geodesic through b and c, ordered so that
// a, b, c, d occur in order along the carrier.
std::pair<IdealPoint, IdealPoint> ideal_endpoints(const PoincarePoint& b,
                                                  const PoincarePoint& c);

// Cross-ratio distance log((a-c)(b-d) / ((a-b)(c-d))). The ratio is validated
// to be real and >= 1; no silent absolute values.
double hyp_distance(const PoincarePoint& b, const PoincarePoint& c);

// Intersection strictly inside the disk, computed on Klein chords.
std::optional<PoincarePoint> intersect(const Geodesic& g1, const Geodesic& g2);

// Euclidean distance from p to the carrier is at most tol.
bool on_geodesic(const Geodesic& g, const PoincarePoint& p, double tol);

} // namespace hypdisk
