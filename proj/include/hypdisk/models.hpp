#pragma once

#include <complex>

#include "hypdisk/errors.hpp"

namespace hypdisk {

// Point of the Klein disk model (straight chords are lines).
struct KleinPoint {
    double x = 0, y = 0;

    KleinPoint() = default;
    KleinPoint(double x, double y);
};

// Point of the Poincare disk model (lines are diameters or arcs orthogonal
// to the unit circle).
struct PoincarePoint {
    double x = 0, y = 0;

    PoincarePoint() = default;
    PoincarePoint(double x, double y);
    explicit PoincarePoint(std::complex<double> z) : PoincarePoint(z.real(), z.imag()) {}

    std::complex<double> z() const { return {x, y}; }
};

// Point of the open northern unit hemisphere.
struct HemispherePoint {
    double x = 0, y = 0, z = 1;

    HemispherePoint() = default;
    HemispherePoint(double x, double y, double z);
};

// Vertical projection and its inverse (Hemisphere <-> Klein).
KleinPoint f(const HemispherePoint& h);
HemispherePoint f_inv(const KleinPoint& k);

// Stereographic projection from the south pole and its inverse
// (Hemisphere <-> Poincare).
PoincarePoint g(const HemispherePoint& h);
HemispherePoint g_inv(const PoincarePoint& p);

// The compositions g o f_inv and f o g_inv.
PoincarePoint klein_to_poincare(const KleinPoint& k);
KleinPoint poincare_to_klein(const PoincarePoint& p);

} // namespace hypdisk
