#pragma once

#include <complex>

#include "hypdisk/geodesics.hpp"

namespace hypdisk {

// Disk of hyperbolic center/radius; the Euclidean picture is a different
// circle inside the unit disk.
struct HyperbolicDisk {
    PoincarePoint center;
    double radius; // hyperbolic

    HyperbolicDisk(PoincarePoint center, double radius);
};

struct EuclideanCircle {
    std::complex<double> center;
    double radius;
};

EuclideanCircle hyperbolic_disk_to_euclidean(const HyperbolicDisk& d);

// Horodisk at an ideal base point with size coordinate s > 0; the Euclidean
// realization has radius r = s/(s+2) and center (1-r) * base.
// Two horodisks at bases u, v are tangent exactly when |u - v|^2 = s_u * s_v.
struct Horodisk {
    IdealPoint base;
    double size;

    Horodisk(IdealPoint base, double size);

    double euclidean_radius() const { return size / (size + 2.0); }
    std::complex<double> euclidean_center() const {
        return (1.0 - euclidean_radius()) * base.unit();
    }
};

Horodisk horodisk_from_euclidean(std::complex<double> center, double radius);

bool are_tangent(const Horodisk& h1, const Horodisk& h2, double tol);

// Length of the side between two ideal points left after removing the two
// horodisks: log(|u_a - u_b|^2 / (s_a * s_b)). Signed; negative when the
// horodisks overlap.
double clipped_length_ideal(const IdealPoint& a, double sa, const IdealPoint& b, double sb);

// Same for a side from an interior point to an ideal point, clipped only at
// the ideal end: log(2 |p - u_a|^2 / (s_a (1 - |p|^2))).
double clipped_length_mixed(const PoincarePoint& p, const IdealPoint& a, double sa);

// Triangle with two ideal vertices and one interior apex; side 3 joins the
// ideal vertices.
struct SemiIdealTriangle {
    IdealPoint ideal1, ideal2;
    PoincarePoint apex;

    SemiIdealTriangle(IdealPoint ideal1, IdealPoint ideal2, PoincarePoint apex);
};

// A(V) = L1' + L2' - L3'; independent of the horodisk sizes.
double semi_ideal_A(const SemiIdealTriangle& v, double s1, double s2);

} // namespace hypdisk
