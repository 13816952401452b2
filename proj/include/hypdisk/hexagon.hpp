#pragma once

#include <array>
#include <optional>

#include "hypdisk/circles.hpp"
#include "hypdisk/mobius.hpp"

namespace hypdisk {

// Six ideal vertices in strictly increasing cyclic angular order starting
// from v1 (any rotation of the labels is accepted, silent sorting is not).
class IdealHexagon {
public:
    explicit IdealHexagon(const std::array<IdealPoint, 6>& vertices);

    const IdealPoint& vertex(int k) const { return vertices_[k % 6]; } // k >= 0
    const std::array<IdealPoint, 6>& vertices() const { return vertices_; }

private:
    std::array<IdealPoint, 6> vertices_;
};

using SizeVector = std::array<double, 6>;
inline constexpr SizeVector kUnitSizes{1, 1, 1, 1, 1, 1};

// Sum over sides k = 1..6 of (-1)^{k+1} times the horocycle-clipped length of
// the side v_k v_{k+1}; independent of the size vector.
double alternating_perimeter(const IdealHexagon& p, const SizeVector& sizes = kUnitSizes);

// Pairwise intersections of the three main diagonals.
struct SmallTriangle {
    std::array<PoincarePoint, 3> q; // d1^d2, d2^d3, d3^d1
    bool degenerate;                // all three coincide
};

std::array<Geodesic, 3> main_diagonals(const IdealHexagon& p);
SmallTriangle small_triangle(const IdealHexagon& p);
double triangle_perimeter(const SmallTriangle& t);

// | |A(P)| - 2 perim(T_P) |, small for every hexagon.
double theorem3_residual(const IdealHexagon& p);

// Sum A(Y_k) - sum A(G_k) over the six semi-ideal triangles cut off by the
// diagonals; identically zero.
double trisum_residual(const IdealHexagon& p, const SizeVector& sizes);

bool check_triple_point(const IdealHexagon& p, double tol);

// Fixed point of the involution swapping opposite vertices, when the hexagon
// admits one.
std::optional<PoincarePoint> point_reflection_symmetry(const IdealHexagon& p, double tol);

// Chain of six consecutively tangent horodisks; the sizes are propagated
// from s1 by the tangency law, and closure_residual = s7/s1 measures whether
// the last circle closes up against the first.
struct CircleChain {
    std::array<IdealPoint, 6> bases;
    std::array<double, 6> sizes;
    double closure_residual;
};

CircleChain build_tangent_chain(const std::array<double, 6>& thetas, double s1);

// Finds theta6 in [lo, hi] making the chain close (residual 1), by bisection
// on the log-residual. Requires a sign change over the arc.
std::optional<double> solve_closure(const std::array<double, 5>& thetas5, double s1,
                                    double lo, double hi);

IdealHexagon chain_to_hexagon(const CircleChain& c);

struct SevenCirclesReport {
    double closure_residual;
    double alternating_perimeter;
    double triangle_perimeter;
    bool triple_point;
    std::optional<PoincarePoint> symmetry_fixed_point;
    bool pass;
};

SevenCirclesReport verify_seven_circles(const CircleChain& c, double tol);

} // namespace hypdisk
