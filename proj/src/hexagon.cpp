#include "hypdisk/hexagon.hpp"

#include <cmath>

namespace hypdisk {

using complex = std::complex<double>;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Gap theta_next - theta in (0, 2pi).
double cyclic_gap(double theta, double theta_next) {
    double d = std::fmod(theta_next - theta, kTwoPi);
    if (d <= 0) d += kTwoPi;
    return d;
}

template <std::size_t N>
void require_cyclic(const std::array<double, N>& thetas) {
    double total = 0;
    for (std::size_t k = 0; k < N; ++k) {
        const double gap = cyclic_gap(thetas[k], thetas[(k + 1) % N]);
        if (gap <= 1e-9 || gap >= kTwoPi - 1e-9) {
            throw InvalidAngles("angles are not pairwise separated");
        }
        total += gap;
    }
    // A strictly increasing cyclic sequence wraps around exactly once.
    if (std::abs(total - kTwoPi) > 1e-6) {
        throw InvalidAngles("angles are not in strictly increasing cyclic order");
    }
}

// Matrix of the map sending (z1, z2, z3) to (0, 1, infinity).
MobiusTransform to_standard_triple(complex z1, complex z2, complex z3) {
    return MobiusTransform(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1));
}

std::optional<complex> interior_fixed_point(const MobiusTransform& m) {
    const complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    if (std::abs(c) < 1e-12) {
        if (std::abs(d - a) < 1e-12) return std::nullopt;
        const complex z = b / (d - a);
        return std::abs(z) < 1.0 ? std::optional<complex>(z) : std::nullopt;
    }
    const complex disc = std::sqrt((d - a) * (d - a) + 4.0 * c * b);
    const complex z1 = (a - d + disc) / (2.0 * c);
    const complex z2 = (a - d - disc) / (2.0 * c);
    if (std::abs(z1) < 1.0) return z1;
    if (std::abs(z2) < 1.0) return z2;
    return std::nullopt;
}

} // namespace

IdealHexagon::IdealHexagon(const std::array<IdealPoint, 6>& vertices) : vertices_(vertices) {
    std::array<double, 6> thetas;
    for (int k = 0; k < 6; ++k) thetas[k] = vertices[k].theta;
    require_cyclic(thetas);
}

double alternating_perimeter(const IdealHexagon& p, const SizeVector& sizes) {
    double total = 0;
    for (int k = 0; k < 6; ++k) {
        const double term = clipped_length_ideal(p.vertex(k), sizes[k],
                                                 p.vertex(k + 1), sizes[(k + 1) % 6]);
        total += (k % 2 == 0) ? term : -term;
    }
    return total;
}

std::array<Geodesic, 3> main_diagonals(const IdealHexagon& p) {
    return {Geodesic(p.vertex(0), p.vertex(3)),
            Geodesic(p.vertex(1), p.vertex(4)),
            Geodesic(p.vertex(2), p.vertex(5))};
}

SmallTriangle small_triangle(const IdealHexagon& p) {
    const auto d = main_diagonals(p);
    std::array<PoincarePoint, 3> q;
    for (int k = 0; k < 3; ++k) {
        const auto pt = intersect(d[k], d[(k + 1) % 3]);
        if (!pt) {
            throw InternalError("main diagonals fail to intersect inside the disk");
        }
        q[k] = *pt;
    }
    const double spread = std::max({std::abs(q[0].z() - q[1].z()),
                                    std::abs(q[1].z() - q[2].z()),
                                    std::abs(q[2].z() - q[0].z())});
    return SmallTriangle{q, spread < 1e-9};
}

double triangle_perimeter(const SmallTriangle& t) {
    if (t.degenerate) return 0.0;
    return hyp_distance(t.q[0], t.q[1]) + hyp_distance(t.q[1], t.q[2]) +
           hyp_distance(t.q[2], t.q[0]);
}

double theorem3_residual(const IdealHexagon& p) {
    return std::abs(std::abs(alternating_perimeter(p)) -
                    2.0 * triangle_perimeter(small_triangle(p)));
}

double trisum_residual(const IdealHexagon& p, const SizeVector& sizes) {
    const SmallTriangle t = small_triangle(p);
    if (t.degenerate) {
        throw DegenerateTriangle("diagonals are concurrent; the six triangles collapse");
    }
    // Apex q_k is the intersection of diagonals d_k and d_{k+1}; the yellow
    // triangle at q_k sits on side v_k v_{k+1}, the green one on the opposite
    // side v_{k+3} v_{k+4}.
    double total = 0;
    for (int k = 0; k < 3; ++k) {
        const SemiIdealTriangle y(p.vertex(k), p.vertex(k + 1), t.q[k]);
        const SemiIdealTriangle g(p.vertex(k + 3), p.vertex(k + 4), t.q[k]);
        total += semi_ideal_A(y, sizes[k], sizes[(k + 1) % 6]) -
                 semi_ideal_A(g, sizes[(k + 3) % 6], sizes[(k + 4) % 6]);
    }
    return total;
}

bool check_triple_point(const IdealHexagon& p, double tol) {
    return triangle_perimeter(small_triangle(p)) < tol;
}

std::optional<PoincarePoint> point_reflection_symmetry(const IdealHexagon& p, double tol) {
    const complex u1 = p.vertex(0).unit(), u2 = p.vertex(1).unit(), u3 = p.vertex(2).unit();
    const complex u4 = p.vertex(3).unit(), u5 = p.vertex(4).unit(), u6 = p.vertex(5).unit();
    const MobiusTransform s1 = to_standard_triple(u1, u2, u3);
    const MobiusTransform s2 = to_standard_triple(u4, u5, u6);
    const MobiusTransform m = compose(s2.inverse(), s1);
    if (!is_disk_isometry(m, 1e-8)) return std::nullopt;
    // Involution and vertex swap.
    if (!approx_equal(compose(m, m), MobiusTransform::identity(), std::max(tol, 1e-10))) {
        return std::nullopt;
    }
    if (std::abs(m.apply(u4) - u1) > tol || std::abs(m.apply(u5) - u2) > tol ||
        std::abs(m.apply(u6) - u3) > tol) {
        return std::nullopt;
    }
    const auto fp = interior_fixed_point(m);
    if (!fp) return std::nullopt;
    return PoincarePoint(*fp);
}

CircleChain build_tangent_chain(const std::array<double, 6>& thetas, double s1) {
    require_cyclic(thetas);
    if (s1 <= 0.0) {
        throw InvalidAngles("initial size must be positive");
    }
    CircleChain c;
    for (int k = 0; k < 6; ++k) c.bases[k] = IdealPoint(thetas[k]);
    c.sizes[0] = s1;
    for (int k = 0; k < 5; ++k) {
        c.sizes[k + 1] = std::norm(c.bases[k].unit() - c.bases[k + 1].unit()) / c.sizes[k];
    }
    const double s7 = std::norm(c.bases[5].unit() - c.bases[0].unit()) / c.sizes[5];
    c.closure_residual = s7 / s1;
    return c;
}

std::optional<double> solve_closure(const std::array<double, 5>& thetas5, double s1,
                                    double lo, double hi) {
    require_cyclic(thetas5);
    const double arc_end = thetas5[0] + kTwoPi;
    // Normalize the search arc to sit after theta5 on the unwrapped circle.
    auto unwrap = [&](double t) {
        while (t <= thetas5[4]) t += kTwoPi;
        return t;
    };
    lo = unwrap(lo);
    hi = unwrap(hi);
    if (!(lo < hi) || hi >= arc_end - 1e-9 || lo <= thetas5[4] + 1e-9) {
        throw InvalidArc("search arc must lie strictly between theta5 and theta1");
    }
    auto log_residual = [&](double theta6) {
        const std::array<double, 6> thetas{thetas5[0], thetas5[1], thetas5[2],
                                           thetas5[3], thetas5[4], theta6};
        return std::log(build_tangent_chain(thetas, s1).closure_residual);
    };
    double flo = log_residual(lo);
    double fhi = log_residual(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) return std::nullopt;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = (lo + hi) / 2.0;
        const double fmid = log_residual(mid);
        if (std::abs(fmid) < 1e-13 || (hi - lo) < 1e-15) {
            return mid;
        }
        if ((fmid > 0) == (flo > 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2.0;
}

IdealHexagon chain_to_hexagon(const CircleChain& c) {
    return IdealHexagon(c.bases);
}

SevenCirclesReport verify_seven_circles(const CircleChain& c, double tol) {
    SevenCirclesReport r{};
    const IdealHexagon hex = chain_to_hexagon(c);
    r.closure_residual = c.closure_residual;
    r.alternating_perimeter = alternating_perimeter(hex, c.sizes);
    r.triangle_perimeter = triangle_perimeter(small_triangle(hex));
    r.triple_point = r.triangle_perimeter < tol;
    r.symmetry_fixed_point = point_reflection_symmetry(hex, tol);
    const bool closed = std::abs(r.closure_residual - 1.0) < tol;
    r.pass = closed && std::abs(r.alternating_perimeter) < tol && r.triple_point &&
             r.symmetry_fixed_point.has_value();
    return r;
}

} // namespace hypdisk
