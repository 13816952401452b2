#include "hypdisk/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace hypdisk {

namespace {

IdealHexagon hexagon_from_degrees(const std::array<double, 6>& angles_deg) {
    std::array<IdealPoint, 6> v;
    for (int k = 0; k < 6; ++k) v[k] = IdealPoint(angles_deg[k] * M_PI / 180.0);
    return IdealHexagon(v);
}

void add_hexagon_body(Report& r, const IdealHexagon& hex, const SizeVector& sizes,
                      double tol) {
    const double ap = alternating_perimeter(hex, sizes);
    const SmallTriangle t = small_triangle(hex);
    const double perim = triangle_perimeter(t);
    r.add("alternating_perimeter", ap);
    r.add("abs_alternating_perimeter", std::abs(ap));
    r.add("triangle_perimeter", perim);
    r.add("triple_point", check_triple_point(hex, tol) ? "true" : "false");
    const auto fp = point_reflection_symmetry(hex, tol);
    if (fp) {
        r.add("symmetry_fixed_point_x", fp->x);
        r.add("symmetry_fixed_point_y", fp->y);
    } else {
        r.add("symmetry_fixed_point", "none");
    }
    r.add("theorem3_residual", theorem3_residual(hex));
    if (t.degenerate) {
        r.add("trisum_residual", "n/a");
    } else {
        r.add("trisum_residual", trisum_residual(hex, sizes));
    }
}

} // namespace

void Report::add(const std::string& key, const std::string& value) {
    entries.emplace_back(key, value);
}

void Report::add(const std::string& key, double value) {
    entries.emplace_back(key, format_number(value));
}

std::string Report::text() const {
    std::string out;
    for (const auto& [k, v] : entries) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

std::string Report::json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : entries) j[k] = v;
    return j.dump(2) + "\n";
}

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    return buf;
}

Report hexagon_report(const std::array<double, 6>& angles_deg, const SizeVector& sizes,
                      double tol) {
    Report r;
    for (int k = 0; k < 6; ++k) {
        r.add("angle_deg_" + std::to_string(k + 1), angles_deg[k]);
    }
    for (int k = 0; k < 6; ++k) {
        r.add("size_" + std::to_string(k + 1), sizes[k]);
    }
    r.add("tol", tol);
    add_hexagon_body(r, hexagon_from_degrees(angles_deg), sizes, tol);
    return r;
}

Report chain_report(const std::array<double, 6>& angles_deg, double s1, double tol) {
    std::array<double, 6> rad;
    for (int k = 0; k < 6; ++k) rad[k] = angles_deg[k] * M_PI / 180.0;
    const CircleChain chain = build_tangent_chain(rad, s1);
    const auto verdict = verify_seven_circles(chain, tol);

    Report r;
    for (int k = 0; k < 6; ++k) {
        r.add("angle_deg_" + std::to_string(k + 1), angles_deg[k]);
    }
    for (int k = 0; k < 6; ++k) {
        r.add("size_" + std::to_string(k + 1), chain.sizes[k]);
    }
    r.add("tol", tol);
    r.add("closure_residual", verdict.closure_residual);
    add_hexagon_body(r, chain_to_hexagon(chain), chain.sizes, tol);
    r.add("verdict", verdict.pass ? "PASS" : "FAIL");
    return r;
}

} // namespace hypdisk
