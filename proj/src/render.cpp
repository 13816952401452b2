#include "hypdisk/render.hpp"

#include <cmath>
#include <cstdio>

namespace hypdisk {

namespace {

using complex = std::complex<double>;

constexpr double kScale = 480.0;
constexpr double kCenter = 500.0;

double px(double x) { return kCenter + kScale * x; }
double py(double y) { return kCenter - kScale * y; } // y up

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v + 0.0); // avoid -0.0000
    return buf;
}

std::string circle_el(complex center, double radius, const std::string& style) {
    return "  <circle cx=\"" + num(px(center.real())) + "\" cy=\"" + num(py(center.imag())) +
           "\" r=\"" + num(kScale * radius) + "\" " + style + "/>\n";
}

std::string line_el(complex a, complex b, const std::string& style) {
    return "  <line x1=\"" + num(px(a.real())) + "\" y1=\"" + num(py(a.imag())) +
           "\" x2=\"" + num(px(b.real())) + "\" y2=\"" + num(py(b.imag())) + "\" " + style +
           "/>\n";
}

// Arc of the carrier circle from a to b; geodesic arcs inside the disk are
// always the minor arc.
std::string arc_el(const OrthoCircle& oc, complex a, complex b, const std::string& style) {
    const complex va = a - oc.center;
    const complex vb = b - oc.center;
    const double cross = va.real() * vb.imag() - va.imag() * vb.real();
    // Counter-clockwise in math coordinates is clockwise on the flipped axis.
    const char* sweep = cross > 0 ? "1" : "0";
    const double r = kScale * oc.radius;
    return "  <path d=\"M " + num(px(a.real())) + " " + num(py(a.imag())) + " A " + num(r) +
           " " + num(r) + " 0 0 " + sweep + " " + num(px(b.real())) + " " +
           num(py(b.imag())) + "\" fill=\"none\" " + style + "/>\n";
}

std::string geodesic_el(const Geodesic& g, const std::string& style) {
    if (g.is_diameter()) {
        return line_el(g.a().unit(), g.b().unit(), style);
    }
    return arc_el(std::get<OrthoCircle>(g.carrier()), g.a().unit(), g.b().unit(), style);
}

// Segment of the geodesic through both points (sub-arc of the carrier).
std::string segment_el(const PoincarePoint& a, const PoincarePoint& b,
                       const std::string& style) {
    if (std::abs(a.z() - b.z()) < 1e-9) return "";
    const auto [ia, ib] = ideal_endpoints(a, b);
    const Geodesic g(ia, ib);
    if (g.is_diameter()) {
        return line_el(a.z(), b.z(), style);
    }
    return arc_el(std::get<OrthoCircle>(g.carrier()), a.z(), b.z(), style);
}

} // namespace

std::string render_svg(const Scene& scene) {
    validate_scene(scene);
    const RenderOptions& opt = scene.render;
    const std::string stroke = num(opt.stroke_width);

    std::array<double, 6> deg;
    std::array<double, 6> rad;
    const CircleChain* chain_ptr = nullptr;
    CircleChain chain;
    if (scene.hexagon_deg) {
        deg = *scene.hexagon_deg;
    } else {
        if (scene.chain_deg->size() != 6) {
            throw Error("render needs six chain angles (solve closure first)");
        }
        for (int k = 0; k < 6; ++k) deg[k] = (*scene.chain_deg)[k];
    }
    for (int k = 0; k < 6; ++k) rad[k] = deg[k] * M_PI / 180.0;
    if (scene.chain_deg) {
        chain = build_tangent_chain(rad, scene.s1);
        chain_ptr = &chain;
    }
    std::array<IdealPoint, 6> v;
    for (int k = 0; k < 6; ++k) v[k] = IdealPoint(rad[k]);
    const IdealHexagon hex(v);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(opt.width) + "\" height=\"" + std::to_string(opt.width) +
           "\" viewBox=\"0 0 1000 1000\">\n";
    svg += "  <rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

    if (opt.has_layer("unit")) {
        svg += circle_el(0.0, 1.0,
                         "fill=\"none\" stroke=\"black\" stroke-width=\"" + stroke + "\"");
    }
    if (opt.has_layer("chain")) {
        const std::string style =
            "fill=\"none\" stroke=\"#2060c0\" stroke-width=\"" + stroke + "\"";
        if (chain_ptr) {
            for (int k = 0; k < 6; ++k) {
                const Horodisk h(chain_ptr->bases[k], chain_ptr->sizes[k]);
                svg += circle_el(h.euclidean_center(), h.euclidean_radius(), style);
            }
        } else {
            for (int k = 0; k < 6; ++k) {
                const Horodisk h(v[k], scene.sizes[k]);
                svg += circle_el(h.euclidean_center(), h.euclidean_radius(), style);
            }
        }
    }
    const auto diagonals = main_diagonals(hex);
    if (opt.has_layer("klein")) {
        const std::string style = "stroke=\"#808080\" stroke-width=\"" + stroke + "\"";
        for (const auto& d : diagonals) {
            svg += line_el(d.a().unit(), d.b().unit(), style);
        }
    }
    if (opt.has_layer("poincare")) {
        const std::string style = "stroke=\"black\" stroke-width=\"" + stroke + "\"";
        for (const auto& d : diagonals) {
            svg += geodesic_el(d, style);
        }
    }
    if (opt.has_layer("triangle")) {
        const SmallTriangle t = small_triangle(hex);
        if (!t.degenerate) {
            const std::string style = "stroke=\"#d02020\" stroke-width=\"" + stroke + "\"";
            for (int k = 0; k < 3; ++k) {
                svg += segment_el(t.q[k], t.q[(k + 1) % 3], style);
            }
        } else {
            svg += circle_el(t.q[0].z(), 0.008, "fill=\"#d02020\" stroke=\"none\"");
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace hypdisk
