#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypdisk/hexagon.hpp"

namespace hypdisk {

struct RenderOptions {
    int width = 1000;
    double stroke_width = 2.0;
    // Layer toggles: unit, chain, klein, poincare, triangle.
    std::vector<std::string> layers = {"unit", "chain", "klein", "poincare", "triangle"};

    bool has_layer(const std::string& name) const;
};

// One figure to verify or draw: exactly one of hexagon / chain. Angles are
// stored in degrees; chains carry 5 angles (closure to be solved) or 6.
struct Scene {
    std::optional<std::array<double, 6>> hexagon_deg;
    std::optional<std::vector<double>> chain_deg;
    double s1 = 1.0;
    SizeVector sizes = kUnitSizes;
    RenderOptions render;
};

// Throws Error on malformed input; field names are normative.
Scene load_scene(const std::string& path);
Scene parse_scene_json(const std::string& text);

void validate_scene(const Scene& scene);

} // namespace hypdisk
