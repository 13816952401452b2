#include "hypdisk/scene.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hypdisk {

bool RenderOptions::has_layer(const std::string& name) const {
    return std::find(layers.begin(), layers.end(), name) != layers.end();
}

Scene parse_scene_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid scene JSON: ") + e.what());
    }
    Scene scene;
    try {
        if (j.contains("hexagon_deg")) {
            const auto v = j.at("hexagon_deg").get<std::vector<double>>();
            if (v.size() != 6) throw Error("hexagon_deg must have 6 angles");
            std::array<double, 6> a;
            std::copy(v.begin(), v.end(), a.begin());
            scene.hexagon_deg = a;
        }
        if (j.contains("chain_deg")) {
            const auto v = j.at("chain_deg").get<std::vector<double>>();
            if (v.size() != 5 && v.size() != 6) throw Error("chain_deg must have 5 or 6 angles");
            scene.chain_deg = v;
        }
        if (j.contains("s1")) scene.s1 = j.at("s1").get<double>();
        if (j.contains("sizes")) {
            const auto v = j.at("sizes").get<std::vector<double>>();
            if (v.size() != 6) throw Error("sizes must have 6 entries");
            std::copy(v.begin(), v.end(), scene.sizes.begin());
        }
        if (j.contains("render")) {
            const auto& r = j.at("render");
            if (r.contains("width")) scene.render.width = r.at("width").get<int>();
            if (r.contains("stroke_width")) {
                scene.render.stroke_width = r.at("stroke_width").get<double>();
            }
            if (r.contains("layers")) {
                scene.render.layers = r.at("layers").get<std::vector<std::string>>();
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid scene JSON: ") + e.what());
    }
    validate_scene(scene);
    return scene;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open scene file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene_json(buf.str());
}

void validate_scene(const Scene& scene) {
    if (scene.hexagon_deg.has_value() == scene.chain_deg.has_value()) {
        throw Error("scene must contain exactly one of hexagon_deg / chain_deg");
    }
    if (scene.s1 <= 0) throw Error("s1 must be positive");
    for (double s : scene.sizes) {
        if (s <= 0) throw Error("sizes must be positive");
    }
    if (scene.render.width <= 0) throw Error("render width must be positive");
}

} // namespace hypdisk
