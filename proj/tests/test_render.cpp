#include <doctest.h>

#include <string>

#include "hypdisk/render.hpp"

using namespace hypdisk;

namespace {

int count_occurrences(const std::string& s, const std::string& needle) {
    int n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

Scene regular_chain_scene() {
    Scene s;
    s.chain_deg = std::vector<double>{0, 60, 120, 180, 240, 300};
    s.s1 = 1.0;
    return s;
}

} // namespace

TEST_CASE("regular chain figure: six circles and three diameters") {
    const std::string svg = render_svg(regular_chain_scene());
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
    // unit circle + 6 chain circles + degenerate-triangle marker
    CHECK(count_occurrences(svg, "<circle") == 8);
    // 3 klein chords + 3 poincare diameters (the diagonals are diameters here)
    CHECK(count_occurrences(svg, "<line") == 6);
}

TEST_CASE("layer toggles") {
    Scene s = regular_chain_scene();
    s.render.layers = {"unit", "klein"};
    const std::string svg = render_svg(s);
    CHECK(count_occurrences(svg, "<circle") == 1); // unit circle only
    CHECK(count_occurrences(svg, "<line") == 3);   // chords only

    s.render.layers = {"poincare"};
    Scene hex;
    hex.hexagon_deg = {{0, 60, 120, 180, 240, 330}};
    hex.render.layers = {"poincare"};
    const std::string svg2 = render_svg(hex);
    CHECK(count_occurrences(svg2, "<line") == 2);  // two diameters
    CHECK(count_occurrences(svg2, "<path") == 1);  // one arc
}

TEST_CASE("render is byte-deterministic") {
    CHECK(render_svg(regular_chain_scene()) == render_svg(regular_chain_scene()));
}

TEST_CASE("render needs a complete scene") {
    Scene s;
    s.chain_deg = std::vector<double>{0, 60, 120, 180, 240};
    CHECK_THROWS_AS(render_svg(s), Error);
}
