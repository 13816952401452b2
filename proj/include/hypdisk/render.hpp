#pragma once

#include <string>

#include "hypdisk/scene.hpp"

namespace hypdisk {

// SVG 1.1 figure of the scene on a fixed 1000x1000 viewBox, y-axis pointing
// up. Byte-deterministic for identical scenes.
std::string render_svg(const Scene& scene);

} // namespace hypdisk
