#pragma once

#include <set>
#include <string>

#include "hexweave/cht.hpp"

namespace hexweave {

// Deterministic SVG rendering. Pointy-top hexagons with unit circumradius,
// y axis pointing downward. Layers: tiles, stripes, diameters, parity, rings.
std::string render_svg(const DecTable& dec, const Patch& patch,
                       const std::set<std::string>& layers);

bool is_known_layer(const std::string& layer);

}  // namespace hexweave
