#pragma once
#include <string>

#include "trisect/diagram.hpp"

namespace trisect {

// Schematic SVG: the central surface as a 4g-gon with labeled edge
// identifications, curves as chords per homology class. Watermarked
// "homology-schematic"; no isotopy claims. Byte-identical per input.
std::string render_svg(const TrisectionDiagram& d);

}  // namespace trisect
