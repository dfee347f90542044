#pragma once

#include <string>

#include "chainloop/document.hpp"

namespace chainloop {

enum class RenderStyle { chip_config, lattice_path };

// Deterministic SVG 1.1 text. Divisor documents render as a row of loops
// with chip dots; path documents as overlaid piecewise-linear paths with
// cusps at (i, p_i(j)). Layout constants carry no semantics.
std::string render_svg(const Document& doc, RenderStyle style);

}  // namespace chainloop
