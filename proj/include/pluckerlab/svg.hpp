#pragma once

#include <optional>
#include <string>

#include "pluckerlab/diagram.hpp"
#include "pluckerlab/prematching.hpp"

namespace pluckerlab {

// Two-column rendering matching the paper-style figures: v_1..v_s up the
// left column (bottom to top), v_{s+1}..v_{2s} down the right column.
// White vertices are open circles, black are filled, mandatory-edge
// endpoints are squares. Without a prematching all vertices are plain dots.
std::string render_diagram_svg(const KauffmanDiagram& k,
                               const std::optional<ColoredPrematching>& pm = std::nullopt);

// Prematching alone: colored vertices plus only the mandatory edges.
std::string render_prematching_svg(const ColoredPrematching& pm);

}  // namespace pluckerlab
