#ifndef SNAKEFRAC_SVG_HPP
#define SNAKEFRAC_SVG_HPP

#include <string>

#include "snakefrac/labeled.hpp"

namespace snakefrac {

inline constexpr int kRenderGuard = 60;

// Deterministic SVG of a shape: 40-px tiles, G_1 at the origin, tile
// indices centered. with_matchings draws one panel per perfect matching
// with the matched edges thickened.
std::string render_shape_svg(const SnakeShape& s, bool with_matchings);

// Same figure with tile labels and edge weights from the labeled graph.
std::string render_labeled_svg(const LabeledSnakeGraph& g, bool with_matchings);

}  // namespace snakefrac

#endif
