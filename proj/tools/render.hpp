#pragma once

// SVG drawings of certificates on a net of the triangulation: every triangle
// drawn separately with its signed side labels, arcs as chords between their
// crossing points. Presentation only.

#include <string>
#include <vector>

#include "arcdist/io.hpp"

namespace arcdist::render {

/// Writes the drawings for a serialized certificate into `dir` and returns
/// the paths written. Distance certificates give distance.svg, path
/// certificates step_K.svg, level positions and reports level_J.svg.
std::vector<std::string> render_certificate(const json& cert, const std::string& dir);

}  // namespace arcdist::render
