#pragma once

#include <string>

#include "buzz/diagram.hpp"

namespace buzz {

/// Persistence diagram scatter plot: birth on the horizontal axis, death on
/// the vertical, the diagonal drawn, one marker style per homology dimension,
/// ticks at every half-integer grid value up to the end-of-zigzag death n+1.
/// Output is byte-deterministic for a fixed diagram.
std::string render_diagram_svg(const ZigzagDiagram& diagram);

/// render_diagram_svg written to a file; throws std::runtime_error on I/O
/// failure.
void render_diagram(const ZigzagDiagram& diagram, const std::string& path);

}  // namespace buzz
