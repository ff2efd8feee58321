#pragma once

#include <string>

#include "mdc/coloring.hpp"
#include "mdc/oriented_path.hpp"

namespace mdc {

// Graphviz rendering of an oriented path: one node per vertex labeled
// v1..vn, one directed edge per arc. When a coloring is given, nodes are
// filled from a fixed 12-color palette cycled by color id, color 0 always
// taking the first entry. Output depends only on the inputs.
std::string to_dot(const OrientedPath& path, const Coloring* coloring = nullptr);

}  // namespace mdc
