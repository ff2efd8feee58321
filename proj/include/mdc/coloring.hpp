#pragma once

#include <optional>
#include <vector>

namespace mdc {

// A vertex coloring with dense color ids 0..num_colors-1. For colorings
// produced by run_mdc, color 0 is the class of all in-degree-0 vertices and
// star_color is the shared sink color once it has been established.
struct Coloring {
  std::vector<int> assignment;  // color id per vertex, 0-based vertex order
  int num_colors = 0;
  std::optional<int> star_color;

  int order() const noexcept { return static_cast<int>(assignment.size()); }

  // color id -> ascending 0-based vertex ids
  std::vector<std::vector<int>> classes() const;
};

}  // namespace mdc
