#include "mdc/coloring.hpp"

#include <algorithm>

namespace mdc {

std::vector<std::vector<int>> Coloring::classes() const {
  int max_color = num_colors - 1;
  for (int c : assignment) max_color = std::max(max_color, c);
  std::vector<std::vector<int>> result(
      static_cast<std::size_t>(max_color + 1));
  for (int v = 0; v < order(); ++v) {
    result[static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)])]
        .push_back(v);
  }
  return result;
}

}  // namespace mdc
