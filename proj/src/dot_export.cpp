#include "mdc/dot_export.hpp"

#include <array>
#include <stdexcept>

namespace mdc {

namespace {

// ColorBrewer "Paired" scheme; entry 0 renders C0 identically across runs.
constexpr std::array<const char*, 12> kPalette = {
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928"};

}  // namespace

std::string to_dot(const OrientedPath& path, const Coloring* coloring) {
  if (coloring != nullptr && coloring->order() != path.order()) {
    throw std::invalid_argument("coloring does not cover the path");
  }
  const int n = path.order();
  std::string out;
  out += "digraph oriented_path {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=circle, style=filled, fillcolor=white];\n";
  for (int v = 0; v < n; ++v) {
    out += "  v" + std::to_string(v + 1);
    if (coloring != nullptr) {
      const int c = coloring->assignment[static_cast<std::size_t>(v)];
      out += " [fillcolor=\"";
      out += kPalette[static_cast<std::size_t>(c % 12)];
      out += "\"]";
    }
    out += ";\n";
  }
  for (int e = 0; e < n - 1; ++e) {
    const int from = path.arc(e) == Arc::forward ? e + 1 : e + 2;
    const int to = path.arc(e) == Arc::forward ? e + 2 : e + 1;
    out += "  v" + std::to_string(from) + " -> v" + std::to_string(to) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mdc
