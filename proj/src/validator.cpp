#include "mdc/validator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mdc {

namespace {

void check_assignment(const OrientedPath& path,
                      const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != path.order()) {
    throw std::invalid_argument(
        "assignment covers " + std::to_string(assignment.size()) +
        " vertices but the path has " + std::to_string(path.order()));
  }
  for (int c : assignment) {
    if (c < 0) throw std::invalid_argument("color ids must be non-negative");
  }
}

std::vector<int> class_sizes(const std::vector<int>& assignment) {
  int max_color = -1;
  for (int c : assignment) max_color = std::max(max_color, c);
  std::vector<int> sizes(static_cast<std::size_t>(max_color + 1), 0);
  for (int c : assignment) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

// A class is contained in the open out-neighborhood of v exactly when its
// size equals its multiplicity among v's out-neighbors.
bool dominates_some_class(const OrientedPath& path,
                          const std::vector<int>& assignment,
                          const std::vector<int>& sizes, int v) {
  const NeighborSet out = out_neighbors(path, v);
  if (out.count == 0) return false;
  const int c0 = assignment[static_cast<std::size_t>(out.items[0])];
  if (out.count == 1) return sizes[static_cast<std::size_t>(c0)] == 1;
  const int c1 = assignment[static_cast<std::size_t>(out.items[1])];
  if (c0 == c1) return sizes[static_cast<std::size_t>(c0)] == 2;
  return sizes[static_cast<std::size_t>(c0)] == 1 ||
         sizes[static_cast<std::size_t>(c1)] == 1;
}

}  // namespace

bool is_proper(const OrientedPath& path, const std::vector<int>& assignment) {
  check_assignment(path, assignment);
  for (int e = 0; e < path.order() - 1; ++e) {
    if (assignment[static_cast<std::size_t>(e)] ==
        assignment[static_cast<std::size_t>(e) + 1]) {
      return false;
    }
  }
  return true;
}

bool is_proper(const OrientedPath& path, const Coloring& coloring) {
  return is_proper(path, coloring.assignment);
}

std::vector<int> dominated_classes(const OrientedPath& path,
                                   const std::vector<int>& assignment, int v) {
  check_assignment(path, assignment);
  const std::vector<int> sizes = class_sizes(assignment);
  const NeighborSet out = out_neighbors(path, v);
  std::vector<int> result;
  if (out.count == 0) return result;
  const int c0 = assignment[static_cast<std::size_t>(out.items[0])];
  if (out.count == 1) {
    if (sizes[static_cast<std::size_t>(c0)] == 1) result.push_back(c0);
    return result;
  }
  const int c1 = assignment[static_cast<std::size_t>(out.items[1])];
  if (c0 == c1) {
    if (sizes[static_cast<std::size_t>(c0)] == 2) result.push_back(c0);
    return result;
  }
  if (sizes[static_cast<std::size_t>(c0)] == 1) result.push_back(c0);
  if (sizes[static_cast<std::size_t>(c1)] == 1) result.push_back(c1);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> dominated_classes(const OrientedPath& path,
                                   const Coloring& coloring, int v) {
  return dominated_classes(path, coloring.assignment, v);
}

ValidationReport validate(const OrientedPath& path,
                          const std::vector<int>& assignment) {
  check_assignment(path, assignment);
  ValidationReport report;
  const int n = path.order();
  for (int e = 0; e < n - 1; ++e) {
    if (assignment[static_cast<std::size_t>(e)] ==
        assignment[static_cast<std::size_t>(e) + 1]) {
      report.properness_violations.push_back(e);
    }
  }
  const std::vector<int> sizes = class_sizes(assignment);
  for (int v = 0; v < n; ++v) {
    if (out_neighbors(path, v).count == 0) continue;
    if (!dominates_some_class(path, assignment, sizes, v)) {
      report.domination_violations.push_back(v);
    }
  }
  report.proper = report.properness_violations.empty();
  report.dominator = report.domination_violations.empty();
  report.valid = report.proper && report.dominator;
  return report;
}

ValidationReport validate(const OrientedPath& path, const Coloring& coloring) {
  return validate(path, coloring.assignment);
}

}  // namespace mdc
