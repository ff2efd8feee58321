#pragma once

#include <vector>

#include "mdc/coloring.hpp"
#include "mdc/oriented_path.hpp"

namespace mdc {

// Verdict of the dominator-coloring check. Violations are collected
// exhaustively rather than fail-fast. Edge and vertex indices are 0-based;
// the JSON layer shifts them to 1-based for output.
struct ValidationReport {
  bool proper = false;
  bool dominator = false;
  bool valid = false;
  std::vector<int> properness_violations;  // edge i joins vertices i and i+1
  std::vector<int> domination_violations;  // vertices with out-degree >= 1
};

// Properness is orientation-independent: the two endpoints of every edge of
// the underlying path must receive distinct colors.
bool is_proper(const OrientedPath& path, const std::vector<int>& assignment);
bool is_proper(const OrientedPath& path, const Coloring& coloring);

// All color ids whose entire class lies inside the open out-neighborhood of
// v (0-based). A vertex with no out-neighbors dominates nothing, since every
// class is non-empty.
std::vector<int> dominated_classes(const OrientedPath& path,
                                   const std::vector<int>& assignment, int v);
std::vector<int> dominated_classes(const OrientedPath& path,
                                   const Coloring& coloring, int v);

// Domination convention: a vertex with out-degree >= 1 must dominate some
// color class, i.e. have that class contained in its open out-neighborhood;
// vertices of out-degree 0 satisfy the requirement trivially.
//
// Accepts any assignment of non-negative color ids covering all n vertices
// (density is not required); throws std::invalid_argument otherwise.
ValidationReport validate(const OrientedPath& path,
                          const std::vector<int>& assignment);
ValidationReport validate(const OrientedPath& path, const Coloring& coloring);

}  // namespace mdc
