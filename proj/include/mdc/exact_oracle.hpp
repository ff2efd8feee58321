#pragma once

#include <cstdint>
#include <functional>

#include "mdc/coloring.hpp"
#include "mdc/oriented_path.hpp"

namespace mdc {

struct OracleOptions {
  int max_n = 16;  // the search is exponential; refuse anything larger
  bool prune_properness = true;
  bool prune_domination = true;
};

struct OracleResult {
  int min_colors = 0;
  Coloring witness;          // first minimum coloring in enumeration order
  std::uint64_t explored = 0;  // complete assignments handed to the validator
};

// Exhaustive minimum dominator coloring by iterative deepening over the
// palette size t = 1, 2, ...: for each t, enumerate color assignments in
// restricted-growth form (vertex i may use a color at most one beyond the
// maximum used on earlier vertices), prune as configured, and accept the
// first complete assignment that validates. The all-singleton coloring is
// always a dominator coloring, so the search terminates at t <= n.
OracleResult oracle_min_coloring(const OrientedPath& path,
                                 const OracleOptions& options = {});

int oracle_chromatic(const OrientedPath& path);

// Enumerates every restricted-growth assignment over at most `palette_bound`
// colors, subject to the prunes enabled in `options`; `visit` receives each
// complete assignment and returns true to stop early. Returns the number of
// complete assignments visited. With both prunes disabled and
// palette_bound = n the count is the Bell number of n, one assignment per
// set partition of the vertices.
std::uint64_t for_each_canonical_assignment(
    const OrientedPath& path, int palette_bound, const OracleOptions& options,
    const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace mdc
