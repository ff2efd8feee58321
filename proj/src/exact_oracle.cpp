#include "mdc/exact_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mdc/validator.hpp"

namespace mdc {

namespace {

struct Search {
  const OrientedPath& path;
  int bound;
  bool prune_properness;
  bool prune_domination;
  const std::function<bool(const std::vector<int>&)>& visit;
  std::vector<int> assignment;
  std::vector<int> class_size;
  std::uint64_t visited = 0;
  bool stopped = false;
};

// True when v can no longer dominate any class, whatever colors follow.
// Callers invoke this only once every out-neighbor of v is colored; from
// then on each candidate class can only grow, so a class that already owns
// a vertex outside N+(v) is lost for good.
bool certainly_undominated(const Search& s, int v) {
  const NeighborSet out = out_neighbors(s.path, v);
  if (out.count == 0) return false;
  const int c0 = s.assignment[static_cast<std::size_t>(out.items[0])];
  if (out.count == 1) return s.class_size[static_cast<std::size_t>(c0)] > 1;
  const int c1 = s.assignment[static_cast<std::size_t>(out.items[1])];
  if (c0 == c1) return s.class_size[static_cast<std::size_t>(c0)] > 2;
  return s.class_size[static_cast<std::size_t>(c0)] > 1 &&
         s.class_size[static_cast<std::size_t>(c1)] > 1;
}

void descend(Search& s, int pos, int max_used) {
  const int n = s.path.order();
  if (pos == n) {
    ++s.visited;
    if (s.visit(s.assignment)) s.stopped = true;
    return;
  }
  const int limit = std::min(max_used + 1, s.bound - 1);
  for (int c = 0; c <= limit && !s.stopped; ++c) {
    if (s.prune_properness && pos > 0 &&
        s.assignment[static_cast<std::size_t>(pos) - 1] == c) {
      continue;
    }
    s.assignment[static_cast<std::size_t>(pos)] = c;
    ++s.class_size[static_cast<std::size_t>(c)];
    bool dead = false;
    if (s.prune_domination) {
      // Placing pos completes the out-neighborhood of pos-1, and of pos
      // itself on the last vertex.
      dead = (pos >= 1 && certainly_undominated(s, pos - 1)) ||
             (pos == n - 1 && certainly_undominated(s, pos));
    }
    if (!dead) descend(s, pos + 1, std::max(max_used, c));
    --s.class_size[static_cast<std::size_t>(c)];
  }
}

}  // namespace

std::uint64_t for_each_canonical_assignment(
    const OrientedPath& path, int palette_bound, const OracleOptions& options,
    const std::function<bool(const std::vector<int>&)>& visit) {
  Search s{path,
           palette_bound,
           options.prune_properness,
           options.prune_domination,
           visit,
           std::vector<int>(static_cast<std::size_t>(path.order()), -1),
           std::vector<int>(static_cast<std::size_t>(std::max(palette_bound, 1)), 0)};
  if (palette_bound >= 1) descend(s, 0, -1);
  return s.visited;
}

OracleResult oracle_min_coloring(const OrientedPath& path,
                                 const OracleOptions& options) {
  const int n = path.order();
  if (n > options.max_n) {
    throw std::invalid_argument("exact search is exponential; n = " +
                                std::to_string(n) + " exceeds the bound " +
                                std::to_string(options.max_n));
  }
  OracleResult result;
  std::uint64_t explored = 0;
  for (int t = 1; t <= n; ++t) {
    std::vector<int> found;
    explored += for_each_canonical_assignment(
        path, t, options, [&](const std::vector<int>& assignment) {
          if (!validate(path, assignment).valid) return false;
          found = assignment;
          return true;
        });
    if (!found.empty()) {
      // Any valid assignment on fewer colors would have surfaced at a
      // smaller t, so this one uses exactly t.
      result.min_colors = t;
      result.witness.assignment = std::move(found);
      result.witness.num_colors =
          *std::max_element(result.witness.assignment.begin(),
                            result.witness.assignment.end()) +
          1;
      result.explored = explored;
      return result;
    }
  }
  throw std::logic_error(
      "unreachable: the all-singleton coloring validates at t = n");
}

int oracle_chromatic(const OrientedPath& path) {
  return oracle_min_coloring(path).min_colors;
}

}  // namespace mdc
