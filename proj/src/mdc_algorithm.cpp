#include "mdc/mdc_algorithm.hpp"

namespace mdc {

namespace {

// True when some in-neighbor of v has out-degree 1, forcing v into a
// singleton class. Out-of-range v has no in-neighbors.
bool unique_forced(const OrientedPath& path, const DegreeProfile& profile,
                   int v, std::uint64_t& ops) {
  if (v < 0 || v >= profile.order()) return false;
  for (int j : in_neighbors(path, v)) {
    ops += 1;
    if (profile.out_deg[static_cast<std::size_t>(j)] == 1) return true;
  }
  return false;
}

// True when v+1 is an out-degree-2 source whose right sink v+2 is not a
// forced singleton, i.e. the source still needs a witness on v or v+2.
bool chain_continues(const OrientedPath& path, const DegreeProfile& profile,
                     int v, std::uint64_t& ops) {
  ops += 1;
  return safe_out_degree(profile, v + 1) == 2 &&
         !unique_forced(path, profile, v + 2, ops);
}

}  // namespace

// Step charges, one per primitive act. Worst case per vertex: degree pass 1,
// loop advance + in-degree test 2, in-neighbor scan 2, mode dispatch 1, and
// a chain-start that inspects two sources (two continuation checks at 3
// each) before coloring (4), for a total of 16.
Coloring run_mdc(const OrientedPath& path, std::uint64_t* steps) {
  const int n = path.order();
  const DegreeProfile profile = degree_profile(path);
  std::uint64_t ops = static_cast<std::uint64_t>(n);  // degree pass

  Coloring coloring;
  coloring.assignment.assign(static_cast<std::size_t>(n), 0);
  int palette = 1;  // color 0 is reserved for the in-degree-0 class

  enum class Mode { idle, chain_witness, chain_filler, pair_wait };
  Mode mode = Mode::idle;
  int filler = -1;  // the one shared class for vertices nobody relies on
  int pair_color = -1;

  auto join_filler = [&](int v) {
    ops += 2;  // mint-or-reuse test + assignment
    if (filler < 0) filler = palette++;
    coloring.assignment[static_cast<std::size_t>(v)] = filler;
  };

  for (int i = 0; i < n; ++i) {
    ops += 2;  // loop advance + in-degree test
    if (profile.in_deg[static_cast<std::size_t>(i)] == 0) {
      // Sources keep color 0 and never disturb the chain state; the pass
      // walks straight over them to the next sink.
      ops += 1;
      continue;
    }

    if (unique_forced(path, profile, i, ops)) {
      // Singleton demanded by an out-degree-1 dominator. It also ends any
      // source chain, since chains require witness-free sinks.
      coloring.assignment[static_cast<std::size_t>(i)] = palette++;
      mode = Mode::idle;
      ops += 3;
      continue;
    }

    ops += 1;  // mode dispatch
    switch (mode) {
      case Mode::pair_wait:
        // Second member of the dedicated pair class. Retire it: the source
        // between the pair dominates it only while it is exactly the pair.
        coloring.assignment[static_cast<std::size_t>(i)] = pair_color;
        mode = Mode::idle;
        ops += 3;
        break;
      case Mode::chain_witness:
        // Singleton witness shared by the sources on both sides.
        coloring.assignment[static_cast<std::size_t>(i)] = palette++;
        mode = chain_continues(path, profile, i, ops) ? Mode::chain_filler
                                                      : Mode::idle;
        ops += 3;
        break;
      case Mode::chain_filler:
        join_filler(i);
        mode = chain_continues(path, profile, i, ops) ? Mode::chain_witness
                                                      : Mode::idle;
        ops += 1;
        break;
      case Mode::idle:
        if (chain_continues(path, profile, i, ops)) {
          // A chain of sources starts at i+1. A lone source gets the pair
          // class on its two sinks; a longer chain alternates filler and
          // witness sinks so each witness serves two sources.
          if (chain_continues(path, profile, i + 2, ops)) {
            join_filler(i);
            mode = Mode::chain_witness;
          } else {
            pair_color = palette++;
            coloring.assignment[static_cast<std::size_t>(i)] = pair_color;
            mode = Mode::pair_wait;
            ops += 2;
          }
          ops += 1;
        } else {
          // No source to the right needs this vertex; park it in filler.
          join_filler(i);
          ops += 1;
        }
        break;
    }
  }

  coloring.num_colors = palette;
  if (filler >= 0) coloring.star_color = filler;
  if (steps != nullptr) *steps += ops;
  return coloring;
}

}  // namespace mdc
