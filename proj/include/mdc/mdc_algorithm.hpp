#pragma once

#include <cstdint>

#include "mdc/coloring.hpp"
#include "mdc/oriented_path.hpp"

namespace mdc {

// Minimum dominator coloring of an oriented path in a single left-to-right
// pass over the vertices.
//
// On a path, out-degree 2 forces in-degree 0, so the vertices split into
// four kinds the pass can recognize with O(1) lookahead:
//   - in-degree 0 ("sources")            -> all share color 0;
//   - an in-neighbor of out-degree 1     -> forced singleton, fresh color;
//   - witnesses and pair members chosen below, one fresh color each;
//   - everything else joins one shared "filler" class C*.
// Any edge leaves from a source or from an out-degree-1 vertex, so vertices
// of the last two kinds are pairwise non-adjacent; the filler class stays
// proper no matter how it grows.
//
// Every out-degree-2 source needs a color class inside its two-vertex
// out-neighborhood: a forced singleton next to it serves for free; otherwise
// consecutive such sources chain with shared neighbors, and singleton
// witnesses on alternate shared vertices serve two sources each. A chain of
// exactly one source instead turns both its sink neighbors into a dedicated
// two-vertex class, which is retired on completion so the filler never
// grows into it. Out-degree-1 sources are served by their forced-singleton
// target, and out-degree-0 vertices need nothing.
//
// The returned coloring always satisfies the dominator-coloring conditions
// and uses the minimum possible number of colors for the given orientation.
//
// When `steps` is non-null the number of primitive operations performed is
// added to it. The count is a pure function of the input (no wall-clock
// dependence) and is bounded by 16 per vertex; see the counting sites in the
// implementation.
Coloring run_mdc(const OrientedPath& path, std::uint64_t* steps = nullptr);

}  // namespace mdc
