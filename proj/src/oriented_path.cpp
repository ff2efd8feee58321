#include "mdc/oriented_path.hpp"

#include <string>

namespace mdc {

OrientedPath OrientedPath::parse(std::string_view text) {
  std::vector<Arc> arcs;
  arcs.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'F':
      case '>':
        arcs.push_back(Arc::forward);
        break;
      case 'B':
      case '<':
        arcs.push_back(Arc::backward);
        break;
      default:
        throw ParseError("invalid orientation character '" +
                             std::string(1, text[i]) + "' at position " +
                             std::to_string(i + 1) +
                             " (expected 'F', 'B', '>', or '<')",
                         i + 1);
    }
  }
  return OrientedPath(std::move(arcs));
}

std::string OrientedPath::format() const {
  std::string out;
  out.reserve(arcs_.size());
  for (Arc a : arcs_) out.push_back(a == Arc::forward ? 'F' : 'B');
  return out;
}

OrientedPath OrientedPath::reversed() const {
  // Relabel v_i as v_{n-1-i}: arc order reverses and each flag flips, so the
  // result is the same digraph read from the other end.
  std::vector<Arc> flipped;
  flipped.reserve(arcs_.size());
  for (auto it = arcs_.rbegin(); it != arcs_.rend(); ++it) {
    flipped.push_back(*it == Arc::forward ? Arc::backward : Arc::forward);
  }
  return OrientedPath(std::move(flipped));
}

DegreeProfile degree_profile(const OrientedPath& path) {
  const int n = path.order();
  DegreeProfile profile;
  profile.in_deg.assign(n, 0);
  profile.out_deg.assign(n, 0);
  for (int e = 0; e < n - 1; ++e) {
    if (path.arc(e) == Arc::forward) {
      ++profile.out_deg[e];
      ++profile.in_deg[e + 1];
    } else {
      ++profile.out_deg[e + 1];
      ++profile.in_deg[e];
    }
  }
  return profile;
}

int safe_out_degree(const DegreeProfile& profile, int i) noexcept {
  if (i < 0 || i >= profile.order()) return 0;
  return profile.out_deg[static_cast<std::size_t>(i)];
}

namespace {

void check_vertex(const OrientedPath& path, int v) {
  if (v < 0 || v >= path.order()) {
    throw std::out_of_range("vertex id " + std::to_string(v) +
                            " out of range for path of order " +
                            std::to_string(path.order()));
  }
}

}  // namespace

NeighborSet in_neighbors(const OrientedPath& path, int v) {
  check_vertex(path, v);
  NeighborSet set;
  if (v > 0 && path.arc(v - 1) == Arc::forward) set.items[set.count++] = v - 1;
  if (v < path.order() - 1 && path.arc(v) == Arc::backward) {
    set.items[set.count++] = v + 1;
  }
  return set;
}

NeighborSet out_neighbors(const OrientedPath& path, int v) {
  check_vertex(path, v);
  NeighborSet set;
  if (v > 0 && path.arc(v - 1) == Arc::backward) set.items[set.count++] = v - 1;
  if (v < path.order() - 1 && path.arc(v) == Arc::forward) {
    set.items[set.count++] = v + 1;
  }
  return set;
}

namespace {

// splitmix64 output for stream position `index`; stateless so that the flag
// at a position depends only on (seed, index).
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

OrientedPath random_orientation(int n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_orientation: vertex count must be >= 1");
  }
  std::vector<Arc> arcs(static_cast<std::size_t>(n - 1));
  for (int e = 0; e < n - 1; ++e) {
    arcs[static_cast<std::size_t>(e)] =
        (splitmix64_at(seed, static_cast<std::uint64_t>(e)) & 1)
            ? Arc::backward
            : Arc::forward;
  }
  return OrientedPath(std::move(arcs));
}

OrientedPath optimal_orientation(int n) {
  if (n < 1) {
    throw std::invalid_argument("optimal_orientation: vertex count must be >= 1");
  }
  std::vector<Arc> arcs(static_cast<std::size_t>(n - 1));
  if (n == 6) {
    // FBFBF
    for (int e = 0; e < 5; ++e) {
      arcs[static_cast<std::size_t>(e)] = (e % 2 == 0) ? Arc::forward : Arc::backward;
    }
  } else if (n % 2 == 1 || n % 4 == 2) {
    // BFBF...F (n odd) or BFBF...B (n = 2 mod 4)
    for (int e = 0; e < n - 1; ++e) {
      arcs[static_cast<std::size_t>(e)] = (e % 2 == 0) ? Arc::backward : Arc::forward;
    }
  } else {
    // FBFB...F
    for (int e = 0; e < n - 1; ++e) {
      arcs[static_cast<std::size_t>(e)] = (e % 2 == 0) ? Arc::forward : Arc::backward;
    }
  }
  return OrientedPath(std::move(arcs));
}

}  // namespace mdc
