#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mdc {

// Direction of the arc on edge {v_i, v_i+1} (0-based edge index i):
// forward = v_i -> v_i+1, backward = v_i+1 -> v_i.
enum class Arc : std::uint8_t { forward, backward };

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  // 1-based position of the offending character in the input string.
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// An orientation of the undirected path on n vertices. Only the per-edge
// directions are stored; the underlying graph is the path by construction,
// so every instance is structurally valid. A default-constructed path is
// the single vertex (n = 1, no arcs).
class OrientedPath {
public:
  OrientedPath() = default;
  explicit OrientedPath(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {}

  // Accepts 'F'/'B' plus the aliases '>'/'<'. The empty string is the
  // single-vertex path. Throws ParseError for anything else.
  static OrientedPath parse(std::string_view text);

  int order() const noexcept { return static_cast<int>(arcs_.size()) + 1; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  Arc arc(int edge) const { return arcs_[static_cast<std::size_t>(edge)]; }

  // Canonical form over {F,B}; inverse of parse.
  std::string format() const;

  // The same digraph traversed from the other end: vertex i becomes
  // n-1-i, so the flag sequence reverses and each flag flips. An
  // involution, and isomorphic to the original by construction.
  OrientedPath reversed() const;

  friend bool operator==(const OrientedPath&, const OrientedPath&) = default;

private:
  std::vector<Arc> arcs_;
};

// Per-vertex in/out degrees. Entries are 0..2 and in+out equals the
// underlying degree (1 at the endpoints, 2 inside).
struct DegreeProfile {
  std::vector<std::uint8_t> in_deg;
  std::vector<std::uint8_t> out_deg;

  int order() const noexcept { return static_cast<int>(in_deg.size()); }
};

DegreeProfile degree_profile(const OrientedPath& path);

// out_deg of the 0-based vertex i, where out-of-range positions count as 0.
// Lets chain lookahead peek past either end of the path.
int safe_out_degree(const DegreeProfile& profile, int i) noexcept;

// A path vertex has at most two neighbors in each direction.
struct NeighborSet {
  std::array<int, 2> items{};
  int count = 0;

  const int* begin() const noexcept { return items.data(); }
  const int* end() const noexcept { return items.data() + count; }
};

// 0-based vertex; throws std::out_of_range for an invalid id.
NeighborSet in_neighbors(const OrientedPath& path, int v);
NeighborSet out_neighbors(const OrientedPath& path, int v);

// Deterministic: each of the n-1 flags is an independent fair bit derived
// from (seed, position), so the orientation for (n, seed) is a prefix of the
// one for (m, seed) whenever n <= m. Rejects n < 1.
OrientedPath random_orientation(int n, std::uint64_t seed);

// An orientation attaining the minimum dominator chromatic number over all
// orientations of the n-vertex path:
//   n odd:              BFBF...BF
//   n = 0 (mod 4):      FBFB...F
//   n = 2 (mod 4), n!=6: BFBF...B
//   n = 6:              FBFBF
// Rejects n < 1.
OrientedPath optimal_orientation(int n);

}  // namespace mdc
