#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdc/oriented_path.hpp"

namespace mdc {

enum class SurveyMethod { fast, oracle };

struct SurveyOptions {
  bool allow_large = false;  // lift the n <= 26 enumeration guard
  int oracle_max_n = 12;     // per-orientation oracle sweeps beyond this are impractical
};

struct SurveyResult {
  int n = 0;
  int min_colors = 0;
  OrientedPath witness;  // first orientation attaining the minimum
  std::optional<int> formula_value;  // closed form, defined for n >= 4
  bool agrees = true;    // min_colors == formula_value whenever the latter is defined
  SurveyMethod method = SurveyMethod::fast;
};

// Closed form for the minimum dominator chromatic number over all
// orientations of the n-vertex path, n >= 4. With k = n/4:
//   n = 4k, 4k+1 -> k+2
//   n = 4k+2, 4k+3 -> k+3
// except n = 6, whose value is 3.
int theorem1_value(int n);

inline std::uint64_t orientation_count(int n) {
  return std::uint64_t{1} << (n - 1);
}

// Index bits map to arc flags most-significant-first with forward = 0, so
// ascending indices enumerate flag strings in lexicographic order, 'F' < 'B'.
OrientedPath orientation_from_index(int n, std::uint64_t index);

namespace detail {
void check_enumeration_guard(int n, bool allow_large);
}

// All 2^(n-1) orientations exactly once, lexicographic flag order. Refuses
// n > 26 (over ~33M items) unless allow_large is set.
template <class Visitor>
void enumerate_orientations(int n, Visitor&& visit, bool allow_large = false) {
  detail::check_enumeration_guard(n, allow_large);
  const std::uint64_t total = orientation_count(n);
  for (std::uint64_t index = 0; index < total; ++index) {
    visit(orientation_from_index(n, index));
  }
}

// Minimum per-orientation color count over all orientations of P_n, with the
// first witness in enumeration order. The parallel version partitions the
// index range across OpenMP threads; the reduction keeps the lexicographically
// first witness, so the result is identical to the serial reference for every
// thread count. Falls back to the serial kernel when built without OpenMP.
SurveyResult min_over_orientations(int n, SurveyMethod method,
                                   const SurveyOptions& options = {});
SurveyResult min_over_orientations_serial(int n, SurveyMethod method,
                                          const SurveyOptions& options = {});

// Per-n comparison against the closed form for n_lo..n_hi (4 <= n_lo <= n_hi).
std::vector<SurveyResult> verify_theorem1(int n_lo, int n_hi,
                                          SurveyMethod method,
                                          const SurveyOptions& options = {});

bool all_agree(const std::vector<SurveyResult>& results);

}  // namespace mdc
