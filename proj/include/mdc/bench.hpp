#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mdc {

struct BenchSample {
  int n = 0;
  double median_seconds = 0.0;
  std::uint64_t steps = 0;  // deterministic instruction count for the instance
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least-squares line through (log x, log y). Needs >= 2 points with
// positive coordinates.
FitResult fit_loglog(const std::vector<std::pair<double, double>>& points);

struct ScalingReport {
  std::vector<BenchSample> samples;  // sorted by n
  double loglog_slope = 0.0;         // wall time vs n
  double r_squared = 0.0;
  double steps_per_vertex = 0.0;     // max over samples of steps / n
};

// For each size n, colors random_orientation(n, seed+i) repeatedly on a
// single thread: one warm-up batch is discarded, then the median per-call
// wall time over `repetitions` batches is recorded together with the step
// count. Requires a non-empty size list, every size >= 2, repetitions >= 3.
ScalingReport measure_runtime(std::vector<int> sizes, int repetitions,
                              std::uint64_t seed);

}  // namespace mdc
