#include "mdc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "mdc/mdc_algorithm.hpp"
#include "mdc/oriented_path.hpp"

namespace mdc {

namespace {

// Defeats dead-code elimination of the timed calls.
volatile std::uint64_t bench_sink = 0;

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

}  // namespace

FitResult fit_loglog(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("log-log fit needs at least two points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : points) {
    if (x <= 0 || y <= 0) {
      throw std::invalid_argument("log-log fit needs positive coordinates");
    }
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double m = static_cast<double>(points.size());
  const double cov_xx = sxx - sx * sx / m;
  const double cov_xy = sxy - sx * sy / m;
  const double cov_yy = syy - sy * sy / m;
  if (cov_xx == 0) {
    throw std::invalid_argument("log-log fit needs at least two distinct x");
  }
  FitResult fit;
  fit.slope = cov_xy / cov_xx;
  fit.intercept = (sy - fit.slope * sx) / m;
  // All y equal: the flat line fits exactly.
  fit.r_squared = cov_yy == 0 ? 1.0 : cov_xy * cov_xy / (cov_xx * cov_yy);
  return fit;
}

ScalingReport measure_runtime(std::vector<int> sizes, int repetitions,
                              std::uint64_t seed) {
  if (sizes.empty()) throw std::invalid_argument("need at least one size");
  for (int n : sizes) {
    if (n < 2) throw std::invalid_argument("sizes must be >= 2");
  }
  if (repetitions < 3) throw std::invalid_argument("need >= 3 repetitions");
  std::sort(sizes.begin(), sizes.end());

  ScalingReport report;
  std::uint64_t checksum = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int n = sizes[i];
    const OrientedPath path = random_orientation(n, seed + i);

    std::uint64_t steps = 0;
    checksum += static_cast<std::uint64_t>(run_mdc(path, &steps).num_colors);

    // Small inputs are batched so each measurement spans a comparable amount
    // of work regardless of n.
    const int batch = std::max(1, 2'000'000 / n);
    const auto run_batch = [&]() {
      std::uint64_t acc = 0;
      for (int b = 0; b < batch; ++b) {
        acc += static_cast<std::uint64_t>(run_mdc(path).num_colors);
      }
      return acc;
    };

    checksum += run_batch();  // warm-up, timing discarded
    std::vector<double> per_call(static_cast<std::size_t>(repetitions));
    for (int r = 0; r < repetitions; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      checksum += run_batch();
      const auto t1 = std::chrono::steady_clock::now();
      per_call[static_cast<std::size_t>(r)] =
          std::chrono::duration<double>(t1 - t0).count() / batch;
    }

    BenchSample sample;
    sample.n = n;
    sample.median_seconds = median(per_call);
    sample.steps = steps;
    report.samples.push_back(sample);
  }
  bench_sink = checksum;

  std::vector<std::pair<double, double>> points;
  points.reserve(report.samples.size());
  for (const BenchSample& sample : report.samples) {
    points.emplace_back(static_cast<double>(sample.n), sample.median_seconds);
    report.steps_per_vertex =
        std::max(report.steps_per_vertex,
                 static_cast<double>(sample.steps) / sample.n);
  }
  if (points.size() >= 2) {
    const FitResult fit = fit_loglog(points);
    report.loglog_slope = fit.slope;
    report.r_squared = fit.r_squared;
  }
  return report;
}

}  // namespace mdc
