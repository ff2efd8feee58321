#include "mdc/survey.hpp"

#include <climits>
#include <stdexcept>
#include <string>

#include "mdc/exact_oracle.hpp"
#include "mdc/mdc_algorithm.hpp"

namespace mdc {

int theorem1_value(int n) {
  if (n < 4) {
    throw std::invalid_argument("the closed form covers n >= 4, got n = " +
                                std::to_string(n));
  }
  if (n == 6) return 3;
  const int k = n / 4;
  return n % 4 <= 1 ? k + 2 : k + 3;
}

OrientedPath orientation_from_index(int n, std::uint64_t index) {
  if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
  std::vector<Arc> arcs(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n - 1; ++j) {
    const int bit = n - 2 - j;
    arcs[static_cast<std::size_t>(j)] =
        ((index >> bit) & 1) ? Arc::backward : Arc::forward;
  }
  return OrientedPath(std::move(arcs));
}

namespace detail {

void check_enumeration_guard(int n, bool allow_large) {
  if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
  if (n > 26 && !allow_large) {
    throw std::invalid_argument(
        "enumerating 2^" + std::to_string(n - 1) +
        " orientations at n = " + std::to_string(n) +
        " exceeds the practical guard (n <= 26); set allow_large to force");
  }
}

}  // namespace detail

namespace {

void check_survey_input(int n, SurveyMethod method,
                        const SurveyOptions& options) {
  detail::check_enumeration_guard(n, options.allow_large);
  if (method == SurveyMethod::oracle && n > options.oracle_max_n) {
    throw std::invalid_argument(
        "oracle-backed survey is limited to n <= " +
        std::to_string(options.oracle_max_n) + ", got n = " +
        std::to_string(n));
  }
}

int evaluate_orientation(int n, std::uint64_t index, SurveyMethod method) {
  const OrientedPath path = orientation_from_index(n, index);
  if (method == SurveyMethod::fast) return run_mdc(path).num_colors;
  return oracle_chromatic(path);
}

SurveyResult make_result(int n, int min_colors, std::uint64_t witness_index,
                         SurveyMethod method) {
  SurveyResult result;
  result.n = n;
  result.min_colors = min_colors;
  result.witness = orientation_from_index(n, witness_index);
  if (n >= 4) result.formula_value = theorem1_value(n);
  result.agrees =
      !result.formula_value.has_value() || min_colors == *result.formula_value;
  result.method = method;
  return result;
}

}  // namespace

SurveyResult min_over_orientations_serial(int n, SurveyMethod method,
                                          const SurveyOptions& options) {
  check_survey_input(n, method, options);
  const std::uint64_t total = orientation_count(n);
  int best = INT_MAX;
  std::uint64_t best_index = 0;
  for (std::uint64_t index = 0; index < total; ++index) {
    const int colors = evaluate_orientation(n, index, method);
    if (colors < best) {
      best = colors;
      best_index = index;
    }
  }
  return make_result(n, best, best_index, method);
}

#ifdef _OPENMP

SurveyResult min_over_orientations(int n, SurveyMethod method,
                                   const SurveyOptions& options) {
  check_survey_input(n, method, options);
  const std::int64_t total = static_cast<std::int64_t>(orientation_count(n));
  int best = INT_MAX;
  std::uint64_t best_index = 0;
#pragma omp parallel
  {
    int local_best = INT_MAX;
    std::uint64_t local_index = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t index = 0; index < total; ++index) {
      const int colors = evaluate_orientation(
          n, static_cast<std::uint64_t>(index), method);
      if (colors < local_best) {
        local_best = colors;
        local_index = static_cast<std::uint64_t>(index);
      }
    }
    // Keep the lexicographically first witness so the result matches the
    // serial reference for every thread count.
#pragma omp critical(mdc_survey_reduce)
    {
      if (local_best < best ||
          (local_best == best && local_index < best_index)) {
        best = local_best;
        best_index = local_index;
      }
    }
  }
  return make_result(n, best, best_index, method);
}

#else

SurveyResult min_over_orientations(int n, SurveyMethod method,
                                   const SurveyOptions& options) {
  return min_over_orientations_serial(n, method, options);
}

#endif

std::vector<SurveyResult> verify_theorem1(int n_lo, int n_hi,
                                          SurveyMethod method,
                                          const SurveyOptions& options) {
  if (n_lo < 4 || n_lo > n_hi) {
    throw std::invalid_argument("need 4 <= n_lo <= n_hi");
  }
  std::vector<SurveyResult> results;
  results.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) {
    results.push_back(min_over_orientations(n, method, options));
  }
  return results;
}

bool all_agree(const std::vector<SurveyResult>& results) {
  for (const SurveyResult& result : results) {
    if (!result.agrees) return false;
  }
  return true;
}

}  // namespace mdc
