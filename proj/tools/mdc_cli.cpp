#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdc/bench.hpp"
#include "mdc/document.hpp"
#include "mdc/dot_export.hpp"
#include "mdc/exact_oracle.hpp"
#include "mdc/mdc_algorithm.hpp"
#include "mdc/oriented_path.hpp"
#include "mdc/survey.hpp"
#include "mdc/validator.hpp"

namespace {

// Exit codes: 0 success/agreement, 1 user or input error, 2 internal
// invariant failure (a coloring our own algorithm produced fails the
// validator, or the algorithm disagrees with the oracle or the closed form).

std::vector<int> parse_assignment(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("assignment must list at least one color id");
  }
  std::vector<int> result;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        comma == std::string::npos ? text.substr(start)
                                   : text.substr(start, comma - start);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad color id '" + token + "'");
    }
    if (used != token.size() || value < 0) {
      throw std::invalid_argument("bad color id '" + token + "'");
    }
    result.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return result;
}

int emit_coloring(const mdc::OrientedPath& path) {
  const mdc::Coloring coloring = mdc::run_mdc(path);
  const nlohmann::json doc = mdc::coloring_document(path, coloring);
  std::cout << doc.dump(2) << "\n";
  if (!doc.at("valid").get<bool>()) {
    std::cerr << "internal error: the produced coloring fails validation\n";
    return 2;
  }
  return 0;
}

int run_color(bool have_orientation, const std::string& orientation,
              bool have_random, const std::vector<std::uint64_t>& random_args) {
  if (have_orientation == have_random) {
    throw std::invalid_argument(
        "provide exactly one of an orientation string or --random N SEED");
  }
  if (have_random) {
    if (random_args[0] < 1 || random_args[0] > 100'000'000) {
      throw std::invalid_argument("vertex count out of range [1, 1e8]");
    }
    return emit_coloring(mdc::random_orientation(
        static_cast<int>(random_args[0]), random_args[1]));
  }
  return emit_coloring(mdc::OrientedPath::parse(orientation));
}

int run_validate(const std::string& orientation, const std::string& colors) {
  const mdc::OrientedPath path = mdc::OrientedPath::parse(orientation);
  const std::vector<int> assignment = parse_assignment(colors);
  const mdc::ValidationReport report = mdc::validate(path, assignment);
  std::cout << mdc::validation_document(path, report).dump(2) << "\n";
  return report.valid ? 0 : 1;
}

int run_oracle(const std::string& orientation) {
  const mdc::OrientedPath path = mdc::OrientedPath::parse(orientation);
  const mdc::OracleResult result = mdc::oracle_min_coloring(path);
  const int algorithm_colors = mdc::run_mdc(path).num_colors;
  std::cout << mdc::oracle_document(path, result, algorithm_colors).dump(2)
            << "\n";
  if (algorithm_colors != result.min_colors) {
    std::cerr << "internal error: algorithm disagrees with the oracle\n";
    return 2;
  }
  return 0;
}

int run_survey(int from, int to, const std::string& method_name) {
  const mdc::SurveyMethod method = method_name == "oracle"
                                       ? mdc::SurveyMethod::oracle
                                       : mdc::SurveyMethod::fast;
  const std::vector<mdc::SurveyResult> results =
      mdc::verify_theorem1(from, to, method);
  for (const mdc::SurveyResult& result : results) {
    std::cout << "n=" << result.n << "\tmin_colors=" << result.min_colors
              << "\twitness=" << result.witness.format() << "\tformula="
              << (result.formula_value ? std::to_string(*result.formula_value)
                                       : std::string("-"))
              << "\tagrees=" << (result.agrees ? "true" : "false") << "\n";
  }
  const bool agree = mdc::all_agree(results);
  std::cout << "all_agree=" << (agree ? "true" : "false") << "\n";
  if (!agree) {
    std::cerr << "internal error: survey disagrees with the closed form\n";
    return 2;
  }
  return 0;
}

int run_optimal(int n) {
  return emit_coloring(mdc::optimal_orientation(n));
}

int run_bench(const std::vector<int>& sizes, int repetitions,
              std::uint64_t seed) {
  const mdc::ScalingReport report =
      mdc::measure_runtime(sizes, repetitions, seed);
  std::cout << "n\tmedian_seconds\tsteps\n";
  std::vector<std::pair<double, double>> step_points;
  for (const mdc::BenchSample& sample : report.samples) {
    std::cout << sample.n << "\t" << sample.median_seconds << "\t"
              << sample.steps << "\n";
    step_points.emplace_back(static_cast<double>(sample.n),
                             static_cast<double>(sample.steps));
  }
  std::cout << "wall_slope=" << report.loglog_slope
            << "\tr_squared=" << report.r_squared;
  if (step_points.size() >= 2) {
    std::cout << "\tsteps_slope=" << mdc::fit_loglog(step_points).slope;
  }
  std::cout << "\tsteps_per_vertex=" << report.steps_per_vertex << "\n";
  return 0;
}

int run_export_dot(const std::string& orientation, bool uncolored,
                   bool have_assignment, const std::string& colors) {
  const mdc::OrientedPath path = mdc::OrientedPath::parse(orientation);
  if (uncolored) {
    std::cout << mdc::to_dot(path);
    return 0;
  }
  mdc::Coloring coloring;
  if (have_assignment) {
    coloring.assignment = parse_assignment(colors);
    int max_color = -1;
    for (int c : coloring.assignment) max_color = std::max(max_color, c);
    coloring.num_colors = max_color + 1;
  } else {
    coloring = mdc::run_mdc(path);
  }
  std::cout << mdc::to_dot(path, &coloring);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum dominator colorings of oriented paths"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* color = app.add_subcommand(
      "color", "Color an orientation with the linear-time algorithm");
  std::string color_orientation;
  std::vector<std::uint64_t> color_random;
  auto* color_pos = color->add_option(
      "orientation", color_orientation,
      "flag string over F/B ('>'/'<' accepted); empty string is the single vertex");
  auto* color_rand = color->add_option("--random", color_random,
                                       "generate an instance: N SEED")
                         ->expected(2);
  color->callback([&]() {
    exit_code = run_color(color_pos->count() > 0, color_orientation,
                          color_rand->count() > 0, color_random);
  });

  auto* validate = app.add_subcommand(
      "validate", "Check a coloring against the dominator conditions");
  std::string validate_orientation;
  std::string validate_assignment;
  auto* validate_pos =
      validate->add_option("orientation", validate_orientation, "flag string");
  validate
      ->add_option("assignment", validate_assignment,
                   "comma-separated color ids, vertex 1 first")
      ->required();
  validate->callback([&]() {
    if (validate_pos->count() == 0) {
      throw std::invalid_argument("orientation is required");
    }
    exit_code = run_validate(validate_orientation, validate_assignment);
  });

  auto* oracle = app.add_subcommand(
      "oracle", "Exact minimum by exhaustive search (small n)");
  std::string oracle_orientation;
  auto* oracle_pos =
      oracle->add_option("orientation", oracle_orientation, "flag string");
  oracle->callback([&]() {
    if (oracle_pos->count() == 0) {
      throw std::invalid_argument("orientation is required");
    }
    exit_code = run_oracle(oracle_orientation);
  });

  auto* survey = app.add_subcommand(
      "survey", "Minimum over all orientations per n versus the closed form");
  int survey_from = 0;
  int survey_to = 0;
  std::string survey_method = "fast";
  survey->add_option("--from", survey_from, "first n (>= 4)")->required();
  survey->add_option("--to", survey_to, "last n")->required();
  survey->add_option("--method", survey_method, "fast | oracle")
      ->check(CLI::IsMember({"fast", "oracle"}));
  survey->callback([&]() {
    exit_code = run_survey(survey_from, survey_to, survey_method);
  });

  auto* optimal = app.add_subcommand(
      "optimal", "Emit an orientation attaining the minimum, with its coloring");
  int optimal_n = 0;
  optimal->add_option("n", optimal_n, "vertex count")->required();
  optimal->callback([&]() { exit_code = run_optimal(optimal_n); });

  auto* bench = app.add_subcommand(
      "bench", "Measure runtime and step-count scaling of the algorithm");
  std::vector<int> bench_sizes = {1000, 10000, 100000, 1000000};
  int bench_reps = 5;
  std::uint64_t bench_seed = 42;
  bench->add_option("--sizes", bench_sizes, "instance sizes");
  bench->add_option("--repetitions", bench_reps, "measurements per size (>= 3)");
  bench->add_option("--seed", bench_seed, "instance generator seed");
  bench->callback(
      [&]() { exit_code = run_bench(bench_sizes, bench_reps, bench_seed); });

  auto* export_dot =
      app.add_subcommand("export-dot", "Emit the orientation as Graphviz DOT");
  std::string dot_orientation;
  std::string dot_assignment;
  bool dot_uncolored = false;
  auto* dot_pos =
      export_dot->add_option("orientation", dot_orientation, "flag string");
  auto* dot_colors = export_dot->add_option(
      "--assignment", dot_assignment, "color by these ids instead of run_mdc");
  export_dot->add_flag("--uncolored", dot_uncolored, "structure only");
  export_dot->callback([&]() {
    if (dot_pos->count() == 0) {
      throw std::invalid_argument("orientation is required");
    }
    exit_code = run_export_dot(dot_orientation, dot_uncolored,
                               dot_colors->count() > 0, dot_assignment);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const mdc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
