#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "mdc/exact_oracle.hpp"
#include "mdc/mdc_algorithm.hpp"
#include "mdc/oriented_path.hpp"
#include "mdc/survey.hpp"
#include "mdc/validator.hpp"

using namespace mdc;

namespace {

struct Expected {
  const char* flags;
  int colors;
  std::vector<int> assignment;
  int star;  // -1 when no shared sink class was established
};

const Expected known_cases[] = {
    {"", 1, {0}, -1},
    {"F", 2, {0, 1}, -1},
    {"B", 2, {1, 0}, -1},
    {"FF", 3, {0, 1, 2}, -1},
    {"BB", 3, {1, 2, 0}, -1},
    {"BF", 2, {1, 0, 1}, -1},
    {"FB", 2, {0, 1, 0}, -1},
    {"FFB", 3, {0, 1, 2, 0}, -1},
    {"FBFB", 3, {0, 1, 0, 2, 0}, -1},
    {"BFBF", 3, {1, 0, 2, 0, 1}, 1},
    {"FBFBF", 3, {0, 1, 0, 2, 0, 2}, -1},
    {"BFBFB", 3, {1, 0, 1, 0, 2, 0}, -1},
    {"FFFF", 5, {0, 1, 2, 3, 4}, -1},
    {"BBBB", 5, {1, 2, 3, 4, 0}, -1},
    {"BFFBF", 4, {1, 0, 1, 2, 0, 3}, 3},
    {"BFBFBB", 4, {1, 0, 1, 0, 2, 3, 0}, -1},
    {"BFBFFBF", 4, {1, 0, 2, 0, 1, 3, 0, 1}, 1},
};

}  // namespace

TEST_CASE("known orientations get their minimum color counts") {
  for (const Expected& expected : known_cases) {
    CAPTURE(expected.flags);
    const OrientedPath path = OrientedPath::parse(expected.flags);
    const Coloring coloring = run_mdc(path);
    CHECK(coloring.num_colors == expected.colors);
    CHECK(coloring.assignment == expected.assignment);
    if (expected.star < 0) {
      CHECK(!coloring.star_color.has_value());
    } else {
      REQUIRE(coloring.star_color.has_value());
      CHECK(*coloring.star_color == expected.star);
    }
    CHECK(validate(path, coloring).valid);
  }
}

TEST_CASE("color ids are dense") {
  for (const Expected& expected : known_cases) {
    const Coloring coloring = run_mdc(OrientedPath::parse(expected.flags));
    std::set<int> used(coloring.assignment.begin(), coloring.assignment.end());
    CHECK(static_cast<int>(used.size()) == coloring.num_colors);
    CHECK(*used.begin() == 0);
    CHECK(*used.rbegin() == coloring.num_colors - 1);
  }
}

TEST_CASE("classes() groups vertices by color") {
  const Coloring coloring = run_mdc(OrientedPath::parse("BFBF"));
  const auto classes = coloring.classes();
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == std::vector<int>{1, 3});
  CHECK(classes[1] == std::vector<int>{0, 4});
  CHECK(classes[2] == std::vector<int>{2});
}

TEST_CASE("color 0 is exactly the set of in-degree-0 vertices") {
  for (int n = 1; n <= 10; ++n) {
    enumerate_orientations(n, [](const OrientedPath& path) {
      const Coloring coloring = run_mdc(path);
      const DegreeProfile profile = degree_profile(path);
      for (int v = 0; v < path.order(); ++v) {
        const bool source = profile.in_deg[static_cast<std::size_t>(v)] == 0;
        const bool zero = coloring.assignment[static_cast<std::size_t>(v)] == 0;
        CHECK(source == zero);
      }
    });
  }
}

TEST_CASE("a vertex fed by an out-degree-1 vertex is a singleton class") {
  for (int n = 1; n <= 10; ++n) {
    enumerate_orientations(n, [](const OrientedPath& path) {
      const Coloring coloring = run_mdc(path);
      const DegreeProfile profile = degree_profile(path);
      const auto classes = coloring.classes();
      for (int v = 0; v < path.order(); ++v) {
        bool forced = false;
        for (int u : in_neighbors(path, v)) {
          forced = forced || profile.out_deg[static_cast<std::size_t>(u)] == 1;
        }
        if (forced) {
          const int c = coloring.assignment[static_cast<std::size_t>(v)];
          CHECK(classes[static_cast<std::size_t>(c)].size() == 1);
        }
      }
    });
  }
}

TEST_CASE("reversing the path never changes the color count") {
  for (int n = 1; n <= 10; ++n) {
    enumerate_orientations(n, [](const OrientedPath& path) {
      CHECK(run_mdc(path).num_colors == run_mdc(path.reversed()).num_colors);
    });
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const OrientedPath path = random_orientation(2000, seed);
    CHECK(run_mdc(path).num_colors == run_mdc(path.reversed()).num_colors);
  }
}

TEST_CASE("every produced coloring validates") {
  for (int n = 1; n <= 10; ++n) {
    enumerate_orientations(n, [](const OrientedPath& path) {
      CHECK(validate(path, run_mdc(path)).valid);
    });
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const OrientedPath path = random_orientation(5000, seed);
    CHECK(validate(path, run_mdc(path)).valid);
  }
}

TEST_CASE("the color count matches the exact oracle for every orientation up to n=9") {
  for (int n = 1; n <= 9; ++n) {
    enumerate_orientations(n, [](const OrientedPath& path) {
      CAPTURE(path.format());
      CHECK(run_mdc(path).num_colors == oracle_chromatic(path));
    });
  }
}

TEST_CASE("step counts are deterministic and linear") {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  const OrientedPath path = random_orientation(777, 3);
  run_mdc(path, &first);
  run_mdc(path, &second);
  CHECK(first == second);
  CHECK(first > 0);

  std::uint64_t lone = 0;
  run_mdc(OrientedPath{}, &lone);
  CHECK(lone == 4);

  for (int n = 1; n <= 10; ++n) {
    enumerate_orientations(n, [n](const OrientedPath& path) {
      std::uint64_t steps = 0;
      run_mdc(path, &steps);
      CHECK(steps <= 16u * static_cast<unsigned>(n));
    });
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 100000;
    std::uint64_t steps = 0;
    run_mdc(random_orientation(n, seed), &steps);
    CHECK(steps <= 16u * static_cast<unsigned>(n));
  }
}

TEST_CASE("steps accumulate into the caller's counter") {
  std::uint64_t steps = 100;
  run_mdc(OrientedPath{}, &steps);
  CHECK(steps == 104);
}
