#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mdc/exact_oracle.hpp"
#include "mdc/mdc_algorithm.hpp"
#include "mdc/oriented_path.hpp"
#include "mdc/survey.hpp"
#include "mdc/validator.hpp"

using namespace mdc;

TEST_CASE("known minima with explored counts and witnesses") {
  struct Expected {
    const char* flags;
    int min_colors;
    std::uint64_t explored;
    std::vector<int> witness;
  };
  const Expected cases[] = {
      {"", 1, 1, {0}},
      {"B", 2, 1, {0, 1}},
      {"FF", 3, 1, {0, 1, 2}},
      {"BFBF", 3, 1, {0, 1, 0, 1, 2}},
      {"BFBFB", 3, 2, {0, 1, 0, 1, 2, 1}},
      {"FBFBF", 3, 3, {0, 1, 0, 2, 0, 2}},
      {"FFFF", 5, 1, {0, 1, 2, 3, 4}},
      {"BFFBF", 4, 10, {0, 1, 0, 2, 1, 3}},
  };
  for (const Expected& expected : cases) {
    CAPTURE(expected.flags);
    const OrientedPath path = OrientedPath::parse(expected.flags);
    const OracleResult result = oracle_min_coloring(path);
    CHECK(result.min_colors == expected.min_colors);
    CHECK(result.explored == expected.explored);
    CHECK(result.witness.assignment == expected.witness);
    CHECK(result.witness.num_colors == expected.min_colors);
    CHECK(validate(path, result.witness).valid);
  }
}

TEST_CASE("oracle_chromatic is the count from the full search") {
  for (const char* flags : {"BFBF", "FFB", "BBBB"}) {
    const OrientedPath path = OrientedPath::parse(flags);
    CHECK(oracle_chromatic(path) == oracle_min_coloring(path).min_colors);
  }
}

TEST_CASE("the witness always validates") {
  for (int n = 1; n <= 8; ++n) {
    enumerate_orientations(n, [](const OrientedPath& path) {
      const OracleResult result = oracle_min_coloring(path);
      CHECK(validate(path, result.witness).valid);
      CHECK(result.explored >= 1);
    });
  }
}

TEST_CASE("pruning never changes the minimum") {
  OracleOptions unpruned;
  unpruned.prune_properness = false;
  unpruned.prune_domination = false;
  for (int n = 1; n <= 7; ++n) {
    enumerate_orientations(n, [&](const OrientedPath& path) {
      const OracleResult fast = oracle_min_coloring(path);
      const OracleResult slow = oracle_min_coloring(path, unpruned);
      CHECK(fast.min_colors == slow.min_colors);
      CHECK(fast.explored <= slow.explored);
    });
  }
}

TEST_CASE("with prunes off the canonical enumeration counts set partitions") {
  // One restricted-growth string per set partition of the vertices.
  const std::uint64_t bell[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  OracleOptions off;
  off.prune_properness = false;
  off.prune_domination = false;
  for (int n = 1; n <= 8; ++n) {
    const OrientedPath path = random_orientation(n, 7);
    const std::uint64_t count = for_each_canonical_assignment(
        path, n, off, [](const std::vector<int>&) { return false; });
    CHECK(count == bell[n - 1]);
  }
}

TEST_CASE("the visitor can stop the enumeration early") {
  OracleOptions off;
  off.prune_properness = false;
  off.prune_domination = false;
  const OrientedPath path = random_orientation(6, 7);
  const std::uint64_t count = for_each_canonical_assignment(
      path, 6, off, [](const std::vector<int>&) { return true; });
  CHECK(count == 1);
}

TEST_CASE("the size guard rejects large instances") {
  const OrientedPath path = random_orientation(17, 1);
  CHECK_THROWS_AS(oracle_min_coloring(path), std::invalid_argument);

  OracleOptions tight;
  tight.max_n = 4;
  CHECK_THROWS_AS(oracle_min_coloring(OrientedPath::parse("BFBF"), tight),
                  std::invalid_argument);
  CHECK_NOTHROW(oracle_min_coloring(OrientedPath::parse("BFB"), tight));
}

TEST_CASE("oracle agrees with the single-pass algorithm on larger spot checks") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const OrientedPath path = random_orientation(13, seed);
    CAPTURE(path.format());
    CHECK(oracle_chromatic(path) == run_mdc(path).num_colors);
  }
}
