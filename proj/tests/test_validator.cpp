#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "mdc/mdc_algorithm.hpp"
#include "mdc/oriented_path.hpp"
#include "mdc/validator.hpp"

using namespace mdc;

TEST_CASE("a correct coloring passes with no violations") {
  const OrientedPath path = OrientedPath::parse("BFBF");
  const ValidationReport report = validate(path, run_mdc(path));
  CHECK(report.proper);
  CHECK(report.dominator);
  CHECK(report.valid);
  CHECK(report.properness_violations.empty());
  CHECK(report.domination_violations.empty());
}

TEST_CASE("equal colors across an edge are reported by 0-based edge id") {
  const OrientedPath path = OrientedPath::parse("BFBF");
  const ValidationReport report = validate(path, {1, 1, 2, 0, 1});
  CHECK(!report.proper);
  CHECK(report.dominator);  // the two conditions are independent
  CHECK(!report.valid);
  CHECK(report.properness_violations == std::vector<int>{0});
  CHECK(report.domination_violations.empty());
}

TEST_CASE("a proper coloring can still fail domination") {
  // Both out-degree-2 vertices see only fragments of classes.
  const OrientedPath path = OrientedPath::parse("BFBF");
  const ValidationReport report = validate(path, {0, 1, 0, 2, 0});
  CHECK(report.proper);
  CHECK(!report.dominator);
  CHECK(!report.valid);
  CHECK(report.properness_violations.empty());
  CHECK(report.domination_violations == std::vector<int>{1, 3});
}

TEST_CASE("out-degree-0 vertices are exempt from domination") {
  // v1 has out-degree 0 yet dominates nothing; the coloring is still valid.
  const OrientedPath path = OrientedPath::parse("F");
  const ValidationReport report = validate(path, {0, 1});
  CHECK(report.valid);
  CHECK(report.domination_violations.empty());
}

TEST_CASE("all-singleton colorings are always valid") {
  for (const char* flags : {"", "F", "BB", "FBFB", "BFFBFFB"}) {
    const OrientedPath path = OrientedPath::parse(flags);
    std::vector<int> identity(static_cast<std::size_t>(path.order()));
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(validate(path, identity).valid);
  }
}

TEST_CASE("a constant coloring on n >= 2 is improper") {
  const OrientedPath path = OrientedPath::parse("FB");
  const ValidationReport report = validate(path, {0, 0, 0});
  CHECK(!report.proper);
  CHECK(report.properness_violations == std::vector<int>{0, 1});
}

TEST_CASE("color ids need not be dense") {
  const OrientedPath path = OrientedPath::parse("F");
  CHECK(validate(path, {5, 9}).valid);
}

TEST_CASE("malformed assignments are rejected") {
  const OrientedPath path = OrientedPath::parse("BFBF");
  CHECK_THROWS_AS(validate(path, {0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(path, {0, 1, 0, 1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(path, {0, 1, 0, -1, 2}), std::invalid_argument);
}

TEST_CASE("dominated_classes lists the classes inside the out-neighborhood") {
  const OrientedPath path = OrientedPath::parse("BFBF");
  const Coloring coloring = run_mdc(path);  // {1,0,2,0,1}
  CHECK(dominated_classes(path, coloring, 1) == std::vector<int>{2});
  CHECK(dominated_classes(path, coloring, 0).empty());  // out-degree 0
  CHECK(dominated_classes(path, coloring, 3) == std::vector<int>{2});
}

TEST_CASE("is_proper ignores orientation") {
  const std::vector<int> assignment = {0, 1, 0, 1, 0};
  CHECK(is_proper(OrientedPath::parse("FFFF"), assignment));
  CHECK(is_proper(OrientedPath::parse("BBBB"), assignment));
  CHECK(!is_proper(OrientedPath::parse("FFFF"), {0, 0, 1, 0, 1}));
}

TEST_CASE("the Coloring overload agrees with the raw assignment overload") {
  const OrientedPath path = OrientedPath::parse("BFFBF");
  const Coloring coloring = run_mdc(path);
  const ValidationReport a = validate(path, coloring);
  const ValidationReport b = validate(path, coloring.assignment);
  CHECK(a.valid == b.valid);
  CHECK(a.proper == b.proper);
  CHECK(a.dominator == b.dominator);
}
