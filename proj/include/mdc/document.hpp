#pragma once

#include <json.hpp>

#include "mdc/coloring.hpp"
#include "mdc/exact_oracle.hpp"
#include "mdc/oriented_path.hpp"
#include "mdc/validator.hpp"

namespace mdc {

// JSON documents for the command-line front end. Vertex and edge ids are
// 1-based here and only here; everything else in the library is 0-based.

// {n, orientation, colors, assignment, classes, star_color?, valid}
// `valid` is recomputed by the validator, never copied from the producer.
nlohmann::json coloring_document(const OrientedPath& path,
                                 const Coloring& coloring);

// {n, orientation, proper, dominator, valid, properness_violations,
//  domination_violations}
nlohmann::json validation_document(const OrientedPath& path,
                                   const ValidationReport& report);

// {n, orientation, min_colors, witness_assignment, explored,
//  algorithm_colors, matches}
nlohmann::json oracle_document(const OrientedPath& path,
                               const OracleResult& result,
                               int algorithm_colors);

}  // namespace mdc
