#include "mdc/document.hpp"

#include <string>

namespace mdc {

namespace {

nlohmann::json one_based(const std::vector<int>& ids) {
  nlohmann::json result = nlohmann::json::array();
  for (int id : ids) result.push_back(id + 1);
  return result;
}

}  // namespace

nlohmann::json coloring_document(const OrientedPath& path,
                                 const Coloring& coloring) {
  nlohmann::json doc;
  doc["n"] = path.order();
  doc["orientation"] = path.format();
  doc["colors"] = coloring.num_colors;
  doc["assignment"] = coloring.assignment;
  nlohmann::json classes = nlohmann::json::object();
  const std::vector<std::vector<int>> by_color = coloring.classes();
  for (std::size_t c = 0; c < by_color.size(); ++c) {
    classes[std::to_string(c)] = one_based(by_color[c]);
  }
  doc["classes"] = classes;
  if (coloring.star_color.has_value()) doc["star_color"] = *coloring.star_color;
  doc["valid"] = validate(path, coloring).valid;
  return doc;
}

nlohmann::json validation_document(const OrientedPath& path,
                                   const ValidationReport& report) {
  nlohmann::json doc;
  doc["n"] = path.order();
  doc["orientation"] = path.format();
  doc["proper"] = report.proper;
  doc["dominator"] = report.dominator;
  doc["valid"] = report.valid;
  doc["properness_violations"] = one_based(report.properness_violations);
  doc["domination_violations"] = one_based(report.domination_violations);
  return doc;
}

nlohmann::json oracle_document(const OrientedPath& path,
                               const OracleResult& result,
                               int algorithm_colors) {
  nlohmann::json doc;
  doc["n"] = path.order();
  doc["orientation"] = path.format();
  doc["min_colors"] = result.min_colors;
  doc["witness_assignment"] = result.witness.assignment;
  doc["explored"] = result.explored;
  doc["algorithm_colors"] = algorithm_colors;
  doc["matches"] = algorithm_colors == result.min_colors;
  return doc;
}

}  // namespace mdc
