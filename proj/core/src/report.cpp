#include "mcat/report.hpp"

#include <limits>
#include <sstream>

namespace mcat::doc {

using nlohmann::json;

nlohmann::json object_to_json(const Object& object) {
  json out;
  if (object.is_finite_set()) {
    json labels = json::array();
    for (const auto& label : object.elements()) labels.push_back(label.str());
    out["elements"] = std::move(labels);
  } else {
    out["dim"] = object.dim();
  }
  return out;
}

nlohmann::json morphism_to_json(const Morphism& morphism) {
  json out;
  out["dom"] = object_to_json(morphism.dom());
  out["cod"] = object_to_json(morphism.cod());
  if (morphism.is_function()) {
    json table = json::object();
    for (std::size_t i = 0; i < morphism.table().size(); ++i)
      table[morphism.dom().elements()[i].str()] =
          morphism.cod().elements()[morphism.table()[i]].str();
    out["table"] = std::move(table);
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < morphism.matrix().rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < morphism.matrix().cols(); ++j) {
        const Complex& z = morphism.matrix()(i, j);
        row.push_back(json::array({z.real(), z.imag()}));
      }
      rows.push_back(std::move(row));
    }
    out["matrix"] = std::move(rows);
  }
  return out;
}

nlohmann::json outcome_to_json(const DecompositionOutcome& outcome) {
  json out;
  out["verdict"] = to_string(outcome.verdict);
  out["policy"] = to_string(outcome.policy);
  if (!outcome.detail.empty()) out["detail"] = outcome.detail;
  if (outcome.factors) {
    out["factors"] =
        json::array({morphism_to_json(outcome.factors->first), morphism_to_json(outcome.factors->second)});
  }
  if (outcome.witness_isos) {
    out["witness_isos"] = json::array({morphism_to_json(outcome.witness_isos->first),
                                       morphism_to_json(outcome.witness_isos->second)});
  }
  return out;
}

nlohmann::json law_report_to_json(const lawcheck::LawReport& report) {
  json out;
  out["law"] = lawcheck::to_string(report.law);
  out["trials"] = report.trials;
  out["passed"] = report.passed();
  // DBL_MAX marks a structural mismatch; keep JSON portable.
  out["max_deviation"] =
      report.max_deviation == std::numeric_limits<double>::max() ? -1.0 : report.max_deviation;
  json failures = json::array();
  for (const auto& failure : report.failures) {
    json f;
    f["inputs"] = failure.inputs;
    f["left"] = failure.left;
    f["right"] = failure.right;
    f["deviation"] =
        failure.deviation == std::numeric_limits<double>::max() ? -1.0 : failure.deviation;
    failures.push_back(std::move(f));
  }
  out["failures"] = std::move(failures);
  return out;
}

std::string Report::to_json_text() const { return body.dump(2) + "\n"; }

namespace {

void render_value(std::ostream& os, const std::string& key, const json& value, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (value.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) render_value(os, k, v, depth + 1);
  } else if (value.is_array() && !value.empty() && value[0].is_object()) {
    os << pad << key << ":\n";
    std::size_t index = 0;
    for (const auto& v : value) render_value(os, "[" + std::to_string(index++) + "]", v, depth + 1);
  } else {
    os << pad << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& [key, value] : body.items()) render_value(os, key, value, 0);
  return os.str();
}

}  // namespace mcat::doc
