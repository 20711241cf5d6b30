#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mcat/decomposition.hpp"
#include "mcat/lawcheck.hpp"

namespace mcat::doc {

/**
 * A command report: the command echo plus verdicts, values, witnesses, the
 * policy and tolerances used. The body is a JSON object with sorted keys so
 * serialized reports are byte-deterministic for a fixed document, flags and
 * seed; wall-clock timing is deliberately kept out of it and goes to the
 * diagnostics channel instead.
 */
struct Report {
  nlohmann::json body = nlohmann::json::object();
  int exit_code = 0;

  std::string to_json_text() const;  // pretty JSON, trailing newline
  std::string to_text() const;       // human-readable rendering
};

// Serialization helpers shared by reports and the DOT emitter.
nlohmann::json object_to_json(const Object& object);
nlohmann::json morphism_to_json(const Morphism& morphism);
nlohmann::json outcome_to_json(const DecompositionOutcome& outcome);
nlohmann::json law_report_to_json(const lawcheck::LawReport& report);

}  // namespace mcat::doc
