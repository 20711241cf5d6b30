#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mcat/instance.hpp"

namespace mcat::doc {

/**
 * The JSON input format of the command-line tool (schema_version "1"):
 * one instance, named objects (label arrays for finset, dimensions for vec),
 * named morphisms (label->label tables or nested row-major matrices of
 * [re, im] pairs), and optional named splits for fixed-split queries.
 *
 * Vec dimensions and finset cardinalities are capped at 64 at parse time.
 */
struct Document {
  std::string schema_version = "1";
  Instance instance = Instance::finset_coproduct();
  std::map<std::string, Object> objects;
  std::map<std::string, Morphism> morphisms;

  struct Split {
    std::optional<std::pair<std::string, std::string>> dom;
    std::optional<std::pair<std::string, std::string>> cod;
    std::optional<std::string> dom_iso;
    std::optional<std::string> cod_iso;
    bool operator==(const Split&) const = default;
  };
  std::map<std::string, Split> splits;

  bool operator==(const Document& other) const;
};

/// Parse and validate UTF-8 JSON text; diagnostics name the offending path.
Document parse_document(const std::string& text);

/// Serialize back to document JSON. serialize/parse round-trips losslessly.
std::string serialize_document(const Document& document, int indent = 2);

}  // namespace mcat::doc
