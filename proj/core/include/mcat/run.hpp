#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mcat/document.hpp"
#include "mcat/report.hpp"

namespace mcat::doc {

/**
 * A fully parsed command line. The front end fills this in; run() performs
 * the dispatch so the whole pipeline is exercisable without a process.
 */
struct Command {
  std::string name;  // check-laws | decompose-seq | decompose-par | entangled
                     // | coupling | solve | diagram
  std::string morphism;
  Policy policy = Policy::Nondegenerate;
  std::string mode;   // fixed | up-to-iso | search | "" (instance default)
  std::string split;  // named split for fixed-split queries
  std::string rhs;    // right-hand-side morphism name for solve
  std::string show = "morphism";  // diagram shape: morphism | seq | par
  std::uint64_t seed = 1;
  std::size_t max_card = 8;
  std::size_t trials = 200;
  std::optional<std::size_t> min_size;
  std::optional<std::size_t> max_size;
  std::optional<double> tolerance_override;  // resolved flag/env override
  std::string format = "text";               // text | json
};

/**
 * Execute a command against a document. Returns the report with its exit
 * code: 0 = decomposable/pass, 1 = a successful computation with a negative
 * verdict. Usage and input errors are thrown (UsageError and friends) and
 * map to exit 2 in the front end.
 */
Report run(const Command& command, const Document& document);

}  // namespace mcat::doc
