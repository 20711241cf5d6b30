#pragma once

#include <string>

#include "mcat/decomposition.hpp"
#include "mcat/document.hpp"

namespace mcat::doc {

/**
 * DOT rendering of process diagrams: objects as nodes, morphisms as labeled
 * edges. `show` selects the shape: "morphism" (plain arrow), "seq" (the
 * factorization triangle through the sequential witness) or "par" (the
 * parallel-decomposition square, isomorphism edges labeled "~"). Output is
 * byte-deterministic: node and edge lines are emitted sorted.
 * Throws UsageError on an unknown morphism name.
 */
std::string emit_dot(const Document& document, const std::string& morphism_name,
                     const std::string& show = "morphism",
                     Policy policy = Policy::Nondegenerate);

}  // namespace mcat::doc
