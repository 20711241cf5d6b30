#pragma once

#include <optional>
#include <string>
#include <utility>

#include "mcat/morphism.hpp"

namespace mcat {

/**
 * Acceptance policy for decomposition witnesses. Reading non-triviality as
 * nothing more than "no identity factors" admits degenerate witnesses through
 * unit objects, empty domains, and scalar factors; the ladder below tightens it.
 *
 *  - PaperLiteral: factors must not be identity morphisms; nothing else.
 *  - Nondegenerate: additionally rejects witnesses that exploit unit objects,
 *    empty domains/codomains, or scalar factors. Default everywhere.
 *  - Essential: additionally rejects witnesses whose factors are
 *    isomorphisms doing no real work (see each operation for the concrete
 *    criterion in its instance).
 */
enum class Policy { PaperLiteral, Nondegenerate, Essential };

enum class Verdict { Decomposable, NotDecomposable, DegenerateOnly };

const char* to_string(Policy policy);
const char* to_string(Verdict verdict);

/**
 * Result of a decomposability query: the verdict, the policy under which it
 * holds, witness factors, and the isomorphisms of the commuting square
 * (domain side first). Factors may be present on a negative verdict when a
 * rejected candidate is still informative; when the verdict is Decomposable,
 * replaying the witness through the defining diagram commutes.
 */
struct DecompositionOutcome {
  Verdict verdict = Verdict::NotDecomposable;
  Policy policy = Policy::Nondegenerate;
  std::optional<std::pair<Morphism, Morphism>> factors;
  std::optional<std::pair<Morphism, Morphism>> witness_isos;
  std::string detail;

  bool decomposable() const { return verdict == Verdict::Decomposable; }
};

}  // namespace mcat
