#include "mcat/decomposition.hpp"

namespace mcat {

const char* to_string(Policy policy) {
  switch (policy) {
    case Policy::PaperLiteral: return "paper-literal";
    case Policy::Nondegenerate: return "nondegenerate";
    case Policy::Essential: return "essential";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Decomposable: return "decomposable";
    case Verdict::NotDecomposable: return "not_decomposable";
    case Verdict::DegenerateOnly: return "degenerate_only";
  }
  return "?";
}

}  // namespace mcat
