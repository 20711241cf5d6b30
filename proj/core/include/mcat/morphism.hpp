#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "mcat/complex_matrix.hpp"
#include "mcat/object.hpp"

namespace mcat {

/**
 * A process between two objects of one instance: a total function table
 * between finite sets, or a dense complex matrix of shape
 * (dim cod x dim dom). Tables are stored as codomain indices in domain
 * order. Immutable after construction; every operation returns new values.
 */
class Morphism {
 public:
  /// FinSet morphism. Validates totality and codomain range.
  static Morphism function(Object dom, Object cod, std::vector<std::size_t> table);
  /// Vec morphism. Validates the (dim cod x dim dom) shape and finiteness.
  static Morphism linear(Object dom, Object cod, ComplexMatrix matrix);

  const Object& dom() const { return dom_; }
  const Object& cod() const { return cod_; }
  const InstanceKey& key() const { return dom_.key(); }

  bool is_function() const { return std::holds_alternative<std::vector<std::size_t>>(body_); }
  const std::vector<std::size_t>& table() const;
  const ComplexMatrix& matrix() const;

  /// Image of one domain element by index.
  std::size_t apply(std::size_t dom_index) const { return table()[dom_index]; }

  bool operator==(const Morphism& other) const;

  std::string str() const;

 private:
  Morphism(Object dom, Object cod, std::variant<std::vector<std::size_t>, ComplexMatrix> body)
      : dom_(std::move(dom)), cod_(std::move(cod)), body_(std::move(body)) {}

  Object dom_, cod_;
  std::variant<std::vector<std::size_t>, ComplexMatrix> body_;
};

/// True when m is the identity morphism on its (shared) endpoint object.
/// For Vec morphisms the entrywise check is scale-aware with `tolerance`.
bool is_identity(const Morphism& m, double tolerance = 0.0);

/// Bijection test for tables; for matrices true iff square and invertible
/// within `tolerance` (both inverse products verified).
bool is_isomorphism(const Morphism& m, double tolerance = 0.0);

/// Max entrywise deviation between two parallel morphisms (0/1 for tables).
double deviation(const Morphism& a, const Morphism& b);

}  // namespace mcat
