#pragma once

#include <optional>
#include <vector>

#include "mcat/morphism.hpp"
#include "mcat/object.hpp"

namespace mcat {

/**
 * A category paired with one monoidal structure and the tolerance used for
 * all numeric equality in that instance. FinSet instances compare exactly
 * (tolerance 0); Vec instances compare entrywise within a scale-aware
 * tolerance. The unit object is canonical per instance.
 */
class Instance {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  Instance(CategoryId category, ProductKind product, double tolerance);

  static Instance finset_coproduct();
  static Instance finset_product();
  static Instance vec_directsum(double tolerance = kDefaultTolerance);
  static Instance vec_tensor(double tolerance = kDefaultTolerance);

  const InstanceKey& key() const { return key_; }
  CategoryId category() const { return key_.category; }
  ProductKind product() const { return key_.product; }
  double tolerance() const { return tolerance_; }

  /// Canonical unit object: empty set, singleton {*}, dim 0, or dim 1.
  Object unit() const;

  bool operator==(const Instance& other) const = default;

 private:
  InstanceKey key_;
  double tolerance_;
};

/// Canonical unit object for an instance key.
Object unit_object(InstanceKey key);

// ---------------------------------------------------------------------------
// Core category operations. Objects and morphisms carry their
// instance key; operations validate it and throw InstanceError on mismatch.
// ---------------------------------------------------------------------------

/// id_A: table i -> i, or the unit matrix.
Morphism identity(const Object& a);

/// g after f. Table chaining or matrix multiplication.
/// Throws ComposeError unless cod(f) equals dom(g).
Morphism compose(const Morphism& g, const Morphism& f);

// ---------------------------------------------------------------------------
// Monoidal structure. The product kind comes from the objects' key.
// ---------------------------------------------------------------------------

/// Object part of the monoidal product: tagged disjoint union, cartesian
/// pairs in row-major order, dimension sum, or dimension product.
Object mproduct_obj(const Object& a, const Object& b);

/// Morphism part: tagged union of tables, pairwise application,
/// block-diagonal matrix, or Kronecker product (left-major indexing).
Morphism mproduct_mor(const Morphism& f, const Morphism& g);

enum class IsoKind { Associator, LeftUnitor, RightUnitor };

const char* to_string(IsoKind kind);

/** A canonical structural isomorphism together with its inverse. */
struct StructuralIso {
  IsoKind kind;
  Morphism forward;
  Morphism backward;
};

/// alpha_{A,B,C}: (A x B) x C -> A x (B x C). An identity on positions
/// (FinSet retagging bijection; Vec identity matrix).
StructuralIso associator(const Object& a, const Object& b, const Object& c);
/// lambda_A: I x A -> A.
StructuralIso left_unitor(const Object& a);
/// rho_A: A x I -> A.
StructuralIso right_unitor(const Object& a);

// ---------------------------------------------------------------------------
// Isomorphisms and states.
// ---------------------------------------------------------------------------

/// Returns g with g.f = id and f.g = id if one exists within the instance
/// tolerance, else nullopt.
std::optional<Morphism> iso_check(const Instance& instance, const Morphism& f);

/// Embed a point of A as a morphism from the unit object. FinSet form needs
/// the product instance; Vec form needs the tensor instance.
Morphism state_embed(const Object& a, const Label& point);
Morphism state_embed(const Object& a, const std::vector<Complex>& point);

/// Inverse of state_embed; throws StateError when dom(f) is not the unit.
Label state_extract_element(const Morphism& f);
std::vector<Complex> state_extract_vector(const Morphism& f);

/// Equality of parallel morphisms under the instance tolerance.
bool morphism_equal(const Instance& instance, const Morphism& a, const Morphism& b);

}  // namespace mcat
