#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcat/label.hpp"

namespace mcat {

enum class CategoryId { FinSet, Vec };
enum class ProductKind { Coproduct, Product, DirectSum, Tensor };

const char* to_string(CategoryId id);
const char* to_string(ProductKind kind);
bool product_matches_category(CategoryId id, ProductKind kind);

/** Identifies the monoidal instance an object or morphism belongs to. */
struct InstanceKey {
  CategoryId category;
  ProductKind product;
  bool operator==(const InstanceKey& other) const = default;
};

/**
 * An object of one of the concrete instances: an ordered finite set of
 * distinct labels (FinSet) or a nonnegative dimension (Vec).
 *
 * Element order / basis order is part of the object. All monoidal
 * constructions are left-factor major, which makes the Vec tensor structure
 * strict (associators are identity matrices) and keeps every FinSet
 * structural isomorphism an identity on positions.
 */
class Object {
 public:
  /// FinSet object; throws InstanceError on a Vec key, Error on duplicate labels.
  static Object finite_set(InstanceKey key, std::vector<Label> elements);
  /// Vec object of the given dimension (zero is legal).
  static Object space(InstanceKey key, std::size_t dim);

  const InstanceKey& key() const { return key_; }
  bool is_finite_set() const { return key_.category == CategoryId::FinSet; }

  /// Element count (FinSet) or dimension (Vec).
  std::size_t size() const;

  const std::vector<Label>& elements() const;  // FinSet only
  std::size_t dim() const;                     // Vec only

  std::optional<std::size_t> index_of(const Label& label) const;

  bool operator==(const Object& other) const;

  /// Display form: "{a1,a2}" or "C^3".
  std::string str() const;

 private:
  Object(InstanceKey key, std::variant<std::vector<Label>, std::size_t> payload)
      : key_(key), payload_(std::move(payload)) {}

  InstanceKey key_;
  std::variant<std::vector<Label>, std::size_t> payload_;
};

}  // namespace mcat
