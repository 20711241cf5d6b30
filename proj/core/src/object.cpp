#include "mcat/object.hpp"

#include <algorithm>
#include <set>

#include "mcat/errors.hpp"

namespace mcat {

const char* to_string(CategoryId id) {
  switch (id) {
    case CategoryId::FinSet: return "finset";
    case CategoryId::Vec: return "vec";
  }
  return "?";
}

const char* to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Coproduct: return "coproduct";
    case ProductKind::Product: return "product";
    case ProductKind::DirectSum: return "directsum";
    case ProductKind::Tensor: return "tensor";
  }
  return "?";
}

bool product_matches_category(CategoryId id, ProductKind kind) {
  if (id == CategoryId::FinSet)
    return kind == ProductKind::Coproduct || kind == ProductKind::Product;
  return kind == ProductKind::DirectSum || kind == ProductKind::Tensor;
}

Object Object::finite_set(InstanceKey key, std::vector<Label> elements) {
  if (key.category != CategoryId::FinSet)
    throw InstanceError("finite-set payload requires a finset instance key");
  std::set<Label> seen;
  for (const auto& label : elements) {
    if (!seen.insert(label).second)
      throw Error("duplicate element label '" + label.str() + "' in object");
  }
  return Object(key, std::move(elements));
}

Object Object::space(InstanceKey key, std::size_t dim) {
  if (key.category != CategoryId::Vec)
    throw InstanceError("dimension payload requires a vec instance key");
  return Object(key, dim);
}

std::size_t Object::size() const {
  if (is_finite_set()) return std::get<std::vector<Label>>(payload_).size();
  return std::get<std::size_t>(payload_);
}

const std::vector<Label>& Object::elements() const {
  return std::get<std::vector<Label>>(payload_);
}

std::size_t Object::dim() const { return std::get<std::size_t>(payload_); }

std::optional<std::size_t> Object::index_of(const Label& label) const {
  const auto& labels = elements();
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

bool Object::operator==(const Object& other) const {
  return key_ == other.key_ && payload_ == other.payload_;
}

std::string Object::str() const {
  if (!is_finite_set()) return "C^" + std::to_string(dim());
  std::string out = "{";
  const auto& labels = elements();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i].str();
  }
  out += "}";
  return out;
}

}  // namespace mcat
