#include "mcat/instance.hpp"

#include <algorithm>

#include "detail.hpp"
#include "mcat/errors.hpp"

namespace mcat {

Instance::Instance(CategoryId category, ProductKind product, double tolerance)
    : key_{category, product}, tolerance_(tolerance) {
  if (!product_matches_category(category, product))
    throw InstanceError(std::string("product kind '") + to_string(product) +
                        "' does not fit category '" + to_string(category) + "'");
  if (tolerance < 0.0) throw InstanceError("tolerance must be nonnegative");
  if (category == CategoryId::FinSet && tolerance != 0.0)
    throw InstanceError("finset instances require tolerance 0");
}

Instance Instance::finset_coproduct() {
  return Instance(CategoryId::FinSet, ProductKind::Coproduct, 0.0);
}
Instance Instance::finset_product() {
  return Instance(CategoryId::FinSet, ProductKind::Product, 0.0);
}
Instance Instance::vec_directsum(double tolerance) {
  return Instance(CategoryId::Vec, ProductKind::DirectSum, tolerance);
}
Instance Instance::vec_tensor(double tolerance) {
  return Instance(CategoryId::Vec, ProductKind::Tensor, tolerance);
}

Object Instance::unit() const { return unit_object(key_); }

Object unit_object(InstanceKey key) {
  switch (key.product) {
    case ProductKind::Coproduct:
      return Object::finite_set(key, {});
    case ProductKind::Product:
      return Object::finite_set(key, {Label::atom("*")});
    case ProductKind::DirectSum:
      return Object::space(key, 0);
    case ProductKind::Tensor:
      return Object::space(key, 1);
  }
  throw InstanceError("unknown product kind");
}

const char* to_string(IsoKind kind) {
  switch (kind) {
    case IsoKind::Associator: return "associator";
    case IsoKind::LeftUnitor: return "left_unitor";
    case IsoKind::RightUnitor: return "right_unitor";
  }
  return "?";
}

namespace {

void require_same_instance(const InstanceKey& a, const InstanceKey& b, const char* what) {
  if (!(a == b))
    throw InstanceError(std::string(what) + " across different instances: (" +
                        to_string(a.category) + "," + to_string(a.product) + ") vs (" +
                        to_string(b.category) + "," + to_string(b.product) + ")");
}

}  // namespace

Morphism identity(const Object& a) {
  if (a.is_finite_set()) {
    std::vector<std::size_t> table(a.size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
    return Morphism::function(a, a, std::move(table));
  }
  return Morphism::linear(a, a, ComplexMatrix::identity(a.dim()));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  require_same_instance(f.key(), g.key(), "composition");
  if (!(f.cod() == g.dom()))
    throw ComposeError("cannot compose: cod " + f.cod().str() + " differs from dom " +
                       g.dom().str());
  if (f.is_function()) {
    std::vector<std::size_t> table(f.dom().size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = g.table()[f.table()[i]];
    return Morphism::function(f.dom(), g.cod(), std::move(table));
  }
  return Morphism::linear(f.dom(), g.cod(), g.matrix() * f.matrix());
}

Object mproduct_obj(const Object& a, const Object& b) {
  require_same_instance(a.key(), b.key(), "monoidal product");
  switch (a.key().product) {
    case ProductKind::Coproduct: {
      std::vector<Label> labels;
      labels.reserve(a.size() + b.size());
      for (const auto& x : a.elements()) labels.push_back(Label::tagged(x, 1));
      for (const auto& y : b.elements()) labels.push_back(Label::tagged(y, 2));
      return Object::finite_set(a.key(), std::move(labels));
    }
    case ProductKind::Product: {
      std::vector<Label> labels;
      labels.reserve(a.size() * b.size());
      for (const auto& x : a.elements())
        for (const auto& y : b.elements()) labels.push_back(Label::pair(x, y));
      return Object::finite_set(a.key(), std::move(labels));
    }
    case ProductKind::DirectSum:
      return Object::space(a.key(), a.dim() + b.dim());
    case ProductKind::Tensor:
      return Object::space(a.key(), a.dim() * b.dim());
  }
  throw InstanceError("unknown product kind");
}

Morphism mproduct_mor(const Morphism& f, const Morphism& g) {
  require_same_instance(f.key(), g.key(), "monoidal product");
  const Object dom = mproduct_obj(f.dom(), g.dom());
  const Object cod = mproduct_obj(f.cod(), g.cod());
  switch (f.key().product) {
    case ProductKind::Coproduct: {
      std::vector<std::size_t> table;
      table.reserve(dom.size());
      for (std::size_t i = 0; i < f.dom().size(); ++i) table.push_back(f.table()[i]);
      for (std::size_t j = 0; j < g.dom().size(); ++j)
        table.push_back(f.cod().size() + g.table()[j]);
      return Morphism::function(dom, cod, std::move(table));
    }
    case ProductKind::Product: {
      std::vector<std::size_t> table;
      table.reserve(dom.size());
      const std::size_t gcod = g.cod().size();
      for (std::size_t i = 0; i < f.dom().size(); ++i)
        for (std::size_t j = 0; j < g.dom().size(); ++j)
          table.push_back(f.table()[i] * gcod + g.table()[j]);
      return Morphism::function(dom, cod, std::move(table));
    }
    case ProductKind::DirectSum:
      return Morphism::linear(dom, cod, ComplexMatrix::direct_sum(f.matrix(), g.matrix()));
    case ProductKind::Tensor:
      return Morphism::linear(dom, cod, ComplexMatrix::kron(f.matrix(), g.matrix()));
  }
  throw InstanceError("unknown product kind");
}

namespace {

// All structural isomorphisms are identities on positions under left-major
// ordering; only the endpoint objects differ.
StructuralIso positional_iso(IsoKind kind, const Object& from, const Object& to) {
  if (from.is_finite_set()) {
    std::vector<std::size_t> table(from.size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
    auto forward = Morphism::function(from, to, table);
    auto backward = Morphism::function(to, from, std::move(table));
    return StructuralIso{kind, std::move(forward), std::move(backward)};
  }
  auto eye = ComplexMatrix::identity(from.dim());
  auto forward = Morphism::linear(from, to, eye);
  auto backward = Morphism::linear(to, from, eye);
  return StructuralIso{kind, std::move(forward), std::move(backward)};
}

}  // namespace

StructuralIso associator(const Object& a, const Object& b, const Object& c) {
  require_same_instance(a.key(), b.key(), "associator");
  require_same_instance(a.key(), c.key(), "associator");
  return positional_iso(IsoKind::Associator, mproduct_obj(mproduct_obj(a, b), c),
                        mproduct_obj(a, mproduct_obj(b, c)));
}

StructuralIso left_unitor(const Object& a) {
  return positional_iso(IsoKind::LeftUnitor, mproduct_obj(unit_object(a.key()), a), a);
}

StructuralIso right_unitor(const Object& a) {
  return positional_iso(IsoKind::RightUnitor, mproduct_obj(a, unit_object(a.key())), a);
}

std::optional<Morphism> iso_check(const Instance& instance, const Morphism& f) {
  require_same_instance(instance.key(), f.key(), "iso_check");
  if (f.is_function()) {
    if (f.dom().size() != f.cod().size()) return std::nullopt;
    std::vector<std::size_t> inverse(f.cod().size(), 0);
    std::vector<bool> hit(f.cod().size(), false);
    for (std::size_t i = 0; i < f.table().size(); ++i) {
      std::size_t value = f.table()[i];
      if (hit[value]) return std::nullopt;
      hit[value] = true;
      inverse[value] = i;
    }
    return Morphism::function(f.cod(), f.dom(), std::move(inverse));
  }
  const ComplexMatrix& m = f.matrix();
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return Morphism::linear(f.cod(), f.dom(), ComplexMatrix());
  auto inv = detail::gauss_inverse(m);
  if (!inv || !inv->all_finite()) return std::nullopt;
  const ComplexMatrix id = ComplexMatrix::identity(m.rows());
  if (!ComplexMatrix::approx_equal(m * *inv, id, instance.tolerance()) ||
      !ComplexMatrix::approx_equal(*inv * m, id, instance.tolerance()))
    return std::nullopt;
  return Morphism::linear(f.cod(), f.dom(), std::move(*inv));
}

Morphism state_embed(const Object& a, const Label& point) {
  if (a.key().category != CategoryId::FinSet || a.key().product != ProductKind::Product)
    throw StateError("element states live in the (finset, product) instance");
  auto index = a.index_of(point);
  if (!index) throw StateError("point '" + point.str() + "' is not an element of " + a.str());
  return Morphism::function(unit_object(a.key()), a, {*index});
}

Morphism state_embed(const Object& a, const std::vector<Complex>& point) {
  if (a.key().category != CategoryId::Vec || a.key().product != ProductKind::Tensor)
    throw StateError("vector states live in the (vec, tensor) instance");
  if (point.size() != a.dim())
    throw ShapeError("state vector length " + std::to_string(point.size()) +
                     " does not match dimension " + std::to_string(a.dim()));
  return Morphism::linear(unit_object(a.key()), a, ComplexMatrix(a.dim(), 1, point));
}

Label state_extract_element(const Morphism& f) {
  if (!f.is_function() || f.key().product != ProductKind::Product ||
      !(f.dom() == unit_object(f.key())))
    throw StateError("state_extract requires a (finset, product) morphism from the unit object");
  return f.cod().elements()[f.table()[0]];
}

std::vector<Complex> state_extract_vector(const Morphism& f) {
  if (f.is_function() || f.key().product != ProductKind::Tensor ||
      !(f.dom() == unit_object(f.key())))
    throw StateError("state_extract requires a (vec, tensor) morphism from the unit object");
  return f.matrix().entries();
}

bool morphism_equal(const Instance& instance, const Morphism& a, const Morphism& b) {
  require_same_instance(instance.key(), a.key(), "morphism_equal");
  require_same_instance(instance.key(), b.key(), "morphism_equal");
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) return false;
  if (a.is_function()) return a.table() == b.table();
  return ComplexMatrix::approx_equal(a.matrix(), b.matrix(), instance.tolerance());
}

}  // namespace mcat
