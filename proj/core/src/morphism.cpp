#include "mcat/morphism.hpp"

#include <numeric>
#include <sstream>

#include "detail.hpp"
#include "mcat/errors.hpp"

namespace mcat {

Morphism Morphism::function(Object dom, Object cod, std::vector<std::size_t> table) {
  if (!(dom.key() == cod.key()))
    throw InstanceError("morphism endpoints belong to different instances");
  if (dom.key().category != CategoryId::FinSet)
    throw InstanceError("function table requires finset objects");
  if (table.size() != dom.size())
    throw Error("function table has " + std::to_string(table.size()) + " entries for a domain of " +
                std::to_string(dom.size()));
  for (std::size_t value : table) {
    if (value >= cod.size())
      throw Error("function table value " + std::to_string(value) +
                  " outside codomain of size " + std::to_string(cod.size()));
  }
  return Morphism(std::move(dom), std::move(cod), std::move(table));
}

Morphism Morphism::linear(Object dom, Object cod, ComplexMatrix matrix) {
  if (!(dom.key() == cod.key()))
    throw InstanceError("morphism endpoints belong to different instances");
  if (dom.key().category != CategoryId::Vec)
    throw InstanceError("matrix body requires vec objects");
  if (matrix.rows() != cod.dim() || matrix.cols() != dom.dim())
    throw ShapeError("matrix shape " + std::to_string(matrix.rows()) + "x" +
                     std::to_string(matrix.cols()) + " does not match (dim cod, dim dom) = (" +
                     std::to_string(cod.dim()) + "," + std::to_string(dom.dim()) + ")");
  if (!matrix.all_finite()) throw Error("matrix entries must be finite");
  return Morphism(std::move(dom), std::move(cod), std::move(matrix));
}

const std::vector<std::size_t>& Morphism::table() const {
  return std::get<std::vector<std::size_t>>(body_);
}

const ComplexMatrix& Morphism::matrix() const { return std::get<ComplexMatrix>(body_); }

bool Morphism::operator==(const Morphism& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && body_ == other.body_;
}

std::string Morphism::str() const {
  std::ostringstream os;
  os << dom_.str() << " -> " << cod_.str() << " ";
  if (is_function()) {
    os << "[";
    const auto& t = table();
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) os << ", ";
      os << dom_.elements()[i].str() << ":" << cod_.elements()[t[i]].str();
    }
    os << "]";
  } else {
    os << matrix().str();
  }
  return os.str();
}

bool is_identity(const Morphism& m, double tolerance) {
  if (!(m.dom() == m.cod())) return false;
  if (m.is_function()) {
    const auto& t = m.table();
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] != i) return false;
    return true;
  }
  return ComplexMatrix::approx_equal(m.matrix(), ComplexMatrix::identity(m.dom().dim()),
                                     tolerance);
}

namespace detail {

std::optional<ComplexMatrix> gauss_inverse(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        pivot = r;
      }
    }
    if (best == 0.0) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Complex d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex factor = a(r, col);
      if (factor == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace detail

bool is_isomorphism(const Morphism& m, double tolerance) {
  if (m.is_function()) {
    if (m.dom().size() != m.cod().size()) return false;
    std::vector<bool> hit(m.cod().size(), false);
    for (std::size_t value : m.table()) {
      if (hit[value]) return false;
      hit[value] = true;
    }
    return true;
  }
  const ComplexMatrix& a = m.matrix();
  if (a.rows() != a.cols()) return false;
  if (a.rows() == 0) return true;  // the identity on the zero space
  auto inv = detail::gauss_inverse(a);
  if (!inv) return false;
  const ComplexMatrix id = ComplexMatrix::identity(a.rows());
  if (!inv->all_finite()) return false;
  return ComplexMatrix::approx_equal(a * *inv, id, tolerance) &&
         ComplexMatrix::approx_equal(*inv * a, id, tolerance);
}

double deviation(const Morphism& a, const Morphism& b) {
  if (a.is_function() != b.is_function())
    throw InstanceError("deviation between morphisms of different carriers");
  if (a.is_function()) {
    if (a.table().size() != b.table().size()) return 1.0;
    double out = 0.0;
    for (std::size_t i = 0; i < a.table().size(); ++i)
      if (a.table()[i] != b.table()[i]) out = 1.0;
    return out;
  }
  return ComplexMatrix::max_abs_diff(a.matrix(), b.matrix());
}

}  // namespace mcat
