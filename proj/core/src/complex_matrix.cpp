#include "mcat/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mcat/errors.hpp"

namespace mcat {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("matrix entry count " + std::to_string(entries_.size()) +
                     " does not match shape " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged row in matrix literal");
    std::size_t j = 0;
    for (const auto& value : row) m(i, j++) = value;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& z : entries_) best = std::max(best, std::abs(z));
  return best;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw ShapeError("matrix difference of mismatched shapes " + std::to_string(a.rows_) + "x" +
                     std::to_string(a.cols_) + " and " + std::to_string(b.rows_) + "x" +
                     std::to_string(b.cols_));
  }
  double best = 0.0;
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    best = std::max(best, std::abs(a.entries_[k] - b.entries_[k]));
  return best;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  double scale = 1.0 + std::max(a.max_abs(), b.max_abs());
  return max_abs_diff(a, b) <= tol * scale;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          out(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix ComplexMatrix::direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
  return out;
}

std::string ComplexMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      const Complex& z = (*this)(i, j);
      os << z.real();
      if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    }
  }
  os << "]";
  return os.str();
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product inner dimensions disagree: " + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

}  // namespace mcat
