#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mcat {

using Complex = std::complex<double>;

/**
 * Dense row-major complex matrix. Entries are validated to be finite when a
 * matrix enters the domain model (Morphism construction); rows or cols may be
 * zero. This is the single numeric carrier for the vector-space instance.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  /// Row-wise initializer, mostly for tests and small literals.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix dagger() const;  // conjugate transpose
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  /// Largest entrywise |a-b|; shapes must match.
  static double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
  /// Scale-aware comparison: max diff <= tol * (1 + max input magnitude).
  static bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

  static ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
  static ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix& other) const = default;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> entries_;
};

/// Matrix product; ShapeError if inner dimensions disagree.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace mcat
