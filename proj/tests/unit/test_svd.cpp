#include <doctest.h>

#include <cmath>
#include <random>

#include "mcat/linvec.hpp"

using namespace mcat;
using linvec::svd;
using linvec::SvdResult;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  auto real = [&rng] { return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0; };
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Complex(real(), real());
  return m;
}

ComplexMatrix reconstruct(const SvdResult& s) {
  ComplexMatrix scaled = s.u;
  for (std::size_t j = 0; j < s.singular_values.size(); ++j)
    for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, j) *= s.singular_values[j];
  return scaled * s.v.dagger();
}

void check_orthonormal_columns(const ComplexMatrix& m) {
  ComplexMatrix gram = m.dagger() * m;
  CHECK(ComplexMatrix::max_abs_diff(gram, ComplexMatrix::identity(m.cols())) <= 1e-12);
}

}  // namespace

TEST_SUITE("svd") {
  TEST_CASE("unitary input has unit singular values") {
    auto s = svd(ComplexMatrix::identity(2));
    REQUIRE(s.singular_values.size() == 2);
    CHECK(s.singular_values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.singular_values[1] == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("the rotation-scale matrix has both values sqrt(2)") {
    auto s = svd(ComplexMatrix::from_rows({{1.0, 1.0}, {-1.0, 1.0}}));
    REQUIRE(s.singular_values.size() == 2);
    const double root2 = std::sqrt(2.0);
    CHECK(std::abs(s.singular_values[0] - root2) <= 1e-12);
    CHECK(std::abs(s.singular_values[1] - root2) <= 1e-12);
  }

  TEST_CASE("a unit outer product is rank one") {
    // u = (3/5, 4/5), v = (1, -1)/sqrt(2)
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    const double u[2] = {0.6, 0.8};
    const double v[2] = {inv_sqrt2, -inv_sqrt2};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = u[i] * v[j];
    auto s = svd(m);
    REQUIRE(s.singular_values.size() == 2);
    CHECK(std::abs(s.singular_values[0] - 1.0) <= 1e-12);
    CHECK(std::abs(s.singular_values[1]) <= 1e-12);
    check_orthonormal_columns(s.u);  // the null column is completed
  }

  TEST_CASE("zero-dimensional inputs return empty factors") {
    auto s = svd(ComplexMatrix(0, 3));
    CHECK(s.singular_values.empty());
    CHECK(s.u.rows() == 0);
    CHECK(s.v.rows() == 3);
    CHECK(s.v.cols() == 0);
  }

  TEST_CASE("reconstruction, orthonormality and ordering on random matrices") {
    std::mt19937_64 rng(42);
    const std::size_t shapes[][2] = {{1, 1}, {2, 2}, {3, 5}, {5, 3}, {4, 4},
                                     {7, 2}, {2, 7}, {8, 8}, {10, 10}, {6, 1}};
    for (const auto& shape : shapes) {
      for (int repeat = 0; repeat < 10; ++repeat) {
        ComplexMatrix m = random_matrix(rng, shape[0], shape[1]);
        auto s = svd(m);
        CHECK(ComplexMatrix::max_abs_diff(reconstruct(s), m) <= 1e-10 * (1.0 + m.max_abs()));
        check_orthonormal_columns(s.u);
        check_orthonormal_columns(s.v);
        for (std::size_t i = 1; i < s.singular_values.size(); ++i)
          CHECK(s.singular_values[i - 1] >= s.singular_values[i]);
        for (double sigma : s.singular_values) CHECK(sigma >= 0.0);
      }
    }
  }

  TEST_CASE("rank-deficient matrices reconstruct with completed bases") {
    std::mt19937_64 rng(7);
    ComplexMatrix m = random_matrix(rng, 5, 3);
    for (std::size_t i = 0; i < 5; ++i) m(i, 2) = m(i, 0);  // duplicate column
    auto s = svd(m);
    CHECK(std::abs(s.singular_values.back()) <= 1e-12 * (1.0 + m.max_abs()));
    CHECK(ComplexMatrix::max_abs_diff(reconstruct(s), m) <= 1e-10 * (1.0 + m.max_abs()));
    check_orthonormal_columns(s.u);
  }

  TEST_CASE("the decomposition is deterministic") {
    std::mt19937_64 rng(123);
    ComplexMatrix m = random_matrix(rng, 6, 4);
    auto a = svd(m);
    auto b = svd(m);
    CHECK(a.singular_values == b.singular_values);
    CHECK(a.u == b.u);
    CHECK(a.v == b.v);
  }

  TEST_CASE("numerical rank uses the scale-aware threshold") {
    CHECK(linvec::numerical_rank({}) == 0);
    CHECK(linvec::numerical_rank({2.0, 1.0, 1e-12}) == 2);
    CHECK(linvec::numerical_rank({1e-30}) == 0);
  }
}
