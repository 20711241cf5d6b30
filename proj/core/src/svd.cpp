#include <algorithm>
#include <cmath>
#include <numeric>

#include "detail.hpp"
#include "mcat/errors.hpp"
#include "mcat/linvec.hpp"

namespace mcat::detail {

// Extends the orthonormal columns of u in place. Each new column is the
// standard basis vector with the largest residual after projecting out
// everything placed so far, re-projected once for working precision.
void complete_orthonormal_columns(ComplexMatrix& u, std::size_t filled) {
  const std::size_t rows = u.rows();
  const std::size_t total = u.cols();
  auto project_out = [&](std::vector<Complex>& w, std::size_t upto) {
    for (std::size_t prev = 0; prev < upto; ++prev) {
      Complex proj(0.0, 0.0);
      for (std::size_t i = 0; i < rows; ++i) proj += std::conj(u(i, prev)) * w[i];
      for (std::size_t i = 0; i < rows; ++i) w[i] -= proj * u(i, prev);
    }
  };
  auto norm_of = [](const std::vector<Complex>& w) {
    double sum = 0.0;
    for (const auto& z : w) sum += std::norm(z);
    return std::sqrt(sum);
  };
  for (std::size_t col = filled; col < total; ++col) {
    // The standard basis vector with the largest residual wins; a second
    // projection pass keeps the result orthogonal to working precision.
    std::vector<Complex> best_w;
    double best_norm = -1.0;
    for (std::size_t basis = 0; basis < rows; ++basis) {
      std::vector<Complex> w(rows, Complex(0.0, 0.0));
      w[basis] = 1.0;
      project_out(w, col);
      const double norm = norm_of(w);
      if (norm > best_norm) {
        best_norm = norm;
        best_w = std::move(w);
      }
    }
    project_out(best_w, col);
    const double norm = norm_of(best_w);
    for (std::size_t i = 0; i < rows; ++i) u(i, col) = best_w[i] / norm;
  }
}

}  // namespace mcat::detail

namespace mcat::linvec {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kPairTolerance = 1e-15;

// Hermitian inner product of two columns, <p|q> = sum conj(p_i) q_i.
Complex column_dot(const ComplexMatrix& g, std::size_t p, std::size_t q) {
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < g.rows(); ++i) sum += std::conj(g(i, p)) * g(i, q);
  return sum;
}

// One-sided Jacobi on a matrix with rows >= cols: returns G with orthogonal
// columns and the accumulated right rotations V such that m = G V^dagger.
void jacobi_sweeps(ComplexMatrix& g, ComplexMatrix& v) {
  const std::size_t cols = g.cols();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double alpha = column_dot(g, p, p).real();
        const double beta = column_dot(g, q, q).real();
        const Complex gamma = column_dot(g, p, q);
        const double off = std::abs(gamma);
        if (off <= kPairTolerance * std::sqrt(alpha * beta)) continue;
        rotated = true;

        // Diagonalize the 2x2 Gram block [[alpha, gamma],[conj(gamma), beta]].
        const Complex phase = gamma / off;
        const double zeta = (beta - alpha) / (2.0 * off);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Complex sp = s * std::conj(phase);  // applied to the q column

        for (std::size_t i = 0; i < g.rows(); ++i) {
          const Complex gp = g(i, p), gq = g(i, q);
          g(i, p) = c * gp - sp * gq;
          g(i, q) = s * gp + c * std::conj(phase) * gq;
        }
        for (std::size_t i = 0; i < v.rows(); ++i) {
          const Complex vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - sp * vq;
          v(i, q) = s * vp + c * std::conj(phase) * vq;
        }
      }
    }
    if (!rotated) break;
  }
}

}  // namespace

SvdResult svd(const ComplexMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) {
    return SvdResult{ComplexMatrix(rows, 0), {}, ComplexMatrix(cols, 0)};
  }
  if (rows < cols) {
    // m^dagger = V S U^dagger, so swap the factors back.
    SvdResult swapped = svd(m.dagger());
    return SvdResult{std::move(swapped.v), std::move(swapped.singular_values),
                     std::move(swapped.u)};
  }

  ComplexMatrix g = m;
  ComplexMatrix v = ComplexMatrix::identity(cols);
  jacobi_sweeps(g, v);

  // Column norms are the singular values; sort them descending.
  std::vector<double> norms(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) sum += std::norm(g(i, j));
    norms[j] = std::sqrt(sum);
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });

  SvdResult out;
  out.singular_values.resize(cols);
  out.u = ComplexMatrix(rows, cols);
  out.v = ComplexMatrix(cols, cols);
  const double sigma_max = norms[order[0]];
  std::size_t normalized = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t src = order[j];
    out.singular_values[j] = norms[src];
    for (std::size_t i = 0; i < cols; ++i) out.v(i, j) = v(i, src);
    if (norms[src] > sigma_max * 1e-14 && norms[src] > 0.0) {
      for (std::size_t i = 0; i < rows; ++i) out.u(i, j) = g(i, src) / norms[src];
      normalized = j + 1;
    }
  }
  // Columns with (numerically) vanishing singular values get an orthonormal
  // completion so U always has orthonormal columns.
  detail::complete_orthonormal_columns(out.u, normalized);
  return out;
}

std::size_t numerical_rank(const std::vector<double>& singular_values) {
  if (singular_values.empty()) return 0;
  const double threshold = 1e-9 * (1.0 + singular_values.front());
  std::size_t rank = 0;
  for (double sigma : singular_values)
    if (sigma > threshold) ++rank;
  return rank;
}

}  // namespace mcat::linvec
