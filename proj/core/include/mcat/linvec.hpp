#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mcat/decomposition.hpp"
#include "mcat/instance.hpp"

namespace mcat::linvec {

/** Thin SVD M = u * diag(s) * v^dagger with s descending nonnegative. */
struct SvdResult {
  ComplexMatrix u;                       // rows x k, orthonormal columns
  std::vector<double> singular_values;   // length k = min(rows, cols)
  ComplexMatrix v;                       // cols x k, orthonormal columns
};

/**
 * Deterministic one-sided Jacobi SVD. Self-contained on purpose: every
 * Schmidt/rank/inverse routine below sits on this kernel. Dimension-0 inputs
 * return empty factors.
 */
SvdResult svd(const ComplexMatrix& m);

/// Count of singular values above the scale-invariant rank threshold
/// sigma_i > 1e-9 * (1 + sigma_1).
std::size_t numerical_rank(const std::vector<double>& singular_values);

/**
 * Tensor-factor dimensions for an operator H1 (x) H2 -> H1' (x) H2':
 * dom = dom_left * dom_right columns, cod = cod_left * cod_right rows.
 */
struct TensorSplit {
  std::size_t dom_left = 1, dom_right = 1;
  std::size_t cod_left = 1, cod_right = 1;

  std::size_t dom_dim() const { return dom_left * dom_right; }
  std::size_t cod_dim() const { return cod_left * cod_right; }
  bool operator==(const TensorSplit&) const = default;
};

/**
 * Index reshuffle turning Kronecker structure into matrix rank: output R of
 * shape (cod_left*dom_left) x (cod_right*dom_right) with
 * R[(i,j),(k,l)] = M[(i,k),(j,l)] under left-major flattening. An involution
 * for square symmetric splits. Throws ShapeError on a mismatched split.
 */
ComplexMatrix realign(const ComplexMatrix& m, const TensorSplit& split);

/**
 * Operator Schmidt decomposition M = sum_i c_i * L_i (x) R_i with factor
 * matrices orthonormal under the Frobenius inner product and coefficients
 * descending. Coefficients below 1e-9 * (1 + sigma_1) are truncated.
 */
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<ComplexMatrix> left_factors;   // cod_left x dom_left each
  std::vector<ComplexMatrix> right_factors;  // cod_right x dom_right each
  std::size_t rank = 0;
  TensorSplit split;
};

SchmidtDecomposition operator_schmidt(const ComplexMatrix& m, const TensorSplit& split);

/**
 * Strict-reading parallel decomposability across a tensor split, with the
 * witness isomorphisms pinned to identities: decomposable iff the operator
 * Schmidt rank
 * is 1. The scalar weight rides on the left factor; the right factor's
 * largest-magnitude entry is made real positive. The zero operator and
 * splits involving dimension-1 factors report DegenerateOnly.
 */
DecompositionOutcome strict_par_decompose_tensor(const ComplexMatrix& m, const TensorSplit& split,
                                                 Policy policy = Policy::Nondegenerate);

/**
 * 1 - sigma_1^2 / sum_i sigma_i^2 over the operator Schmidt spectrum; zero
 * exactly for strictly decomposable operators. Throws UndefinedMeasureError
 * on the zero operator.
 */
double coupling_measure(const ComplexMatrix& m, const TensorSplit& split);

/// Schmidt decomposition of a state vector of length d1*d2 (reshape + SVD).
SchmidtDecomposition state_schmidt(const std::vector<Complex>& v, std::size_t d1, std::size_t d2);

/// Entangled iff Schmidt rank >= 2. Throws NormalizationError unless |v| = 1
/// within tolerance.
bool is_entangled(const std::vector<Complex>& v, std::size_t d1, std::size_t d2,
                  double tolerance = Instance::kDefaultTolerance);

/**
 * Sequential decomposability for linear maps via the truncated-SVD rank
 * factorization M = L * R with L = U sqrt(S), R = sqrt(S) V^dagger. Identity
 * morphisms are not decomposable; the zero matrix reports DegenerateOnly.
 * Under Essential neither factor may be square invertible, so full-rank
 * matrices fail via this route.
 */
DecompositionOutcome rank_factorization(const ComplexMatrix& m, Policy policy,
                                        ProductKind product = ProductKind::DirectSum);

enum class DirectSumMode { Fixed, UpToIso };

/**
 * Parallel decomposability across a direct-sum split.
 *
 * Fixed mode: decomposable iff the off-diagonal blocks vanish within
 * tolerance; the factors are the diagonal blocks and the witnesses are
 * identities. UpToIso mode: rank normal form; decomposable with explicit
 * invertible witnesses whenever the requested block dimensions can absorb
 * the rank. Identity factors downgrade the verdict to DegenerateOnly.
 * Throws ShapeError on a bad split.
 */
DecompositionOutcome par_decompose_directsum(const ComplexMatrix& m,
                                             std::pair<std::size_t, std::size_t> dom_split,
                                             std::pair<std::size_t, std::size_t> cod_split,
                                             DirectSumMode mode,
                                             Policy policy = Policy::Nondegenerate,
                                             double tolerance = Instance::kDefaultTolerance);

/**
 * SVD-based inverse; requires sigma_min > 1e-12 * sigma_max and otherwise
 * throws SingularMatrixError carrying sigma_min.
 */
ComplexMatrix invert(const ComplexMatrix& m);

/// Solution of M x = b via invert(M) * b.
std::vector<Complex> solve(const ComplexMatrix& m, const std::vector<Complex>& b);

}  // namespace mcat::linvec
