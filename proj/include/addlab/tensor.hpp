#pragma once

#include <span>
#include <utility>
#include <vector>

#include "addlab/linalg.hpp"

namespace addlab {

// Coefficient vector over a tensor product of finite-dimensional factors.
// Storage is row-major over the factor order: for dims (d0,d1,...) the
// coefficient of e_{i0} ⊗ e_{i1} ⊗ ... sits at ((i0*d1 + i1)*d2 + i2)...
struct TensorVector {
  std::vector<Complex> coeffs;
  std::vector<int> dims;

  int total_dim() const;
  double norm() const;
};

Complex inner(const TensorVector& a, const TensorVector& b);  // conjugate-linear in a
TensorVector tensor_product(const TensorVector& a, const TensorVector& b);

// Non-increasing Schmidt coefficients of a bipartition.
struct SchmidtSpectrum {
  std::vector<double> coefficients;
  int left_dim = 0;
  int right_dim = 0;
};

class DensityMatrix {
public:
  // Validates Hermiticity (1e-12) and unit trace (1e-10).
  explicit DensityMatrix(Matrix entries);

  int dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }

  // Non-increasing; throws std::domain_error if any eigenvalue < -1e-10.
  std::vector<double> eigenvalues() const;

private:
  Matrix entries_;
};

// Orthonormal family of tensor vectors over a shared ambient space.
struct SubspaceBasis {
  std::vector<TensorVector> vectors;
  std::vector<int> ambient_dims;

  int dim() const { return int(vectors.size()); }
  int ambient_total_dim() const;
  // max_{i,j} |<w_i, w_j> - delta_ij|
  double orthonormality_residual() const;
};

// Schmidt coefficients of v across the bipartition dims[0..split) : dims[split..).
// Singular values below 1e-12 * mu_1 are reported as exact zeros.
SchmidtSpectrum schmidt(const TensorVector& v, int split);

// Reduced state of |v><v| on the kept factors, which stay in ascending
// index order (v must be unit to 1e-12, keep a nonempty proper subset of
// factor indices).
DensityMatrix partial_trace_env(const TensorVector& v, const std::vector<int>& keep);

// On four factors: k1 ⊗ f1 ⊗ k2 ⊗ f2 -> k1 ⊗ k2 ⊗ f1 ⊗ f2.
TensorVector reshuffle_cut(const TensorVector& v);

// Gram-Schmidt with column pivoting, drop tolerance 1e-10 (relative to the
// largest input norm). Returns the orthonormal basis and its rank.
std::pair<SubspaceBasis, int> orthonormalize(const std::vector<TensorVector>& vs);

// P = sum_i |w_i><w_i|; input must be orthonormal.
Matrix projector(const SubspaceBasis& basis);

// (sum_i w_i ⊗ w_i) / sqrt(dim W), a vector over the doubled factor list.
TensorVector maximally_entangled(const SubspaceBasis& basis);

// Partial-sum dominance of sorted-descending a over b. Inputs must be
// non-negative with equal sums (1e-10); shorter input is zero-padded.
bool majorizes(std::span<const double> a, std::span<const double> b);

}  // namespace addlab
