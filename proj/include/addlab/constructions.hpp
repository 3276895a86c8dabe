#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addlab/tensor.hpp"

namespace addlab {

// Self-inverse permutation of {0,...,d-1}; its permutation matrix is symmetric.
struct SymmetricInvolution {
  std::vector<int> mapping;
  int d = 0;

  SymmetricInvolution(std::vector<int> map_, int dim);
};

struct BellState {
  TensorVector vector;
  SymmetricInvolution source_involution;
  std::vector<double> phases;
};

enum class Family {
  AntisymmetricFull,
  AntisymmetricSubspace,
  BellExtension,
  Parthasarathy,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct ConstructionSpec {
  Family family = Family::AntisymmetricFull;
  int d = 2;
  int n = 0;  // subspace dimension / Bell-state count; unused for antisym/parthasarathy
  std::optional<std::vector<Complex>> lambdas;  // Parthasarathy node set, 2d-1 distinct values
};

// span{(e_i ⊗ e_j - e_j ⊗ e_i)/sqrt(2) : i < j}, lexicographic (i,j) order.
SubspaceBasis antisymmetric_basis(int d);

// Operator h ⊗ f -> f ⊗ h on C^d ⊗ C^d.
Matrix swap_operator(int d);

// All involutions of {0,...,d-1} in lexicographic order; guarded at d <= 10.
std::vector<SymmetricInvolution> enumerate_symmetric_involutions(int d);

// (1/sqrt(d)) sum_j e^{i phi_j} e_{sigma(j)} ⊗ f_j. Orthogonality to the
// antisymmetric space requires phases to agree on each 2-cycle of sigma;
// other phase inputs are rejected as a domain error.
BellState bell_state(const SymmetricInvolution& inv, const std::vector<double>& phases);

// n pairwise-orthogonal zero-phase Bell states from the reflection
// involutions sigma_k(i) = (k - i) mod d, k = 0..n-1; all orthogonal to the
// antisymmetric space. Requires 1 <= n <= d.
std::vector<BellState> orthogonal_bell_family(int d, int n);

// Antisymmetric basis extended by n orthogonal Bell states; 1 <= n <= d/2.
SubspaceBasis bell_extension(int d, int n);

// First n antisymmetric basis vectors; 1 <= n <= (d choose 2) - 1.
SubspaceBasis antisym_subspace(int d, int n);

struct ParthasarathyPair {
  SubspaceBasis L;  // span{u_lambda ⊗ u_lambda}, dim 2d-1
  SubspaceBasis S;  // orthogonal complement, dim (d-1)^2; contains no product state
};

// Default node set G = {k/(2d-1) : k = 0..2d-2}.
ParthasarathyPair parthasarathy_spaces(
    int d, const std::optional<std::vector<Complex>>& lambdas = std::nullopt);

// w_s = v_s/||v_s||, v_s = sum_{k+l=s} e_k ⊗ e_l; spans the same space as L.
SubspaceBasis sum_representation_basis(int d);

// The channel-defining subspace W of a construction (for Parthasarathy this
// is the completely entangled complement S).
SubspaceBasis build_subspace(const ConstructionSpec& spec);

}  // namespace addlab
