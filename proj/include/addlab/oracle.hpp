#pragma once

#include <cstdint>
#include <string>

#include "addlab/entropy.hpp"
#include "addlab/tensor.hpp"

namespace addlab {

struct OracleConfig {
  int restarts = 64;
  int max_iterations = 500;
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
};

enum class BoundSide {
  LowerEstimateOfSupremum,  // reported value is a certified lower bound of a sup
  UpperEstimateOfInfimum,   // reported value is a certified upper bound of an inf
};

std::string bound_side_name(BoundSide side);

struct OracleEstimate {
  double value = 0.0;
  TensorVector best_witness;
  int restarts_converged = 0;
  int iterations_used = 0;      // summed over restarts
  double restart_spread = 0.0;  // max - min of per-restart finals
  BoundSide side = BoundSide::LowerEstimateOfSupremum;
};

// sup over unit product states x ⊗ y of <x⊗y| P |x⊗y> = ||P(x⊗y)||^2 for a
// projector P over C^dim_a ⊗ C^dim_b, by alternating eigenvector ascent.
// Each half step is globally optimal for its block, so the objective is
// non-decreasing within a restart; the reported value is a lower estimate
// of the true supremum.
OracleEstimate max_product_overlap(const Matrix& p, int dim_a, int dim_b,
                                   const OracleConfig& cfg);

// Same scheme with bottom eigenvectors; upper estimate of the infimum.
OracleEstimate min_product_overlap(const Matrix& p, int dim_a, int dim_b,
                                   const OracleConfig& cfg);

// inf ||P_L(x⊗y)||^2 for the sum-representation space L at dimension d.
OracleEstimate estimate_Md(int d, const OracleConfig& cfg);

// largest mu_1^2 over unit vectors in span W; coincides with
// max_product_overlap(projector(W)).
OracleEstimate max_schmidt_in_subspace(const SubspaceBasis& w, const OracleConfig& cfg);

// Multi-start derivative-free descent of the output Renyi entropy over unit
// vectors in span W; upper estimate of the single-copy minimum output entropy.
OracleEstimate min_output_entropy_search(const SubspaceBasis& w, RenyiOrder p,
                                         const OracleConfig& cfg);

namespace detail {

// A_y[a,a'] = sum_{b,b'} conj(y_b) P[(a,b),(a',b')] y_{b'}
Matrix contract_right(const Matrix& p, int dim_a, int dim_b, const std::vector<Complex>& y);
// B_x[b,b'] = sum_{a,a'} conj(x_a) P[(a,b),(a',b')] x_{a'}
Matrix contract_left(const Matrix& p, int dim_a, int dim_b, const std::vector<Complex>& x);

// Deterministic unit vector from Box-Muller over the raw generator stream;
// rotation-invariant complex Gaussian normalization.
std::vector<Complex> random_unit_vector(int n, std::uint64_t& state);

// splitmix64 step, used as the per-restart random stream.
std::uint64_t next_u64(std::uint64_t& state);

}  // namespace detail

}  // namespace addlab
