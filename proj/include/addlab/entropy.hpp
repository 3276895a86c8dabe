#pragma once

#include <span>

namespace addlab {

// Renyi order p > 1 strictly; the formulas below divide by 1 - p.
struct RenyiOrder {
  double p;
  explicit RenyiOrder(double order);
};

// (1/(1-p)) log2 sum_i lambda_i^p, in bits. Spectrum entries must be
// >= -1e-12 (clamped to 0) and sum to 1 within 1e-9.
double renyi_entropy(std::span<const double> spectrum, RenyiOrder p);

// (p/(1-p)) log2 mu1sq for mu1sq in (0,1]: the entropy cap implied by a
// largest squared Schmidt coefficient.
double entropy_upper_from_mu1(double mu1sq, RenyiOrder p);

// (1/(1-p)) log2 [(1-A)^p + A^p] for A in (0,1): the entropy floor implied
// by an upper bound A on the largest squared Schmidt coefficient.
double lower_bound_C(double A, RenyiOrder p);

}  // namespace addlab
