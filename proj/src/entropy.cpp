#include "addlab/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace addlab {

RenyiOrder::RenyiOrder(double order) : p(order) {
  if (!(order > 1.0)) throw std::invalid_argument("renyi order: requires p > 1");
}

double renyi_entropy(std::span<const double> spectrum, RenyiOrder p) {
  if (spectrum.empty()) throw std::domain_error("renyi_entropy: empty spectrum");
  double sum = 0.0, power_sum = 0.0;
  for (double lam : spectrum) {
    if (lam < -1e-12) throw std::domain_error("renyi_entropy: negative spectrum entry");
    if (lam < 0.0) lam = 0.0;
    sum += lam;
    power_sum += std::pow(lam, p.p);
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::domain_error("renyi_entropy: spectrum sum != 1");
  return std::log2(power_sum) / (1.0 - p.p);
}

double entropy_upper_from_mu1(double mu1sq, RenyiOrder p) {
  if (!(mu1sq > 0.0) || mu1sq > 1.0)
    throw std::domain_error("entropy_upper_from_mu1: mu1sq must lie in (0,1]");
  return p.p / (1.0 - p.p) * std::log2(mu1sq);
}

double lower_bound_C(double A, RenyiOrder p) {
  if (!(A > 0.0) || !(A < 1.0)) throw std::domain_error("lower_bound_C: A must lie in (0,1)");
  return std::log2(std::pow(1.0 - A, p.p) + std::pow(A, p.p)) / (1.0 - p.p);
}

}  // namespace addlab
