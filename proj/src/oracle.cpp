#include "addlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "addlab/constructions.hpp"

namespace addlab {

namespace detail {

std::uint64_t next_u64(std::uint64_t& state) {
  // splitmix64
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<Complex> random_unit_vector(int n, std::uint64_t& state) {
  std::vector<Complex> v(n);
  auto gauss_pair = [&](double& g1, double& g2) {
    const double u1 = (double(next_u64(state) >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = double(next_u64(state) >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    g1 = r * std::cos(2.0 * std::numbers::pi * u2);
    g2 = r * std::sin(2.0 * std::numbers::pi * u2);
  };
  double norm_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    double re, im;
    gauss_pair(re, im);
    v[i] = Complex(re, im);
    norm_sq += std::norm(v[i]);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& z : v) z *= inv;
  return v;
}

Matrix contract_right(const Matrix& p, int dim_a, int dim_b, const std::vector<Complex>& y) {
  Matrix out(dim_a, dim_a);
  for (int a = 0; a < dim_a; ++a)
    for (int a2 = 0; a2 < dim_a; ++a2) {
      Complex s = 0.0;
      for (int b = 0; b < dim_b; ++b) {
        const Complex yb = std::conj(y[b]);
        if (yb == 0.0) continue;
        for (int b2 = 0; b2 < dim_b; ++b2)
          s += yb * p(a * dim_b + b, a2 * dim_b + b2) * y[b2];
      }
      out(a, a2) = s;
    }
  return out;
}

Matrix contract_left(const Matrix& p, int dim_a, int dim_b, const std::vector<Complex>& x) {
  Matrix out(dim_b, dim_b);
  for (int b = 0; b < dim_b; ++b)
    for (int b2 = 0; b2 < dim_b; ++b2) {
      Complex s = 0.0;
      for (int a = 0; a < dim_a; ++a) {
        const Complex xa = std::conj(x[a]);
        if (xa == 0.0) continue;
        for (int a2 = 0; a2 < dim_a; ++a2)
          s += xa * p(a * dim_b + b, a2 * dim_b + b2) * x[a2];
      }
      out(b, b2) = s;
    }
  return out;
}

}  // namespace detail

namespace {

void check_projector(const Matrix& p, int dim_a, int dim_b) {
  if (p.rows() != p.cols() || p.rows() != dim_a * dim_b)
    throw std::invalid_argument("product overlap: projector shape mismatch");
  if (!p.is_hermitian(1e-10)) throw std::domain_error("product overlap: matrix not Hermitian");
  if ((p * p - p).max_abs() > 1e-8)
    throw std::domain_error("product overlap: matrix not idempotent");
}

std::vector<Complex> eig_column(const Eigensystem& es, int j) {
  std::vector<Complex> v(es.vectors.rows());
  for (int i = 0; i < es.vectors.rows(); ++i) v[i] = es.vectors(i, j);
  return v;
}

OracleEstimate product_overlap_extremum(const Matrix& p, int dim_a, int dim_b,
                                        const OracleConfig& cfg, bool maximize) {
  check_projector(p, dim_a, dim_b);
  if (cfg.restarts < 1 || cfg.max_iterations < 1 || !(cfg.tolerance > 0.0))
    throw std::invalid_argument("oracle config: restarts, iterations, tolerance must be positive");

  OracleEstimate est;
  est.side = maximize ? BoundSide::LowerEstimateOfSupremum : BoundSide::UpperEstimateOfInfimum;
  est.value = maximize ? -std::numeric_limits<double>::infinity()
                       : std::numeric_limits<double>::infinity();
  double spread_lo = std::numeric_limits<double>::infinity();
  double spread_hi = -std::numeric_limits<double>::infinity();

  std::vector<Complex> best_x, best_y;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::uint64_t state = cfg.seed ^ std::uint64_t(r);
    std::vector<Complex> x = detail::random_unit_vector(dim_a, state);
    std::vector<Complex> y = detail::random_unit_vector(dim_b, state);
    double val = 0.0, prev = maximize ? -1.0 : 2.0;
    bool converged = false;
    int it = 0;
    for (; it < cfg.max_iterations; ++it) {
      Eigensystem ea = eig_hermitian(detail::contract_right(p, dim_a, dim_b, y));
      x = eig_column(ea, maximize ? dim_a - 1 : 0);
      Eigensystem eb = eig_hermitian(detail::contract_left(p, dim_a, dim_b, x));
      y = eig_column(eb, maximize ? dim_b - 1 : 0);
      val = eb.values[maximize ? dim_b - 1 : 0];
      if (std::abs(val - prev) <= cfg.tolerance * std::max(1.0, std::abs(val))) {
        converged = true;
        ++it;
        break;
      }
      prev = val;
    }
    est.iterations_used += it;
    if (converged) ++est.restarts_converged;
    spread_lo = std::min(spread_lo, val);
    spread_hi = std::max(spread_hi, val);
    if ((maximize && val > est.value) || (!maximize && val < est.value)) {
      est.value = val;
      best_x = x;
      best_y = y;
    }
  }
  est.restart_spread = spread_hi - spread_lo;
  TensorVector xv{best_x, {dim_a}}, yv{best_y, {dim_b}};
  est.best_witness = tensor_product(xv, yv);
  return est;
}

}  // namespace

std::string bound_side_name(BoundSide side) {
  return side == BoundSide::LowerEstimateOfSupremum ? "lower-estimate-of-supremum"
                                                    : "upper-estimate-of-infimum";
}

OracleEstimate max_product_overlap(const Matrix& p, int dim_a, int dim_b,
                                   const OracleConfig& cfg) {
  return product_overlap_extremum(p, dim_a, dim_b, cfg, true);
}

OracleEstimate min_product_overlap(const Matrix& p, int dim_a, int dim_b,
                                   const OracleConfig& cfg) {
  return product_overlap_extremum(p, dim_a, dim_b, cfg, false);
}

OracleEstimate estimate_Md(int d, const OracleConfig& cfg) {
  if (d < 2) throw std::invalid_argument("estimate_Md: requires d >= 2");
  return min_product_overlap(projector(sum_representation_basis(d)), d, d, cfg);
}

OracleEstimate max_schmidt_in_subspace(const SubspaceBasis& w, const OracleConfig& cfg) {
  if (w.ambient_dims.size() != 2)
    throw std::invalid_argument("max_schmidt_in_subspace: requires a bipartite ambient space");
  return max_product_overlap(projector(w), w.ambient_dims[0], w.ambient_dims[1], cfg);
}

OracleEstimate min_output_entropy_search(const SubspaceBasis& w, RenyiOrder p,
                                         const OracleConfig& cfg) {
  if (w.ambient_dims.size() != 2)
    throw std::invalid_argument("min_output_entropy_search: requires a bipartite ambient space");
  if (w.orthonormality_residual() > 1e-10)
    throw std::domain_error("min_output_entropy_search: basis not orthonormal");
  if (cfg.restarts < 1 || cfg.max_iterations < 1)
    throw std::invalid_argument("oracle config: restarts and iterations must be positive");

  const int m = w.dim();
  auto mix = [&](const std::vector<Complex>& c) {
    TensorVector out;
    out.dims = w.ambient_dims;
    out.coeffs.assign(w.vectors.front().coeffs.size(), Complex(0.0));
    for (int i = 0; i < m; ++i) {
      if (c[i] == 0.0) continue;
      for (std::size_t k = 0; k < out.coeffs.size(); ++k)
        out.coeffs[k] += c[i] * w.vectors[i].coeffs[k];
    }
    const double n = out.norm();
    for (auto& z : out.coeffs) z /= n;
    return out;
  };
  auto entropy_of = [&](const std::vector<Complex>& c) {
    const SchmidtSpectrum sch = schmidt(mix(c), 1);
    double power_sum = 0.0, sum = 0.0;
    for (double mu : sch.coefficients) {
      const double lam = mu * mu;
      sum += lam;
      power_sum += std::pow(lam, p.p);
    }
    // Guard against rounding drift in the squared singular values.
    power_sum /= std::pow(sum, p.p);
    return std::log2(power_sum) / (1.0 - p.p);
  };

  OracleEstimate est;
  est.side = BoundSide::UpperEstimateOfInfimum;
  est.value = std::numeric_limits<double>::infinity();
  double spread_lo = std::numeric_limits<double>::infinity();
  double spread_hi = -std::numeric_limits<double>::infinity();
  std::vector<Complex> best_c;

  constexpr double kStepFloor = 1e-8;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::uint64_t state = cfg.seed ^ std::uint64_t(r);
    std::vector<Complex> c = detail::random_unit_vector(m, state);
    double e = entropy_of(c);
    double step = 0.1;
    int sweeps = 0;
    for (; sweeps < cfg.max_iterations && step >= kStepFloor; ++sweeps) {
      bool improved = false;
      for (int i = 0; i < m; ++i) {
        static const Complex dirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const Complex& dir : dirs) {
          std::vector<Complex> c2 = c;
          c2[i] += step * dir;
          double nn = 0.0;
          for (const auto& z : c2) nn += std::norm(z);
          nn = std::sqrt(nn);
          for (auto& z : c2) z /= nn;
          const double e2 = entropy_of(c2);
          if (e2 < e - 1e-14) {
            c = std::move(c2);
            e = e2;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    est.iterations_used += sweeps;
    if (step < kStepFloor) ++est.restarts_converged;
    spread_lo = std::min(spread_lo, e);
    spread_hi = std::max(spread_hi, e);
    if (e < est.value) {
      est.value = e;
      best_c = c;
    }
  }
  est.restart_spread = spread_hi - spread_lo;
  est.best_witness = mix(best_c);
  return est;
}

}  // namespace addlab
