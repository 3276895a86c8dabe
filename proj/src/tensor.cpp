#include "addlab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace addlab {

namespace {

constexpr double kUnitNormTol = 1e-12;
constexpr double kOrthoTol = 1e-10;

void check_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("tensor: empty factor list");
  for (int d : dims)
    if (d < 1) throw std::invalid_argument("tensor: factor dimension must be >= 1");
}

}  // namespace

int TensorVector::total_dim() const {
  long long n = 1;
  for (int d : dims) n *= d;
  return int(n);
}

double TensorVector::norm() const {
  double s = 0.0;
  for (const auto& z : coeffs) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner(const TensorVector& a, const TensorVector& b) {
  if (a.dims != b.dims) throw std::invalid_argument("inner: mismatched factor dimensions");
  Complex s = 0.0;
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) s += std::conj(a.coeffs[k]) * b.coeffs[k];
  return s;
}

TensorVector tensor_product(const TensorVector& a, const TensorVector& b) {
  TensorVector out;
  out.dims = a.dims;
  out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
  out.coeffs.resize(a.coeffs.size() * b.coeffs.size());
  std::size_t k = 0;
  for (const auto& za : a.coeffs)
    for (const auto& zb : b.coeffs) out.coeffs[k++] = za * zb;
  return out;
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw std::domain_error("density matrix: not square");
  if (!entries_.is_hermitian(1e-12)) throw std::domain_error("density matrix: not Hermitian");
  if (std::abs(entries_.trace() - Complex(1.0)) > 1e-10)
    throw std::domain_error("density matrix: trace != 1");
}

std::vector<double> DensityMatrix::eigenvalues() const {
  Eigensystem es = eig_hermitian(entries_);
  for (double v : es.values)
    if (v < -1e-10) throw std::domain_error("density matrix: negative eigenvalue");
  std::reverse(es.values.begin(), es.values.end());
  return es.values;
}

int SubspaceBasis::ambient_total_dim() const {
  long long n = 1;
  for (int d : ambient_dims) n *= d;
  return int(n);
}

double SubspaceBasis::orthonormality_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j) {
      const Complex g = inner(vectors[i], vectors[j]);
      r = std::max(r, std::abs(g - (i == j ? Complex(1.0) : Complex(0.0))));
    }
  return r;
}

SchmidtSpectrum schmidt(const TensorVector& v, int split) {
  check_dims(v.dims);
  if (v.norm() == 0.0) throw std::domain_error("schmidt: zero vector");
  if (split < 1 || split >= int(v.dims.size()))
    throw std::invalid_argument("schmidt: split must leave both sides nonempty");
  long long left = 1, right = 1;
  for (int i = 0; i < split; ++i) left *= v.dims[i];
  for (int i = split; i < int(v.dims.size()); ++i) right *= v.dims[i];

  // Row-major storage makes the (left x right) reshape a direct copy.
  Matrix m(static_cast<int>(left), static_cast<int>(right));
  std::copy(v.coeffs.begin(), v.coeffs.end(), m.data().begin());
  std::vector<double> s = singular_values(m);
  if (!s.empty()) {
    const double cutoff = 1e-12 * s.front();
    for (double& x : s)
      if (x < cutoff) x = 0.0;
  }
  return SchmidtSpectrum{std::move(s), int(left), int(right)};
}

DensityMatrix partial_trace_env(const TensorVector& v, const std::vector<int>& keep) {
  check_dims(v.dims);
  if (std::abs(v.norm() - 1.0) > kUnitNormTol)
    throw std::domain_error("partial_trace_env: vector not unit norm");
  const int nf = int(v.dims.size());
  std::vector<int> keep_sorted = keep;
  std::sort(keep_sorted.begin(), keep_sorted.end());
  keep_sorted.erase(std::unique(keep_sorted.begin(), keep_sorted.end()), keep_sorted.end());
  if (keep_sorted.empty() || int(keep_sorted.size()) >= nf)
    throw std::invalid_argument("partial_trace_env: keep must be a nonempty proper subset");
  for (int f : keep_sorted)
    if (f < 0 || f >= nf) throw std::invalid_argument("partial_trace_env: factor index out of range");

  std::vector<int> traced;
  for (int f = 0; f < nf; ++f)
    if (!std::binary_search(keep_sorted.begin(), keep_sorted.end(), f)) traced.push_back(f);

  // Strides of each factor in the flat row-major index.
  std::vector<long long> stride(nf, 1);
  for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * v.dims[f + 1];

  long long dim_keep = 1, dim_tr = 1;
  for (int f : keep_sorted) dim_keep *= v.dims[f];
  for (int f : traced) dim_tr *= v.dims[f];

  auto offset = [&](const std::vector<int>& factors, long long combo) {
    long long off = 0;
    for (int i = int(factors.size()) - 1; i >= 0; --i) {
      const int f = factors[i];
      off += (combo % v.dims[f]) * stride[f];
      combo /= v.dims[f];
    }
    return off;
  };

  std::vector<long long> keep_off(dim_keep), tr_off(dim_tr);
  for (long long i = 0; i < dim_keep; ++i) keep_off[i] = offset(keep_sorted, i);
  for (long long t = 0; t < dim_tr; ++t) tr_off[t] = offset(traced, t);

  Matrix rho(static_cast<int>(dim_keep), static_cast<int>(dim_keep));
  for (long long i = 0; i < dim_keep; ++i)
    for (long long j = 0; j < dim_keep; ++j) {
      Complex s = 0.0;
      for (long long t = 0; t < dim_tr; ++t)
        s += v.coeffs[keep_off[i] + tr_off[t]] * std::conj(v.coeffs[keep_off[j] + tr_off[t]]);
      rho(int(i), int(j)) = s;
    }
  // Symmetrize away rounding drift before validation.
  for (int i = 0; i < rho.rows(); ++i)
    for (int j = i + 1; j < rho.cols(); ++j) {
      const Complex m = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      rho(i, j) = m;
      rho(j, i) = std::conj(m);
    }
  for (int i = 0; i < rho.rows(); ++i) rho(i, i) = Complex(rho(i, i).real(), 0.0);
  return DensityMatrix(std::move(rho));
}

TensorVector reshuffle_cut(const TensorVector& v) {
  check_dims(v.dims);
  if (v.dims.size() != 4) throw std::invalid_argument("reshuffle_cut: expects exactly 4 factors");
  const int d0 = v.dims[0], d1 = v.dims[1], d2 = v.dims[2], d3 = v.dims[3];
  TensorVector out;
  out.dims = {d0, d2, d1, d3};
  out.coeffs.resize(v.coeffs.size());
  for (int i0 = 0; i0 < d0; ++i0)
    for (int i1 = 0; i1 < d1; ++i1)
      for (int i2 = 0; i2 < d2; ++i2)
        for (int i3 = 0; i3 < d3; ++i3) {
          const long long src = (((long long)i0 * d1 + i1) * d2 + i2) * d3 + i3;
          const long long dst = (((long long)i0 * d2 + i2) * d1 + i1) * d3 + i3;
          out.coeffs[dst] = v.coeffs[src];
        }
  return out;
}

std::pair<SubspaceBasis, int> orthonormalize(const std::vector<TensorVector>& vs) {
  if (vs.empty()) throw std::invalid_argument("orthonormalize: empty input");
  for (const auto& v : vs)
    if (v.dims != vs.front().dims)
      throw std::invalid_argument("orthonormalize: mixed factor dimensions");

  double max_norm = 0.0;
  for (const auto& v : vs) max_norm = std::max(max_norm, v.norm());
  const double drop = kOrthoTol * std::max(1.0, max_norm);

  std::vector<TensorVector> work = vs;
  std::vector<bool> used(work.size(), false);
  SubspaceBasis basis;
  basis.ambient_dims = vs.front().dims;

  auto project_out = [&](TensorVector& v, const TensorVector& u) {
    const Complex c = inner(u, v);
    for (std::size_t k = 0; k < v.coeffs.size(); ++k) v.coeffs[k] -= c * u.coeffs[k];
  };

  for (;;) {
    int pivot = -1;
    double best = drop;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (used[i]) continue;
      const double n = work[i].norm();
      if (n > best) {
        best = n;
        pivot = int(i);
      }
    }
    if (pivot < 0) break;
    used[pivot] = true;
    TensorVector u = work[pivot];
    // Second orthogonalization pass for numerical headroom.
    for (const auto& b : basis.vectors) project_out(u, b);
    const double n = u.norm();
    if (n <= drop) continue;
    for (auto& z : u.coeffs) z /= n;
    for (std::size_t i = 0; i < work.size(); ++i)
      if (!used[i]) project_out(work[i], u);
    basis.vectors.push_back(std::move(u));
  }
  const int rank = basis.dim();
  return {std::move(basis), rank};
}

Matrix projector(const SubspaceBasis& basis) {
  if (basis.dim() == 0) throw std::invalid_argument("projector: empty basis");
  if (basis.orthonormality_residual() > kOrthoTol)
    throw std::domain_error("projector: basis not orthonormal");
  const int n = basis.ambient_total_dim();
  Matrix p(n, n);
  for (const auto& w : basis.vectors)
    for (int i = 0; i < n; ++i) {
      const Complex wi = w.coeffs[i];
      if (wi == 0.0) continue;
      for (int j = 0; j < n; ++j) p(i, j) += wi * std::conj(w.coeffs[j]);
    }
  return p;
}

TensorVector maximally_entangled(const SubspaceBasis& basis) {
  if (basis.dim() == 0) throw std::invalid_argument("maximally_entangled: empty basis");
  TensorVector out;
  out.dims = basis.ambient_dims;
  out.dims.insert(out.dims.end(), basis.ambient_dims.begin(), basis.ambient_dims.end());
  const std::size_t n = basis.vectors.front().coeffs.size();
  out.coeffs.assign(n * n, Complex(0.0));
  for (const auto& w : basis.vectors)
    for (std::size_t i = 0; i < n; ++i) {
      const Complex wi = w.coeffs[i];
      if (wi == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out.coeffs[i * n + j] += wi * w.coeffs[j];
    }
  const double s = std::sqrt(double(basis.dim()));
  for (auto& z : out.coeffs) z /= s;
  return out;
}

bool majorizes(std::span<const double> a, std::span<const double> b) {
  auto clean = [](std::span<const double> x) {
    std::vector<double> out(x.begin(), x.end());
    for (double& v : out) {
      if (v < -1e-12) throw std::domain_error("majorizes: negative entry");
      if (v < 0.0) v = 0.0;
    }
    return out;
  };
  std::vector<double> sa = clean(a), sb = clean(b);
  const double sum_a = std::accumulate(sa.begin(), sa.end(), 0.0);
  const double sum_b = std::accumulate(sb.begin(), sb.end(), 0.0);
  if (std::abs(sum_a - sum_b) > 1e-10) throw std::domain_error("majorizes: sums differ");
  const std::size_t n = std::max(sa.size(), sb.size());
  sa.resize(n, 0.0);
  sb.resize(n, 0.0);
  std::sort(sa.rbegin(), sa.rend());
  std::sort(sb.rbegin(), sb.rend());
  double pa = 0.0, pb = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    pa += sa[k];
    pb += sb[k];
    if (pa < pb - 1e-12) return false;
  }
  return true;
}

}  // namespace addlab
