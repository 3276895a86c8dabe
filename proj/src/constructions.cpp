#include "addlab/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "addlab/errors.hpp"

namespace addlab {

namespace {

long long choose2(int d) { return (long long)d * (d - 1) / 2; }

TensorVector flat_vector(int d, std::vector<Complex> coeffs) {
  TensorVector v;
  v.dims = {d, d};
  v.coeffs = std::move(coeffs);
  return v;
}

}  // namespace

SymmetricInvolution::SymmetricInvolution(std::vector<int> map_, int dim)
    : mapping(std::move(map_)), d(dim) {
  if (int(mapping.size()) != d) throw std::invalid_argument("involution: size mismatch");
  for (int i = 0; i < d; ++i) {
    if (mapping[i] < 0 || mapping[i] >= d)
      throw std::invalid_argument("involution: image out of range");
    if (mapping[mapping[i]] != i)
      throw std::invalid_argument("involution: permutation is not self-inverse");
  }
}

std::string family_name(Family f) {
  switch (f) {
    case Family::AntisymmetricFull: return "antisym";
    case Family::AntisymmetricSubspace: return "antisym-subspace";
    case Family::BellExtension: return "bell-extension";
    case Family::Parthasarathy: return "parthasarathy";
  }
  return "unknown";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "antisym") return Family::AntisymmetricFull;
  if (name == "antisym-subspace") return Family::AntisymmetricSubspace;
  if (name == "bell-extension") return Family::BellExtension;
  if (name == "parthasarathy") return Family::Parthasarathy;
  return std::nullopt;
}

SubspaceBasis antisymmetric_basis(int d) {
  if (d < 2) throw std::invalid_argument("antisymmetric_basis: requires d >= 2");
  SubspaceBasis basis;
  basis.ambient_dims = {d, d};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::vector<Complex> c(std::size_t(d) * d, Complex(0.0));
      c[std::size_t(i) * d + j] = inv_sqrt2;
      c[std::size_t(j) * d + i] = -inv_sqrt2;
      basis.vectors.push_back(flat_vector(d, std::move(c)));
    }
  return basis;
}

Matrix swap_operator(int d) {
  Matrix v(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(j * d + i, i * d + j) = 1.0;
  return v;
}

std::vector<SymmetricInvolution> enumerate_symmetric_involutions(int d) {
  if (d < 1) throw std::invalid_argument("enumerate_symmetric_involutions: requires d >= 1");
  if (d > 10) throw resource_error("enumerate_symmetric_involutions: d > 10 not supported");
  std::vector<SymmetricInvolution> out;
  std::vector<int> map(d, -1);
  // Match the smallest unassigned index with itself or a larger partner.
  auto rec = [&](auto&& self, int) -> void {
    int i = 0;
    while (i < d && map[i] >= 0) ++i;
    if (i == d) {
      out.emplace_back(map, d);
      return;
    }
    map[i] = i;
    self(self, 0);
    map[i] = -1;
    for (int j = i + 1; j < d; ++j) {
      if (map[j] >= 0) continue;
      map[i] = j;
      map[j] = i;
      self(self, 0);
      map[i] = map[j] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

BellState bell_state(const SymmetricInvolution& inv, const std::vector<double>& phases) {
  const int d = inv.d;
  if (int(phases.size()) != d) throw std::invalid_argument("bell_state: phase list length != d");
  for (int j = 0; j < d; ++j) {
    const int k = inv.mapping[j];
    if (k == j) continue;
    const Complex diff = std::exp(Complex(0.0, phases[j])) - std::exp(Complex(0.0, phases[k]));
    if (std::abs(diff) > 1e-12)
      throw std::domain_error(
          "bell_state: phases must agree on each 2-cycle, otherwise the state "
          "is not orthogonal to the antisymmetric space");
  }
  std::vector<Complex> c(std::size_t(d) * d, Complex(0.0));
  const double amp = 1.0 / std::sqrt(double(d));
  for (int j = 0; j < d; ++j)
    c[std::size_t(inv.mapping[j]) * d + j] = amp * std::exp(Complex(0.0, phases[j]));
  return BellState{flat_vector(d, std::move(c)), inv, phases};
}

std::vector<BellState> orthogonal_bell_family(int d, int n) {
  if (d < 2) throw std::invalid_argument("orthogonal_bell_family: requires d >= 2");
  if (n < 1 || n > d)
    throw std::invalid_argument("orthogonal_bell_family: requires 1 <= n <= d");
  std::vector<BellState> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    std::vector<int> map(d);
    for (int i = 0; i < d; ++i) map[i] = ((k - i) % d + d) % d;
    out.push_back(bell_state(SymmetricInvolution(std::move(map), d), std::vector<double>(d, 0.0)));
  }
  // Reflections differ at every index, so the matrices have disjoint support.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::abs(inner(out[a].vector, out[b].vector)) > 1e-12)
        throw std::logic_error("orthogonal_bell_family: reflection states not orthogonal");
  return out;
}

SubspaceBasis bell_extension(int d, int n) {
  if (d < 2) throw std::invalid_argument("bell_extension: requires d >= 2");
  if (n < 1 || n > d / 2)
    throw std::invalid_argument("bell_extension: requires 1 <= n <= floor(d/2)");
  SubspaceBasis basis = antisymmetric_basis(d);
  for (auto& s : orthogonal_bell_family(d, n)) basis.vectors.push_back(std::move(s.vector));
  return basis;
}

SubspaceBasis antisym_subspace(int d, int n) {
  if (d < 2) throw std::invalid_argument("antisym_subspace: requires d >= 2");
  if (n < 1 || n > choose2(d) - 1)
    throw std::invalid_argument("antisym_subspace: requires 1 <= n <= (d choose 2) - 1");
  SubspaceBasis basis = antisymmetric_basis(d);
  basis.vectors.resize(n);
  return basis;
}

ParthasarathyPair parthasarathy_spaces(int d,
                                       const std::optional<std::vector<Complex>>& lambdas) {
  if (d < 2) throw std::invalid_argument("parthasarathy_spaces: requires d >= 2");
  std::vector<Complex> g;
  if (lambdas) {
    g = *lambdas;
  } else {
    for (int k = 0; k < 2 * d - 1; ++k) g.push_back(Complex(double(k) / (2 * d - 1), 0.0));
  }
  if (int(g.size()) != 2 * d - 1)
    throw std::domain_error("parthasarathy_spaces: need exactly 2d-1 node values");
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (std::abs(g[a] - g[b]) < 1e-12)
        throw std::domain_error("parthasarathy_spaces: node values must be pairwise distinct");

  std::vector<TensorVector> raw;
  for (const Complex& lam : g) {
    std::vector<Complex> u(d);
    Complex pw = 1.0;
    for (int k = 0; k < d; ++k) {
      u[k] = pw;
      pw *= lam;
    }
    std::vector<Complex> c(std::size_t(d) * d);
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) c[std::size_t(k) * d + l] = u[k] * u[l];
    raw.push_back(flat_vector(d, std::move(c)));
  }
  auto [L, rank] = orthonormalize(raw);
  if (rank != 2 * d - 1)
    throw std::domain_error("parthasarathy_spaces: degenerate node set (rank deficiency)");

  // Complement from the eigendecomposition of P_L: eigenvalue-0 vectors span S.
  Eigensystem es = eig_hermitian(projector(L));
  SubspaceBasis S;
  S.ambient_dims = {d, d};
  for (int j = 0; j < d * d - (2 * d - 1); ++j) {
    if (es.values[j] > 0.5)
      throw std::logic_error("parthasarathy_spaces: unexpected projector spectrum");
    std::vector<Complex> c(std::size_t(d) * d);
    for (int i = 0; i < d * d; ++i) c[i] = es.vectors(i, j);
    S.vectors.push_back(flat_vector(d, std::move(c)));
  }
  return ParthasarathyPair{std::move(L), std::move(S)};
}

SubspaceBasis sum_representation_basis(int d) {
  if (d < 2) throw std::invalid_argument("sum_representation_basis: requires d >= 2");
  SubspaceBasis basis;
  basis.ambient_dims = {d, d};
  for (int s = 0; s <= 2 * d - 2; ++s) {
    std::vector<Complex> c(std::size_t(d) * d, Complex(0.0));
    const double norm = std::sqrt(double(d - std::abs(s - d + 1)));
    for (int k = 0; k < d; ++k) {
      const int l = s - k;
      if (l >= 0 && l < d) c[std::size_t(k) * d + l] = 1.0 / norm;
    }
    basis.vectors.push_back(flat_vector(d, std::move(c)));
  }
  return basis;
}

SubspaceBasis build_subspace(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::AntisymmetricFull: return antisymmetric_basis(spec.d);
    case Family::AntisymmetricSubspace: return antisym_subspace(spec.d, spec.n);
    case Family::BellExtension: return bell_extension(spec.d, spec.n);
    case Family::Parthasarathy: return parthasarathy_spaces(spec.d, spec.lambdas).S;
  }
  throw std::invalid_argument("build_subspace: unknown family");
}

}  // namespace addlab
