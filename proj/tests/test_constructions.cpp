#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "addlab/bounds.hpp"
#include "addlab/constructions.hpp"
#include "addlab/errors.hpp"
#include "testutil.hpp"

using namespace addlab;
using testutil::make_rng;

TEST_CASE("antisymmetric_basis: d=2 is the singlet") {
  const SubspaceBasis basis = antisymmetric_basis(2);
  REQUIRE(basis.dim() == 1);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(basis.vectors[0].coeffs[1] - Complex(s)) < 1e-15);
  CHECK(std::abs(basis.vectors[0].coeffs[2] - Complex(-s)) < 1e-15);
}

TEST_CASE("antisymmetric_basis: (d choose 2) vectors, orthonormal, swap-odd") {
  for (int d : {2, 3, 4, 5}) {
    const SubspaceBasis basis = antisymmetric_basis(d);
    CHECK(basis.dim() == d * (d - 1) / 2);
    CHECK(basis.orthonormality_residual() < 1e-12);
    const Matrix v = swap_operator(d);
    for (const auto& w : basis.vectors) {
      const std::vector<Complex> swapped = v * w.coeffs;
      for (std::size_t k = 0; k < swapped.size(); ++k)
        CHECK(std::abs(swapped[k] + w.coeffs[k]) < 1e-12);
    }
  }
  CHECK_THROWS_AS(antisymmetric_basis(1), std::invalid_argument);
}

TEST_CASE("antisymmetric basis vectors all have mu1^2 = 1/2") {
  for (int d : {3, 4, 5})
    for (const auto& w : antisymmetric_basis(d).vectors) {
      const SchmidtSpectrum s = schmidt(w, 1);
      CHECK(s.coefficients[0] * s.coefficients[0] == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("antisymmetric projector equals (I - V)/2") {
  for (int d : {2, 3, 4, 5}) {
    const Matrix built = projector(antisymmetric_basis(d));
    const Matrix direct = 0.5 * (Matrix::identity(d * d) - swap_operator(d));
    CHECK((built - direct).max_abs() < 1e-12);
  }
}

TEST_CASE("enumerate_symmetric_involutions: counts match the brute-force filter") {
  for (int d = 1; d <= 6; ++d) {
    const auto list = enumerate_symmetric_involutions(d);
    CHECK((long long)list.size() == testutil::brute_force_involution_count(d));
    for (const auto& inv : list)
      for (int i = 0; i < d; ++i) CHECK(inv.mapping[inv.mapping[i]] == i);
  }
  CHECK(enumerate_symmetric_involutions(2).size() == 2);
  CHECK(enumerate_symmetric_involutions(4).size() == 10);
  CHECK(enumerate_symmetric_involutions(6).size() == 76);
  CHECK_THROWS_AS(enumerate_symmetric_involutions(11), resource_error);
}

TEST_CASE("bell_state: identity involution with zero phases is the Bell pair") {
  const SymmetricInvolution id({0, 1}, 2);
  const BellState psi = bell_state(id, {0.0, 0.0});
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(psi.vector.coeffs[0] - Complex(s)) < 1e-15);
  CHECK(std::abs(psi.vector.coeffs[3] - Complex(s)) < 1e-15);
}

TEST_CASE("bell_state: every output has mu1^2 = 1/d and a maximally mixed reduction") {
  auto rng = make_rng(53);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * 3.14159);
  for (int d : {3, 4, 5}) {
    for (const auto& inv : enumerate_symmetric_involutions(d)) {
      // random phases, constant on each 2-cycle
      std::vector<double> phases(d);
      for (int i = 0; i < d; ++i) {
        const int j = inv.mapping[i];
        phases[i] = (j >= i) ? uni(rng) : phases[j];
      }
      const BellState psi = bell_state(inv, phases);
      CHECK(std::abs(psi.vector.norm() - 1.0) < 1e-12);
      const SchmidtSpectrum s = schmidt(psi.vector, 1);
      CHECK(s.coefficients[0] * s.coefficients[0] ==
            doctest::Approx(1.0 / d).epsilon(1e-10));
      const DensityMatrix rho = partial_trace_env(psi.vector, {0});
      CHECK((rho.entries() - (1.0 / d) * Matrix::identity(d)).max_abs() < 1e-12);
    }
  }
}

TEST_CASE("bell_state: orthogonal to the antisymmetric space") {
  for (int d : {3, 4, 5}) {
    const SubspaceBasis anti = antisymmetric_basis(d);
    for (const auto& inv : enumerate_symmetric_involutions(d)) {
      const BellState psi = bell_state(inv, std::vector<double>(d, 0.0));
      for (const auto& a : anti.vectors)
        CHECK(std::abs(inner(a, psi.vector)) < 1e-12);
    }
  }
}

TEST_CASE("bell_state: errors") {
  const SymmetricInvolution swap01({1, 0, 2}, 3);
  CHECK_THROWS_AS(bell_state(swap01, {0.0, 0.0}), std::invalid_argument);  // wrong length
  // phases that differ on the 2-cycle would leave the antisymmetric component alive
  CHECK_THROWS_AS(bell_state(swap01, {0.0, 1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(SymmetricInvolution({1, 2, 0}, 3), std::invalid_argument);  // 3-cycle
}

TEST_CASE("orthogonal_bell_family: pairwise orthogonal and orthogonal to antisym") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{4, 2}, {5, 5}, {6, 3}}) {
    const auto family = orthogonal_bell_family(d, n);
    REQUIRE(int(family.size()) == n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        CHECK(std::abs(inner(family[a].vector, family[b].vector)) < 1e-12);
    const SubspaceBasis anti = antisymmetric_basis(d);
    for (const auto& psi : family)
      for (const auto& w : anti.vectors) CHECK(std::abs(inner(w, psi.vector)) < 1e-12);
  }
  CHECK_THROWS_AS(orthogonal_bell_family(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(orthogonal_bell_family(4, 0), std::invalid_argument);
}

TEST_CASE("bell_extension: dimensions and orthonormality") {
  CHECK(bell_extension(4, 1).dim() == 7);
  CHECK(bell_extension(6, 3).dim() == 18);
  CHECK(bell_extension(6, 3).orthonormality_residual() < 1e-12);
  CHECK_THROWS_AS(bell_extension(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(bell_extension(4, 0), std::invalid_argument);
}

TEST_CASE("antisym_subspace: prefix of the canonical basis") {
  const SubspaceBasis w = antisym_subspace(4, 5);
  CHECK(w.dim() == 5);
  CHECK(w.orthonormality_residual() < 1e-12);
  // largest admitted n is (d choose 2) - 1
  CHECK(antisym_subspace(4, 5).dim() == 5);
  CHECK_THROWS_AS(antisym_subspace(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(antisym_subspace(4, 0), std::invalid_argument);
}

TEST_CASE("parthasarathy_spaces: d=2 complement is the singlet") {
  const auto pair = parthasarathy_spaces(2);
  CHECK(pair.L.dim() == 3);
  REQUIRE(pair.S.dim() == 1);
  // one-dimensional S must be proportional to the antisymmetric singlet
  const SubspaceBasis anti = antisymmetric_basis(2);
  CHECK(std::abs(std::abs(inner(pair.S.vectors[0], anti.vectors[0])) - 1.0) < 1e-10);
}

TEST_CASE("parthasarathy_spaces: dim S = (d-1)^2") {
  for (int d : {2, 3, 4, 5}) {
    const auto pair = parthasarathy_spaces(d);
    CHECK(pair.L.dim() == 2 * d - 1);
    CHECK(pair.S.dim() == (d - 1) * (d - 1));
    CHECK(pair.S.orthonormality_residual() < 1e-10);
    // S really is the orthogonal complement of L
    for (const auto& s : pair.S.vectors)
      for (const auto& l : pair.L.vectors) CHECK(std::abs(inner(l, s)) < 1e-9);
  }
}

TEST_CASE("parthasarathy_spaces: span is independent of the node set") {
  const int d = 3;
  const auto a = parthasarathy_spaces(d);
  std::vector<Complex> nodes;
  for (int k = 0; k < 2 * d - 1; ++k) nodes.push_back(Complex(0.3 + 0.17 * k, 0.05 * k));
  const auto b = parthasarathy_spaces(d, nodes);
  CHECK((projector(a.L) - projector(b.L)).max_abs() < 1e-9);
  CHECK_THROWS_AS(parthasarathy_spaces(d, std::vector<Complex>(2 * d - 1, Complex(0.5))),
                  std::domain_error);
}

TEST_CASE("sum_representation_basis: d=2 matches the hand-built vectors") {
  const SubspaceBasis basis = sum_representation_basis(2);
  REQUIRE(basis.dim() == 3);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(basis.vectors[0].coeffs[0] - Complex(1.0)) < 1e-15);  // e0 e0
  CHECK(std::abs(basis.vectors[1].coeffs[1] - Complex(s)) < 1e-15);    // (e0 e1 + e1 e0)/sqrt2
  CHECK(std::abs(basis.vectors[1].coeffs[2] - Complex(s)) < 1e-15);
  CHECK(std::abs(basis.vectors[2].coeffs[3] - Complex(1.0)) < 1e-15);  // e1 e1
}

TEST_CASE("sum_representation_basis: middle diagonal has squared norm d") {
  for (int d : {2, 3, 4, 6}) {
    // reconstruct v_{d-1} = sqrt(d) * w_{d-1}
    const TensorVector w = sum_representation_basis(d).vectors[d - 1];
    double nonzero = 0.0;
    for (const auto& z : w.coeffs)
      if (std::abs(z) > 0) nonzero += 1.0;
    CHECK(nonzero == doctest::Approx(double(d)));
    CHECK(std::abs(w.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("sum_representation basis spans the node space") {
  for (int d = 2; d <= 6; ++d) {
    const Matrix from_nodes = projector(parthasarathy_spaces(d).L);
    const Matrix from_sums = projector(sum_representation_basis(d));
    CHECK((from_nodes - from_sums).max_abs() < 1e-9);
  }
}

TEST_CASE("zero-phase Bell states span 1 + (d choose 2) dimensions, d = 2..6") {
  for (int d = 2; d <= 6; ++d) {
    std::vector<TensorVector> all;
    for (const auto& inv : enumerate_symmetric_involutions(d))
      all.push_back(bell_state(inv, std::vector<double>(d, 0.0)).vector);
    auto [basis, rank] = orthonormalize(all);
    CHECK(rank == 1 + d * (d - 1) / 2);
  }
}

TEST_CASE("s_count matches the recursive enumerator") {
  for (int d = 1; d <= 8; ++d)
    CHECK(s_count(d) == enumerate_symmetric_involutions(d).size());
}

TEST_CASE("build_subspace: dispatch per family") {
  CHECK(build_subspace({Family::AntisymmetricFull, 4, 0, std::nullopt}).dim() == 6);
  CHECK(build_subspace({Family::AntisymmetricSubspace, 4, 3, std::nullopt}).dim() == 3);
  CHECK(build_subspace({Family::BellExtension, 6, 2, std::nullopt}).dim() == 17);
  CHECK(build_subspace({Family::Parthasarathy, 3, 0, std::nullopt}).dim() == 4);
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::AntisymmetricFull, Family::AntisymmetricSubspace,
                   Family::BellExtension, Family::Parthasarathy})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_FALSE(family_from_name("nonsense").has_value());
}
