#pragma once

#include <optional>
#include <vector>

#include "addlab/constructions.hpp"
#include "addlab/entropy.hpp"

namespace addlab {

// The (C, c) pair of the two-sided entropy estimate for one construction:
// C lower-bounds the single-copy minimum output entropy, c upper-bounds the
// two-copy witness entropy; the construction breaks additivity when c < 2C.
struct BoundReport {
  ConstructionSpec spec;
  double p = 0.0;
  double C = 0.0;
  double c = 0.0;
  bool breaks = false;
  double margin = 0.0;  // 2C - c
  std::optional<double> m_assumed;  // Parthasarathy only
};

// Number of involutions of {0,...,d-1} (exact integer arithmetic).
unsigned long long s_count(int d);

// [d(d-1)+2x]^p - 2^{-p} [(d+2x)^p + (d-2x)^p]^2, the extension-family
// breaking criterion; positive iff the n = x extension breaks. Defined for
// any real p (the p = 2 scan relies on it); requires 1 <= x <= d/2.
double f_extension(double p, int d, double x);

struct ExtensionRoot {
  double x0 = 0.0;      // root of f located by bisection on [1, d/4]
  int r = 0;            // floor(x0): the number of admissible extensions
  double bracket_a = 0.0;  // chord root through (1,f(1)) and (d/4,f(d/4))
  double bracket_b = 0.0;  // (1 - d + sqrt(1 - 4d + 2d^2)) / 2
};

// Requires f(1) > 0 (region membership), else std::domain_error.
ExtensionRoot extension_root(double p, int d);

BoundReport bounds_extension(double p, int d, int n);
BoundReport bounds_subspace(double p, int d, int n);
// The unextended antisymmetric space (n = (d choose 2)).
BoundReport bounds_antisymmetric(double p, int d);
BoundReport bounds_parthasarathy(double p, int d, double m);

struct SubspaceCensus {
  long long l_formula = 0;  // 1 - ceil(4^{1/p-1} d^2) + (d choose 2)
  long long l_strict = 0;   // |{n : 4^{1/p-1} d^2 < n < (d choose 2)}|
  long long difference = 0; // l_formula - l_strict
  int d0 = 0;               // ceil(4 (-1 + sqrt(9 - 4^{1/p+1}))^{-1})
  long long n_min = 0;      // empty range when l_strict = 0
  long long n_max = 0;
};

SubspaceCensus subspace_census(double p, int d);

// ceil((1 - [(1-m)^p + m^p]^{1/p})^{-1}): first dimension beyond which the
// Parthasarathy criterion holds for the given m.
int parthasarathy_d0(double p, double m);

enum class Membership { Member, NonMember, Inconclusive };

std::string membership_name(Membership m);

struct RegionScanRow {
  double p = 0.0;
  int d = 0;
  Membership member = Membership::NonMember;
  std::optional<double> n_or_x0;
  std::optional<double> C, c, margin;
  // extension extras
  std::optional<int> r;
  std::optional<double> bracket_a, bracket_b;
  std::optional<bool> all_f_nonpositive;  // recorded for p <= 2 rows
  // subspace extras
  std::optional<long long> census_formula, census_strict;
};

struct RegionScan {
  Family family = Family::AntisymmetricFull;
  double m = 0.5;  // Parthasarathy only
  std::vector<std::pair<double, int>> d0_by_p;  // subspace/parthasarathy metadata
  std::vector<RegionScanRow> rows;  // p-major, then d
};

struct ScanExtras {
  double m = 0.5;
};

RegionScan region_scan(Family family, const std::vector<double>& p_grid,
                       const std::vector<int>& d_grid, const ScanExtras& extras = {});

}  // namespace addlab
