#include "addlab/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "addlab/errors.hpp"

namespace addlab {

namespace {

long long choose2(int d) { return (long long)d * (d - 1) / 2; }

// Ceiling with a 1e-12 relative fuzz so representational near-integers
// (e.g. 26.000000000000004) do not round up spuriously.
long long ceil_fuzz(double x) {
  return (long long)std::ceil(x - 1e-12 * std::max(1.0, std::abs(x)));
}

long long floor_fuzz(double x) {
  return (long long)std::floor(x + 1e-12 * std::max(1.0, std::abs(x)));
}

double subspace_threshold(double p, int d) {
  return std::pow(4.0, 1.0 / p - 1.0) * double(d) * double(d);
}

BoundReport make_report(ConstructionSpec spec, double p, double C, double c,
                        std::optional<double> m_assumed = std::nullopt) {
  BoundReport rep;
  rep.spec = std::move(spec);
  rep.p = p;
  rep.C = C;
  rep.c = c;
  rep.margin = 2.0 * C - c;
  rep.breaks = rep.margin > 0.0;
  rep.m_assumed = m_assumed;
  return rep;
}

}  // namespace

unsigned long long s_count(int d) {
  if (d < 1) throw std::invalid_argument("s_count: requires d >= 1");
  if (d > 34) throw resource_error("s_count: d > 34 overflows 64-bit counts");
  // term_k = d! / (2^k k! (d-2k)!), the involutions with exactly k 2-cycles
  unsigned long long total = 0, term = 1;
  for (int k = 0; 2 * k <= d; ++k) {
    if (k > 0) term = term * (unsigned long long)(d - 2 * k + 2) * (d - 2 * k + 1) / (2 * k);
    total += term;
  }
  return total;
}

double f_extension(double p, int d, double x) {
  if (d < 3) throw std::invalid_argument("f_extension: requires d >= 3");
  if (x < 1.0 || x > d / 2.0)
    throw std::invalid_argument("f_extension: x must lie in [1, d/2]");
  const double lead = std::pow(double(d) * (d - 1) + 2.0 * x, p);
  const double inner = std::pow(double(d) + 2.0 * x, p) + std::pow(double(d) - 2.0 * x, p);
  return lead - std::pow(2.0, -p) * inner * inner;
}

ExtensionRoot extension_root(double p, int d) {
  const double f1 = f_extension(p, d, 1.0);
  if (f1 <= 0.0)
    throw std::domain_error("extension_root: f(1) <= 0, pair (p,d) is outside the region");
  const double q = d / 4.0;
  const double fq = f_extension(p, d, q);
  if (fq >= 0.0) throw std::domain_error("extension_root: no sign change on [1, d/4]");

  double lo = 1.0, hi = q;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (f_extension(p, d, mid) > 0.0 ? lo : hi) = mid;
  }
  ExtensionRoot root;
  root.x0 = 0.5 * (lo + hi);
  root.r = int(std::floor(root.x0));
  // Chord through (1, f(1)) and (d/4, f(d/4)); f is concave, so its root
  // lower-bounds x0.
  root.bracket_a = 1.0 + f1 * (q - 1.0) / (f1 - fq);
  root.bracket_b = 0.5 * (1.0 - d + std::sqrt(1.0 - 4.0 * d + 2.0 * double(d) * d));
  return root;
}

BoundReport bounds_extension(double p, int d, int n) {
  if (!(p > 2.0)) throw std::invalid_argument("bounds_extension: requires p > 2");
  if (d < 3) throw std::invalid_argument("bounds_extension: requires d >= 3");
  if (n < 1 || 2 * n >= d)
    throw std::invalid_argument("bounds_extension: requires 1 <= n < d/2");
  const RenyiOrder order(p);
  const double A = double(d + 2 * n) / (2.0 * d);
  const double mu = (n + double(d) * (d - 1) / 2.0) / (double(d) * d);
  return make_report(ConstructionSpec{Family::BellExtension, d, n, std::nullopt}, p,
                     lower_bound_C(A, order), entropy_upper_from_mu1(mu, order));
}

BoundReport bounds_subspace(double p, int d, int n) {
  if (!(p > 2.0)) throw std::invalid_argument("bounds_subspace: requires p > 2");
  if (d < 2) throw std::invalid_argument("bounds_subspace: requires d >= 2");
  if (n < 1 || n > choose2(d) - 1)
    throw std::invalid_argument("bounds_subspace: requires 1 <= n <= (d choose 2) - 1");
  const RenyiOrder order(p);
  const double mu = double(n) / (double(d) * d);
  return make_report(ConstructionSpec{Family::AntisymmetricSubspace, d, n, std::nullopt}, p,
                     1.0, entropy_upper_from_mu1(mu, order));
}

BoundReport bounds_antisymmetric(double p, int d) {
  if (d < 2) throw std::invalid_argument("bounds_antisymmetric: requires d >= 2");
  const RenyiOrder order(p);
  const double mu = double(choose2(d)) / (double(d) * d);
  return make_report(ConstructionSpec{Family::AntisymmetricFull, d, 0, std::nullopt}, p, 1.0,
                     entropy_upper_from_mu1(mu, order));
}

BoundReport bounds_parthasarathy(double p, int d, double m) {
  const RenyiOrder order(p);
  if (d < 2) throw std::invalid_argument("bounds_parthasarathy: requires d >= 2");
  if (!(m > 0.0) || m > 0.5)
    throw std::domain_error("bounds_parthasarathy: m must lie in (0, 1/2]");
  const double mu = double(d - 1) * (d - 1) / (double(d) * d);
  return make_report(ConstructionSpec{Family::Parthasarathy, d, 0, std::nullopt}, p,
                     lower_bound_C(1.0 - m, order), entropy_upper_from_mu1(mu, order), m);
}

SubspaceCensus subspace_census(double p, int d) {
  if (!(p > 2.0))
    throw std::domain_error("subspace_census: requires p > 2 (d0 formula undefined otherwise)");
  if (d < 2) throw std::invalid_argument("subspace_census: requires d >= 2");
  const double x = subspace_threshold(p, d);
  SubspaceCensus census;
  census.l_formula = 1 - ceil_fuzz(x) + choose2(d);
  census.n_min = floor_fuzz(x) + 1;  // smallest integer strictly above x
  census.n_max = choose2(d) - 1;
  census.l_strict = std::max(0LL, census.n_max - census.n_min + 1);
  if (census.l_strict == 0) {
    census.n_min = 0;
    census.n_max = 0;
  }
  census.difference = census.l_formula - census.l_strict;
  const double root = std::sqrt(9.0 - std::pow(4.0, 1.0 / p + 1.0));
  census.d0 = int(ceil_fuzz(4.0 / (root - 1.0)));
  return census;
}

int parthasarathy_d0(double p, double m) {
  const RenyiOrder order(p);
  if (!(m > 0.0) || m > 0.5)
    throw std::domain_error("parthasarathy_d0: m must lie in (0, 1/2]");
  const double g = std::pow(1.0 - m, order.p) + std::pow(m, order.p);
  return int(ceil_fuzz(1.0 / (1.0 - std::pow(g, 1.0 / order.p))));
}

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::Member: return "true";
    case Membership::NonMember: return "false";
    case Membership::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

// C and c for an extension row evaluated outside the p > 2 verdict contract
// (used to annotate inconclusive p <= 2 rows; formulas are valid for p > 1).
void extension_row_values(double p, int d, int n, RegionScanRow& row) {
  const RenyiOrder order(p);
  const double A = double(d + 2 * n) / (2.0 * d);
  const double mu = (n + double(d) * (d - 1) / 2.0) / (double(d) * d);
  row.C = lower_bound_C(A, order);
  row.c = entropy_upper_from_mu1(mu, order);
  row.margin = 2.0 * *row.C - *row.c;
}

void scan_extension_row(double p, int d, RegionScanRow& row) {
  if (d < 3) {
    row.member = p > 2.0 ? Membership::NonMember : Membership::Inconclusive;
    return;
  }
  if (p > 2.0) {
    const BoundReport rep = bounds_extension(p, d, 1);
    row.C = rep.C;
    row.c = rep.c;
    row.margin = rep.margin;
    row.member = rep.breaks ? Membership::Member : Membership::NonMember;
    if (rep.breaks) {
      const ExtensionRoot root = extension_root(p, d);
      row.n_or_x0 = root.x0;
      row.r = root.r;
      row.bracket_a = root.bracket_a;
      row.bracket_b = root.bracket_b;
    }
  } else {
    row.member = Membership::Inconclusive;
    extension_row_values(p, d, 1, row);
    bool all_negative = true;
    for (int n = 1; 2 * n <= d; ++n)
      if (f_extension(p, d, n) >= 0.0) all_negative = false;
    row.all_f_nonpositive = all_negative;
  }
}

void scan_subspace_row(double p, int d, RegionScanRow& row) {
  const long long n_max = choose2(d) - 1;
  if (n_max < 1) {
    row.member = p > 2.0 ? Membership::NonMember : Membership::Inconclusive;
    return;
  }
  if (p > 2.0) {
    const SubspaceCensus census = subspace_census(p, d);
    row.census_formula = census.l_formula;
    row.census_strict = census.l_strict;
    // Membership is the sufficient region d > d0(p); the census
    // columns still record the per-dimension counts (which can be nonzero
    // just below d0, e.g. p = 3, d = 7).
    row.member = d > census.d0 ? Membership::Member : Membership::NonMember;
    if (census.l_strict > 0) {
      const BoundReport rep = bounds_subspace(p, d, int(census.n_min));
      row.n_or_x0 = double(census.n_min);
      row.C = rep.C;
      row.c = rep.c;
      row.margin = rep.margin;
    } else {
      const BoundReport rep = bounds_subspace(p, d, int(n_max));
      row.C = rep.C;
      row.c = rep.c;
      row.margin = rep.margin;
    }
  } else {
    const RenyiOrder order(p);
    row.member = Membership::Inconclusive;
    row.C = 1.0;
    row.c = entropy_upper_from_mu1(double(n_max) / (double(d) * d), order);
    row.margin = 2.0 - *row.c;
  }
}

void scan_antisym_row(double p, int d, RegionScanRow& row) {
  const BoundReport rep = bounds_antisymmetric(p, d);
  row.C = rep.C;
  row.c = rep.c;
  row.margin = rep.margin;
  if (p > 2.0)
    row.member = rep.breaks ? Membership::Member : Membership::NonMember;
  else
    row.member = Membership::Inconclusive;
}

void scan_parthasarathy_row(double p, int d, double m, RegionScanRow& row) {
  const BoundReport rep = bounds_parthasarathy(p, d, m);
  row.C = rep.C;
  row.c = rep.c;
  row.margin = rep.margin;
  row.member = rep.breaks ? Membership::Member : Membership::NonMember;
}

}  // namespace

RegionScan region_scan(Family family, const std::vector<double>& p_grid,
                       const std::vector<int>& d_grid, const ScanExtras& extras) {
  if (p_grid.empty() || d_grid.empty()) throw std::invalid_argument("region_scan: empty grid");
  for (double p : p_grid)
    if (!(p > 1.0)) throw std::invalid_argument("region_scan: every p must exceed 1");
  for (int d : d_grid)
    if (d < 2) throw std::invalid_argument("region_scan: every d must be >= 2");

  RegionScan scan;
  scan.family = family;
  scan.m = extras.m;
  for (double p : p_grid) {
    if (family == Family::AntisymmetricSubspace && p > 2.0)
      scan.d0_by_p.emplace_back(p, subspace_census(p, d_grid.front()).d0);
    if (family == Family::Parthasarathy)
      scan.d0_by_p.emplace_back(p, parthasarathy_d0(p, extras.m));
    for (int d : d_grid) {
      RegionScanRow row;
      row.p = p;
      row.d = d;
      switch (family) {
        case Family::AntisymmetricFull: scan_antisym_row(p, d, row); break;
        case Family::AntisymmetricSubspace: scan_subspace_row(p, d, row); break;
        case Family::BellExtension: scan_extension_row(p, d, row); break;
        case Family::Parthasarathy: scan_parthasarathy_row(p, d, extras.m, row); break;
      }
      scan.rows.push_back(std::move(row));
    }
  }
  return scan;
}

}  // namespace addlab
