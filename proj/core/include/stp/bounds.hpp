#pragma once

// Exact vertex-count bounds for the stochastic tensor polytope:
// combinatorial primitives, the named lower and upper bounds, permanents,
// the inclusion-exclusion Latin-square count, and the per-n comparison
// report.

#include "stp/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stp {

// C(a, b) with the conventions C(a, b) = 0 for b < 0 or b > a and
// C(a, 0) = 1, evaluated through the smaller symmetric index. Requires
// a >= 0.
Int binomial(long long a, long long b);

Int factorial(int n);  // n >= 0

// (n!)^(2n) / n^(n^2): the Latin-square count divided by the Van der
// Waerden permanent lower bound, a lower bound on the number of integral
// vertices alone. n >= 1.
Rational lower_latin_ratio(int n);

// C(n^3 + 6 n^2 - 6 n + 2, n^3 - 1) / n^3: the older upper bound on the
// total vertex count. n >= 2.
Rational old_upper(int n);

// Upper bound theorem maximum: no d-polytope with f facets has more
// vertices than C(f - floor((d+1)/2), f - d) + C(f - floor((d+2)/2), f - d),
// the vertex count of the dual cyclic polytope. d >= 1, f >= d + 1.
Int ubt_upper(long long d, long long f);

// ubt_upper applied to this polytope: dimension (n-1)^3, n^3 facets. n >= 2.
Int new_upper(int n);

// n^(3 n^2): the count of locally constrained candidates, far above the
// polytope bounds. n >= 2.
Int linial_luria_upper(int n);

// Maximum vertex count of a simplicial d-polytope with m facets:
// C(m - floor(d/2) - 1, floor((d-1)/2)) + C(m - floor((d-1)/2) - 1, floor(d/2)).
// d >= 2, m >= d + 1.
Int u0(long long d, long long m);

// Least m with u0(d, m) >= x, found by an upward scan from m = d + 1; the
// bracketing u0(d, m - 1) < x <= u0(d, m) is asserted. Inverting the
// simplicial maximum this way lower-bounds the facet count of any
// simplicial d-polytope with at least x vertices, and by duality the vertex
// count of a simple one with x facets. d >= 2, x >= 1.
long long l0(long long d, long long x);

// Lower bound theorem style bound for this polytope: l0((n-1)^3, n^3).
// Defined for n >= 3; at n = 2 the dimension is 1 and the scan degenerates.
long long lbt_lower(int n);

// Barnette's maximum for simplicial d-polytopes with f facets:
// floor((f + (d+1)(d-2)) / (d-1)); by duality it caps the vertex count of a
// simple d-polytope with f facets. d >= 2, f >= d + 1.
Int barnette_simplicial_max(long long d, long long f);

// Permanent of a square 0/1 matrix by Ryser inclusion-exclusion over column
// subsets. Validates squareness and entries. The 0 x 0 permanent is 1.
Int permanent(const std::vector<std::vector<int>>& matrix);

// Latin squares of order n counted by inclusion-exclusion over all 2^(n^2)
// 0/1 matrices, each weighted by a binomial in its permanent. Refuses n
// above the ceiling because the sweep is exponential. The work is split
// across threads (0 = hardware default); partials are exact integers summed
// in a fixed order, so the result is identical for every thread count.
// n >= 1.
Int latin_count_shao_wei(int n, int ceiling = 5, unsigned threads = 0);

// Outcomes of the exact bound comparisons at one n. Optional entries apply
// only for n >= 3 where the lower bound theorem value exists.
struct PropositionVerdicts {
  bool new_upper_below_old = false;           // new_upper(n) < old_upper(n)
  bool new_upper_below_linial_luria = false;  // new_upper(n) < n^(3 n^2)
  std::optional<bool> lbt_matches_closed_form;      // 11 at n = 3, (n-1)^3 + 2 beyond
  std::optional<bool> lbt_vs_latin_ratio_as_expected;  // above the ratio for n in {3, 4}, below for n >= 5
  std::optional<bool> lbt_below_new_upper;

  bool all_pass() const;
  bool operator==(const PropositionVerdicts&) const = default;
};

// Everything the toolkit knows about the vertex count of the order-n
// polytope. Optional fields are absent where undefined (lbt_lower and the
// simplicial maximum need dimension >= 2, the exact Latin count is only
// computed up to the enumeration ceiling).
struct BoundReport {
  int n = 0;
  Rational lower_latin_ratio;
  std::optional<Int> latin_count;
  std::optional<long long> lbt_lower;
  Int new_upper;
  Rational old_upper;
  Int linial_luria_upper;
  std::optional<Int> barnette_simplicial_max;
  PropositionVerdicts verdicts;

  bool operator==(const BoundReport&) const = default;
};

BoundReport make_bound_report(int n, int latin_ceiling = 5);  // 2 <= n <= 30

// One report per n in [n_min, n_max]; callers inspect the verdicts.
// 2 <= n_min <= n_max <= 30.
std::vector<BoundReport> verify_propositions(int n_min, int n_max);

// Short factored renderings for tables: "2*C(50,37)" when the two binomial
// terms of new_upper coincide, "C(23,19) + C(22,19)" otherwise, and
// "C(65,26)/27" for old_upper.
std::string new_upper_factored(int n);
std::string old_upper_factored(int n);

}  // namespace stp
