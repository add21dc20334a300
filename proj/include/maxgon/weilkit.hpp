#pragma once
// Real Weil polynomial machinery: point counts from a real Weil polynomial
// and back, exact real-rootedness in [-2*sqrt(q), 2*sqrt(q)], vanishing
// constraints, the (g, q) feasibility gate, and the coefficient sieve that
// enumerates candidate isogeny classes.

#include <string>
#include <utility>
#include <vector>

#include "maxgon/util.hpp"
#include "maxgon/zpoly.hpp"

namespace maxgon {

// Monic integer polynomial of degree g whose roots are the x_j = alpha_j +
// conj(alpha_j) for the Frobenius eigenvalues alpha_j over F_q.
struct RealWeilPoly {
  u32 g = 0;
  u32 q = 0;
  ZPoly h;
};

// Validates: h monic of degree g, q a prime power >= 2.
RealWeilPoly make_real_weil(u32 g, u32 q, ZPoly h);

// A candidate isogeny class: h together with the derived degree-2g Weil
// polynomial f(T) = T^g h(T + q/T), the point counts N[r-1] over F_{q^r} for
// r = 1..2g, and the closed point counts a[d-1] for d = 1..2g.
struct IsogenyClassRecord {
  RealWeilPoly h;
  ZPoly f;
  CountsVector N;
  CountsVector a;
};

// A set of required vanishing conditions: each entry {d1 < d2 < ...} means
// the product a_{d1} * a_{d2} * ... must be zero.
using DegreeSet = std::vector<u32>;
struct ConstraintSet {
  u32 g = 0;
  std::vector<DegreeSet> forbidden;
};

// N[r-1] = q^r + 1 - sum_j B_r(x_j) over the roots x_j of h, where B_0 = 2,
// B_1 = u, B_r = u*B_{r-1} - q*B_{r-2}; computed exactly via power sums.
CountsVector counts_from_real_weil(const RealWeilPoly& h, u32 r_max);

// Inverse of the above given N[0..g-1]: recovers f's leading coefficients by
// Newton's identities, completes f by the functional equation
// c_{2g-i} = q^{g-i} c_i, and reduces back to h. Throws
// NonIntegralReconstruction when no integer h matches the counts.
RealWeilPoly real_weil_from_counts(const CountsVector& N, u32 g, u32 q);

// f(T) = T^g h(T + q/T), expanded exactly.
ZPoly weil_from_real(const RealWeilPoly& h);

// Moebius inversion a_d = (1/d) sum_{r | d} mu(d/r) N_r; the result is
// integral for counts coming from an integer polynomial (checked).
CountsVector closed_counts(const CountsVector& N);

// Exact decision: are all complex roots of h real and in [-2√q, 2√q]?
// Endpoint roots are cleared first (factor T^2 - 4q for nonsquare q, the two
// linear factors for square q), then a Sturm count must equal the degree.
bool is_real_rooted_in_interval(const RealWeilPoly& h);

// All minimal-support degree sets {d1, ...} such that g - 2 is a sum of the
// d_i with every d_i used at least once; ordered by size, then
// lexicographically. (g >= 3.)
ConstraintSet vanishing_constraints(u32 g);

std::string constraint_to_string(const DegreeSet& s);  // "a_2 * a_3 = 0"

// All (g, q) with g in 3..10, q a prime power, and q^(g-2) < (2g)^2, ordered
// by g then q. (For g >= 11 no q qualifies.)
std::vector<std::pair<u32, u32>> weil_bound_pairs();

// Derives f, N, and a from h (no admissibility filtering).
IsogenyClassRecord make_record(const RealWeilPoly& h);

// a_d >= 0 for d <= 2g and every constraint product vanishes.
bool record_admissible(const IsogenyClassRecord& rec, const ConstraintSet& cs);

// Enumerates every monic integer h of degree g that is real-rooted in
// [-2√q, 2√q] and whose record is admissible; sorted by coefficient vector.
// Float root isolation only guides pruning — every output is validated with
// exact arithmetic. `workers` fans the top-level branches out over threads;
// the result is independent of the worker count.
std::vector<IsogenyClassRecord> sieve(u32 g, u32 q, const ConstraintSet& constraints,
                                      u32 workers = 1);

// Display factorization: monic integer factors of degree <= 4 extracted
// greedily (smallest first), remainder left whole; pairs are (factor, power).
std::vector<std::pair<ZPoly, u32>> factor_for_display(const ZPoly& h);

// "(T - 2)(T^2 - T - 5)", or the plain polynomial when it does not split.
std::string factored_string(const ZPoly& h);

// One stable line per record: factored h, coefficients (leading first), N
// and a vectors.
std::string record_line(const IsogenyClassRecord& rec);

}  // namespace maxgon
