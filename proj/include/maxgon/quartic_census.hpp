#pragma once
// Exhaustive classification of pointless smooth plane quartics over small
// finite fields.  Two engines: a brute-force orbit classification for
// q <= 5, and a "pinned quartic" search for larger q that fixes two
// quadratic points of the plane and enumerates only quartics through them.

#include <array>
#include <functional>
#include <vector>

#include "maxgon/gfield.hpp"
#include "maxgon/homforms.hpp"
#include "maxgon/projplane.hpp"
#include "maxgon/util.hpp"
#include "maxgon/weilkit.hpp"

namespace maxgon {

// Fixed reference data for the pinned search over F_q: a degree-2 element
// s1 of F_{q^2} (least multiplicative order, then least code, among the
// elements outside F_q) and the two quadratic points P1 = {(s1:0:1)} and
// P2 = {(0:s1:1)}, which lie on the distinct rational lines y = 0 and x = 0.
struct PinnedFrame {
  u32 q = 0;
  const FieldCtx* Fq = nullptr;
  const FieldCtx* Fq2 = nullptr;
  elem s1 = 0;
  ProjPoint P1, P2;
};

// Builds the frame for any prime power q with q^2 within the field cap.
PinnedFrame pinned_frame(u32 q);

// One isomorphism class of pointless smooth quartics over F_q: a canonical
// defining form, the number of points of degree 1..3 on the curve, and the
// real Weil polynomial recovered from those counts.
struct CensusEntry {
  u32 q = 0;
  TernaryForm normal_form;
  std::array<i64, 3> counts{};
  RealWeilPoly real_weil;
};

// Streams every quartic over F_q (scalar-normalized: coefficient of x^4
// equal to 1) that vanishes at the frame's two quadratic points and has no
// rational zero.  Coefficients are chosen line by line — the x/y block is
// pre-filtered against the line z = 0, the x/z and y/z blocks against their
// lines, and only then are the remaining affine points checked.
void enumerate_pinned_pointless(
    u32 q, const std::function<void(const TernaryForm&)>& emit);

// Every pinned quartic isomorphic to f, sorted with fewer nonzero
// coefficients first and lexicographically smaller coefficient vectors
// within a group; obtained by moving each ordered pair of quadratic points
// of the curve on distinct rational lines onto (P1, P2) in all four ways.
// Requires f smooth and pointless with such a pair available.
std::vector<TernaryForm> pinned_isomorphs(const TernaryForm& f);

// The first element of pinned_isomorphs: a normal form for the isomorphism
// class, idempotent and invariant under projective changes of coordinates.
TernaryForm first_pinned_quartic(const TernaryForm& f);

// Full census of pointless smooth quartic classes via the pinned search.
// Splitting across workers partitions the x/y coefficient block; every
// worker count yields the same sorted entries.
std::vector<CensusEntry> census(u32 q, u32 workers = 1);

// Census by explicit projective-linear orbit classification, for q <= 5
// where the pinned method's quadratic-point supply is not guaranteed.  The
// normal form of each class is the least coefficient vector in its orbit.
std::vector<CensusEntry> brute_census_small(u32 q);

// The least coefficient vector over the full projective-linear orbit of f,
// computed by closure under generator moves; sized for small fields only.
TernaryForm orbit_canonical_form(const TernaryForm& f);

// The number of elements of the projective linear group of the plane over
// F_q reached by closing the generator set used for orbit computations;
// equals the order of the full group.
u64 projective_group_order(u32 q);

// Verification of a single known curve over a field where enumeration is
// out of reach: checks pointlessness and smoothness, recomputes the real
// Weil polynomial from the point counts, and cross-checks the counts
// derived back from that polynomial.
struct UniqueQuarticReport {
  u32 q = 0;
  TernaryForm form;
  bool pointless = false;
  bool smooth = false;
  std::array<i64, 3> counts{};
  RealWeilPoly real_weil;
  bool counts_match = false;
};

// x^4 + y^4 + z^4 over F_29; expected real Weil polynomial (T-10)^3.
UniqueQuarticReport verify_f29_unique();
// (x^2+xz)^2 + (y^2+yz)(x^2+xz) + (y^2+yz)^2 + z^4 over F_32.
UniqueQuarticReport verify_f32_unique();

// Census file line, tab-separated: field size, normal form, the counts
// a_1 a_2 a_3, and the real Weil polynomial's coefficients leading first.
//   "7\tx^4 + ... + 2*z^4\t0 34 144\t1 -9 21 -3"
// parse_census_line inverts census_line exactly (errc::parse_error).
std::string census_line(const CensusEntry& e);
CensusEntry parse_census_line(const std::string& line);

}  // namespace maxgon
