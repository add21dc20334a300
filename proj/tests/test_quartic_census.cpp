// Tests for the pointless-quartic census: pinned frames, the pinned stream,
// isomorph computation, and the two classification engines.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "maxgon/gfield.hpp"
#include "maxgon/homforms.hpp"
#include "maxgon/projplane.hpp"
#include "maxgon/quartic_census.hpp"
#include "maxgon/util.hpp"
#include "maxgon/weilkit.hpp"

using namespace maxgon;

namespace {

std::vector<TernaryForm> stream_all(u32 q) {
  std::vector<TernaryForm> out;
  enumerate_pinned_pointless(q, [&](const TernaryForm& f) { out.push_back(f); });
  return out;
}

bool pointless_by_definition(const TernaryForm& f,
                             const std::vector<ProjPoint>& pts) {
  for (const ProjPoint& P : pts)
    if (evaluate(f, P) == 0) return false;
  return true;
}

bool pinned_by_definition(const TernaryForm& f, const PinnedFrame& fr) {
  return evaluate(f, fr.P1) == 0 && evaluate(f, fr.P2) == 0;
}

// The rational line through a degree-2 closed point and its conjugate,
// recomputed from scratch via the cross product over the quadratic extension.
std::array<elem, 3> site_line(const FieldCtx& F, const ClosedPoint& cp) {
  const FieldCtx& E = *cp.rep.F;
  const ProjPoint& P = cp.rep;
  const ProjPoint& Q = cp.orbit.at(1);
  std::array<elem, 3> cr{E.sub(E.mul(P.y, Q.z), E.mul(P.z, Q.y)),
                         E.sub(E.mul(P.z, Q.x), E.mul(P.x, Q.z)),
                         E.sub(E.mul(P.x, Q.y), E.mul(P.y, Q.x))};
  int lead = cr[0] ? 0 : (cr[1] ? 1 : 2);
  REQUIRE(cr[lead] != 0);
  elem iv = E.inv(cr[lead]);
  std::array<elem, 3> out{};
  for (int i = 0; i < 3; ++i) {
    elem w = E.mul(cr[i], iv);
    REQUIRE(E.in_subfield(w, F));
    elem code = 0;
    for (elem a = 0; a < F.size(); ++a)
      if (E.embed_from(F, a) == w) {
        code = a;
        break;
      }
    out[i] = code;
  }
  return out;
}

// Ordered pairs of quadratic points of the curve lying on distinct rational
// lines, counted directly from the closed-point list.
u64 ordered_distinct_line_pairs(const TernaryForm& f) {
  const FieldCtx& F = *f.F;
  std::vector<std::array<elem, 3>> lines;
  for (const ClosedPoint& cp : closed_points(F, 2))
    if (evaluate(f, cp.rep) == 0) lines.push_back(site_line(F, cp));
  u64 n = 0;
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = 0; j < lines.size(); ++j)
      if (i != j && lines[i] != lines[j]) ++n;
  return n;
}

Pgl3Map random_map(rng& gen, const FieldCtx& F) {
  for (;;) {
    std::array<elem, 9> m{};
    for (elem& v : m) v = static_cast<elem>(gen.below(F.size()));
    if (det3(F, m) != 0) return make_pgl3(F, m);
  }
}

u32 nonzero_terms(const TernaryForm& f) {
  u32 n = 0;
  for (elem c : f.c) n += c != 0;
  return n;
}

// Heavier fixtures shared across cases.
const std::vector<CensusEntry>& census3() {
  static const auto v = census(3);
  return v;
}
const std::vector<CensusEntry>& census4() {
  static const auto v = census(4);
  return v;
}
const std::vector<CensusEntry>& census5() {
  static const auto v = census(5);
  return v;
}
const std::vector<CensusEntry>& census7() {
  static const auto v = census(7);
  return v;
}
const std::vector<CensusEntry>& brute2() {
  static const auto v = brute_census_small(2);
  return v;
}
const std::vector<CensusEntry>& brute3() {
  static const auto v = brute_census_small(3);
  return v;
}
const std::vector<CensusEntry>& brute4() {
  static const auto v = brute_census_small(4);
  return v;
}

std::set<std::vector<elem>> canonical_set(const std::vector<CensusEntry>& es) {
  std::set<std::vector<elem>> out;
  for (const CensusEntry& e : es) out.insert(orbit_canonical_form(e.normal_form).c);
  return out;
}

}  // namespace

TEST_CASE("pinned frames pick the least degree-2 element on the two axes") {
  for (u32 q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    CAPTURE(q);
    PinnedFrame fr = pinned_frame(q);
    REQUIRE(fr.Fq != nullptr);
    REQUIRE(fr.Fq2 != nullptr);
    const FieldCtx& F = *fr.Fq;
    const FieldCtx& E = *fr.Fq2;
    CHECK(fr.q == q);
    CHECK(F.size() == q);
    CHECK(E.size() == q * q);
    CHECK(!E.in_subfield(fr.s1, F));
    CHECK(E.degree_over(fr.s1, F) == 2);

    // minimal multiplicative order, then minimal code, outside the subfield
    u64 ord = E.mult_order(fr.s1);
    for (elem a = 1; a < E.size(); ++a) {
      if (E.in_subfield(a, F)) continue;
      u64 o = E.mult_order(a);
      CHECK(o >= ord);
      if (o == ord) CHECK(a >= fr.s1);
    }

    CHECK(fr.P1 == make_point(E, fr.s1, 0, E.one()));
    CHECK(fr.P2 == make_point(E, 0, fr.s1, E.one()));
    CHECK(point_degree(fr.P1, F) == 2);
    CHECK(point_degree(fr.P2, F) == 2);
    CHECK(!(fr.P1 == fr.P2));
  }

  bool threw = false;
  try {
    pinned_frame(6);
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::bad_argument);
  }
  CHECK(threw);

  threw = false;
  try {
    pinned_frame(1024);  // quadratic extension would overflow the field cap
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::field_too_large);
  }
  CHECK(threw);
}

TEST_CASE("the pinned stream equals its definition over F2") {
  const FieldCtx& F = make_field(2, 1);
  PinnedFrame fr = pinned_frame(2);
  auto pts = enumerate_points(F);

  std::set<std::vector<elem>> defined;
  std::vector<elem> c(15, 0);
  c[0] = 1;
  for (u32 w = 0; w < (1u << 14); ++w) {
    for (u32 i = 0; i < 14; ++i) c[i + 1] = (w >> i) & 1;
    TernaryForm f = make_form(F, 4, c);
    if (pinned_by_definition(f, fr) && pointless_by_definition(f, pts))
      defined.insert(c);
  }

  std::set<std::vector<elem>> streamed;
  for (const TernaryForm& f : stream_all(2)) streamed.insert(f.c);

  CHECK(defined == streamed);
  CHECK(!streamed.empty());
}

TEST_CASE("every streamed form is scalar-normalized, pinned, and pointless") {
  for (u32 q : {3u, 4u, 5u}) {
    CAPTURE(q);
    PinnedFrame fr = pinned_frame(q);
    const FieldCtx& F = *fr.Fq;
    auto pts = enumerate_points(F);
    auto forms = stream_all(q);
    std::set<std::vector<elem>> distinct;
    for (const TernaryForm& f : forms) {
      REQUIRE(f.degree == 4);
      REQUIRE(f.c[0] == F.one());
      REQUIRE(pinned_by_definition(f, fr));
      REQUIRE(pointless_by_definition(f, pts));
      distinct.insert(f.c);
    }
    CHECK(distinct.size() == forms.size());
  }
}

TEST_CASE("the stream is complete on full slices of the coefficient space") {
  // Fix the x/y block of known survivors over F_3 and run all 3^10
  // completions of the remaining ten coefficients against the definition.
  const FieldCtx& F = make_field(3, 1);
  PinnedFrame fr = pinned_frame(3);
  auto pts = enumerate_points(F);

  std::set<std::vector<elem>> streamed;
  for (const TernaryForm& f : stream_all(3)) streamed.insert(f.c);

  static const u32 kFreeSlots[10] = {2, 5, 9, 14, 11, 12, 13, 4, 7, 8};
  REQUIRE(census3().size() >= 2);
  for (u32 pick : {0u, 1u}) {
    std::vector<elem> c = census3()[pick].normal_form.c;
    u64 total = 1;
    for (int i = 0; i < 10; ++i) total *= 3;
    u64 hits = 0;
    for (u64 w = 0; w < total; ++w) {
      u64 ww = w;
      for (u32 slot : kFreeSlots) {
        c[slot] = static_cast<elem>(ww % 3);
        ww /= 3;
      }
      TernaryForm f = make_form(F, 4, c);
      bool defined =
          pinned_by_definition(f, fr) && pointless_by_definition(f, pts);
      bool present = streamed.count(c) > 0;
      if (defined != present) {
        CAPTURE(w);
        REQUIRE(defined == present);
      }
      hits += defined;
    }
    CHECK(hits > 0);  // the slice contains at least the normal form itself
  }
}

TEST_CASE("classification engines reproduce the published class counts") {
  CHECK(brute2().size() == 4);
  CHECK(brute3().size() == 8);
  CHECK(brute4().size() == 21);
  CHECK(census(2).size() == 2);
  CHECK(census3().size() == 7);
  CHECK(census4().size() == 21);
  CHECK(census5().size() == 31);
  CHECK(census7().size() == 32);
}

TEST_CASE("projective group orders match the closed formula") {
  auto order = [](u64 q) {
    return (q * q * q - 1) * (q * q * q - q) * (q * q * q - q * q) / (q - 1);
  };
  CHECK(projective_group_order(2) == order(2));    // 168
  CHECK(projective_group_order(3) == order(3));    // 5616
  CHECK(projective_group_order(4) == order(4));    // 60480
  CHECK(projective_group_order(5) == order(5));    // 372000
  CHECK(projective_group_order(2) == 168);
  CHECK(projective_group_order(3) == 5616);
  CHECK(projective_group_order(4) == 60480);
  CHECK(projective_group_order(5) == 372000);

  bool threw = false;
  try {
    projective_group_order(8);
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::group_too_large);
  }
  CHECK(threw);
}

TEST_CASE("census entries carry consistent counts and polynomials") {
  auto check_entries = [](const std::vector<CensusEntry>& entries, u32 q,
                          bool from_pinned) {
    CAPTURE(q);
    std::set<std::vector<elem>> forms;
    for (const CensusEntry& e : entries) {
      REQUIRE(e.q == q);
      REQUIRE(e.normal_form.degree == 4);
      REQUIRE(is_smooth(e.normal_form));
      REQUIRE(e.counts[0] == 0);
      if (from_pinned) {
        REQUIRE(e.normal_form.c[0] == e.normal_form.F->one());
        REQUIRE(e.counts[1] >= 2);  // a pinnable pair needs two sites
      }
      forms.insert(e.normal_form.c);

      // independent recount through the closed-point enumerator
      CountsVector a = closed_point_counts(e.normal_form, 3);
      REQUIRE(a.size() == 3);
      CHECK(a[0] == e.counts[0]);
      CHECK(a[1] == e.counts[1]);
      CHECK(a[2] == e.counts[2]);

      // the recovered real Weil polynomial reproduces the point counts
      CHECK(e.real_weil.g == 3);
      CHECK(e.real_weil.q == q);
      CHECK(e.real_weil.h.is_monic());
      CHECK(e.real_weil.h.deg() == 3);
      CHECK(is_real_rooted_in_interval(e.real_weil));
      CHECK(counts_from_real_weil(e.real_weil, 3) ==
            point_counts(e.normal_form, 3));

      // second and third counts sit inside the Weil bounds
      i64 qi = q;
      i64 n2 = 2 * e.counts[1];  // no degree-1 points
      i64 n3 = 3 * e.counts[2];
      CHECK((n2 - qi * qi - 1) * (n2 - qi * qi - 1) <= 36 * qi * qi);
      CHECK((n3 - qi * qi * qi - 1) * (n3 - qi * qi * qi - 1) <=
            36 * qi * qi * qi);
    }
    CHECK(forms.size() == entries.size());
  };

  check_entries(brute2(), 2, false);
  check_entries(brute3(), 3, false);
  check_entries(brute4(), 4, false);
  check_entries(census3(), 3, true);
  check_entries(census4(), 4, true);
  check_entries(census5(), 5, true);
  check_entries(census7(), 7, true);

  // classes over F_7 have at least four quadratic points (Weil bound)
  for (const CensusEntry& e : census7()) CHECK(e.counts[1] >= 4);
}

TEST_CASE("pinned and orbit classifications agree where both run") {
  // q = 4: both engines see every class
  auto canon_pinned4 = canonical_set(census4());
  auto canon_brute4 = canonical_set(brute4());
  CHECK(canon_pinned4 == canon_brute4);

  // the brute normal form is already orbit-canonical
  for (const CensusEntry& e : brute4())
    CHECK(orbit_canonical_form(e.normal_form).c == e.normal_form.c);

  // q = 2, 3: the pinned census finds exactly the classes that admit a
  // pinnable pair; for every missed class the isomorph computation reports
  // the shortage of quadratic points
  for (u32 q : {2u, 3u}) {
    CAPTURE(q);
    const auto& pinned = q == 2 ? census(2) : census3();
    const auto& brute = q == 2 ? brute2() : brute3();
    auto canon_pinned = canonical_set(pinned);

    std::map<std::vector<elem>, std::array<i64, 3>> brute_by_canon;
    for (const CensusEntry& e : brute) brute_by_canon[e.normal_form.c] = e.counts;

    u32 missed = 0;
    for (const CensusEntry& e : brute) {
      if (canon_pinned.count(e.normal_form.c)) {
        CHECK(!pinned_isomorphs(e.normal_form).empty());
      } else {
        ++missed;
        bool threw = false;
        try {
          pinned_isomorphs(e.normal_form);
        } catch (const error& err) {
          threw = true;
          CHECK(err.code() == errc::not_enough_quadratic_points);
        }
        CHECK(threw);
      }
    }
    CHECK(missed == brute.size() - pinned.size());

    // counts agree class by class
    for (const CensusEntry& e : pinned) {
      auto it = brute_by_canon.find(orbit_canonical_form(e.normal_form).c);
      REQUIRE(it != brute_by_canon.end());
      CHECK(it->second == e.counts);
    }
  }
}

TEST_CASE("isomorph lists are complete, ordered, and sized by the pair count") {
  // Completeness: across all classes, the isomorph lists partition the
  // smooth members of the stream.
  for (u32 q : {2u, 3u, 4u}) {
    CAPTURE(q);
    const auto& entries = q == 2 ? census(2) : (q == 3 ? census3() : census4());
    u64 smooth_streamed = 0;
    for (const TernaryForm& f : stream_all(q)) smooth_streamed += is_smooth(f);
    u64 iso_total = 0;
    for (const CensusEntry& e : entries)
      iso_total += pinned_isomorphs(e.normal_form).size();
    CHECK(iso_total == smooth_streamed);
  }

  // Size: |isomorphs| * r = 4 * (ordered pairs on distinct lines) for an
  // integer r >= 1 dividing the projective group order.
  auto check_multiplicity = [](const CensusEntry& e, u64 group_order) {
    auto iso = pinned_isomorphs(e.normal_form);
    REQUIRE(!iso.empty());
    CHECK(iso.front() == e.normal_form);

    // ordered with fewer nonzero coefficients first, then lexicographically
    for (size_t i = 1; i < iso.size(); ++i) {
      u32 na = nonzero_terms(iso[i - 1]), nb = nonzero_terms(iso[i]);
      CHECK((na < nb || (na == nb && iso[i - 1].c < iso[i].c)));
    }

    u64 pairs = ordered_distinct_line_pairs(e.normal_form);
    REQUIRE(pairs > 0);
    CHECK((4 * pairs) % iso.size() == 0);
    u64 r = 4 * pairs / iso.size();
    CHECK(r >= 1);
    if (group_order) CHECK(group_order % r == 0);
  };

  for (const CensusEntry& e : census4()) check_multiplicity(e, 60480);
  for (const CensusEntry& e : census5()) check_multiplicity(e, 372000);
  for (size_t i = 0; i < census7().size(); i += 6)
    check_multiplicity(census7()[i], 5630688);
}

TEST_CASE("every isomorph is pinned, pointless, and in the same class") {
  rng gen(kDefaultSeed);
  PinnedFrame fr = pinned_frame(5);
  const FieldCtx& F = *fr.Fq;
  auto pts = enumerate_points(F);
  const CensusEntry& e = census5()[gen.below(census5().size())];
  auto iso = pinned_isomorphs(e.normal_form);
  for (const TernaryForm& g : iso) {
    REQUIRE(pinned_by_definition(g, fr));
    REQUIRE(g.c[0] == F.one());
  }
  // spot-check class membership through the canonical map
  auto canon = orbit_canonical_form(e.normal_form).c;
  for (size_t i = 0; i < iso.size(); i += std::max<size_t>(1, iso.size() / 4)) {
    REQUIRE(pointless_by_definition(iso[i], pts));
    REQUIRE(is_smooth(iso[i]));
    CHECK(orbit_canonical_form(iso[i]).c == canon);
  }
}

TEST_CASE("the first pinned quartic is invariant under coordinate changes") {
  rng gen(kDefaultSeed);

  // q = 3: all classes, several maps each
  for (const CensusEntry& e : census3()) {
    const FieldCtx& F = *e.normal_form.F;
    for (int rep = 0; rep < 6; ++rep) {
      TernaryForm g = substitute(e.normal_form, random_map(gen, F));
      CHECK(first_pinned_quartic(g) == e.normal_form);
    }
  }

  // q = 7: sampled classes
  for (size_t i : {0u, 13u, 31u}) {
    const CensusEntry& e = census7()[i];
    const FieldCtx& F = *e.normal_form.F;
    for (int rep = 0; rep < 4; ++rep) {
      TernaryForm g = substitute(e.normal_form, random_map(gen, F));
      CHECK(first_pinned_quartic(g) == e.normal_form);
    }
    CHECK(first_pinned_quartic(e.normal_form) == e.normal_form);
  }
}

TEST_CASE("worker splits produce identical censuses") {
  const auto& base = census4();
  for (u32 workers : {2u, 3u, 5u}) {
    CAPTURE(workers);
    auto split = census(4, workers);
    REQUIRE(split.size() == base.size());
    for (size_t i = 0; i < base.size(); ++i) {
      CHECK(split[i].normal_form == base[i].normal_form);
      CHECK(split[i].counts == base[i].counts);
      CHECK(split[i].real_weil.h == base[i].real_weil.h);
    }
  }
}

TEST_CASE("unsupported inputs are rejected with specific errors") {
  for (u32 q : {1u, 6u, 12u, 29u, 32u, 64u}) {
    CAPTURE(q);
    bool threw = false;
    try {
      census(q);
    } catch (const error& e) {
      threw = true;
      CHECK(e.code() == errc::unsupported_field);
    }
    CHECK(threw);
  }

  bool threw = false;
  try {
    brute_census_small(7);
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::unsupported_field);
  }
  CHECK(threw);

  // a non-quartic input
  const FieldCtx& F3 = make_field(3, 1);
  threw = false;
  try {
    pinned_isomorphs(parse_form(F3, 3, "x^3 + y^3 + z^3"));
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::bad_argument);
  }
  CHECK(threw);

  // a quartic with a rational point: x^4 + y^4 + z^4 vanishes at (1:1:1)
  threw = false;
  try {
    pinned_isomorphs(parse_form(F3, 4, "x^4 + y^4 + z^4"));
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::not_pointless);
  }
  CHECK(threw);

  // a pointless but singular quartic from the stream
  TernaryForm singular = zero_form(F3, 4);
  bool found = false;
  enumerate_pinned_pointless(3, [&](const TernaryForm& f) {
    if (!found && !is_smooth(f)) {
      singular = f;
      found = true;
    }
  });
  REQUIRE(found);
  threw = false;
  try {
    pinned_isomorphs(singular);
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::not_smooth);
  }
  CHECK(threw);

  // orbit canonicalization bounds
  threw = false;
  try {
    orbit_canonical_form(parse_form(make_field(2, 3), 4, "x^4 + y^4 + z^4"));
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::group_too_large);
  }
  CHECK(threw);
  threw = false;
  try {
    orbit_canonical_form(zero_form(F3, 4));
  } catch (const error& e) {
    threw = true;
    CHECK(e.code() == errc::bad_argument);
  }
  CHECK(threw);
}

TEST_CASE("orbit canonical forms are orbit invariants") {
  rng gen(kDefaultSeed);
  for (u32 q : {2u, 3u, 4u}) {
    CAPTURE(q);
    const FieldCtx& F = q == 4 ? make_field(2, 2) : make_field(q, 1);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<elem> c(15);
      bool nonzero = false;
      for (elem& x : c) {
        x = static_cast<elem>(gen.below(F.size()));
        nonzero = nonzero || x != 0;
      }
      if (!nonzero) c[3] = F.one();
      TernaryForm f = make_form(F, 4, c);
      TernaryForm canon = orbit_canonical_form(f);
      CHECK(orbit_canonical_form(canon) == canon);  // idempotent
      for (int m = 0; m < 4; ++m) {
        TernaryForm g = substitute(f, random_map(gen, F));
        CHECK(orbit_canonical_form(g) == canon);
      }
      // the canonical vector is minimal in particular among scaled copies
      for (elem s = 1; s < F.size(); ++s) {
        TernaryForm sf = scale(f, s);
        CHECK(orbit_canonical_form(sf) == canon);
      }
    }
  }
}
