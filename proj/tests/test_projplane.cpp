// Tests for projective plane points, closed points, and the PGL3 action.

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "maxgon/gfield.hpp"
#include "maxgon/projplane.hpp"
#include "maxgon/util.hpp"

using namespace maxgon;

namespace {

u64 plane_size(u64 Q) { return Q * Q + Q + 1; }

bool is_normalized(const ProjPoint& P) {
  elem lead = P.x != 0 ? P.x : (P.y != 0 ? P.y : P.z);
  return lead == P.F->one();
}

}  // namespace

TEST_CASE("point enumeration: counts, order, normalization") {
  const FieldCtx& F2 = make_field(2, 1);
  const FieldCtx& F8 = make_field(2, 3);
  const FieldCtx& F29 = make_field(29, 1);

  CHECK(enumerate_points(F2).size() == 7);
  CHECK(enumerate_points(F8).size() == 73);
  CHECK(enumerate_points(F29).size() == 871);

  for (const FieldCtx* F : {&F2, &F8, &F29}) {
    std::vector<ProjPoint> pts = enumerate_points(*F);
    CHECK(pts.size() == plane_size(F->size()));
    std::set<ProjPoint> distinct(pts.begin(), pts.end());
    CHECK(distinct.size() == pts.size());
    for (const ProjPoint& P : pts) {
      CHECK(is_normalized(P));
      // normalization is idempotent
      CHECK(make_point(*F, P.x, P.y, P.z) == P);
    }
    CHECK(pts.front() == make_point(*F, 0, 0, F->one()));
    CHECK(pts.back() == make_point(*F, F->one(), 0, 0));
  }
}

TEST_CASE("make_point normalizes and rejects the zero triple") {
  const FieldCtx& F4 = make_field(2, 2);
  elem t = F4.gen();
  CHECK(make_point(F4, t, t, 0) == make_point(F4, 1, 1, 0));
  CHECK(make_point(F4, 0, t, F4.one()) == make_point(F4, 0, 1, F4.inv(t)));
  CHECK(make_point(F4, 0, 0, t).z == F4.one());
  CHECK_THROWS_AS(make_point(F4, 0, 0, 0), error);
  CHECK_THROWS_AS(make_point(F4, 7, 0, 1), error);  // out of range
}

TEST_CASE("point literals round-trip") {
  const FieldCtx& F8 = make_field(2, 3);
  ProjPoint P = parse_point(F8, "0:1:t");
  CHECK(P == make_point(F8, 0, 1, F8.gen()));
  CHECK(point_to_string(P) == "0:1:t");

  ProjPoint Q = parse_point(F8, "1:t:t^2");
  CHECK(Q.y == F8.gen());
  CHECK(Q.z == F8.pow(F8.gen(), 2));

  const FieldCtx& F9 = make_field(3, 2);
  for (const ProjPoint& R : enumerate_points(F9))
    CHECK(parse_point(F9, point_to_string(R)) == R);

  CHECK_THROWS_AS(parse_point(F8, "1:0"), error);
  CHECK_THROWS_AS(parse_point(F8, "1:0:0:0"), error);
  CHECK_THROWS_AS(parse_point(F8, "0:0:0"), error);
}

TEST_CASE("Frobenius orbits and closed point structure") {
  const FieldCtx& F2 = make_field(2, 1);
  const FieldCtx& F8 = make_field(2, 3);
  elem t = F8.gen();

  ProjPoint P = make_point(F8, 0, 1, t);
  CHECK(point_degree(P, F2) == 3);
  ClosedPoint cp = closed_point_of(P, F2);
  CHECK(cp.degree == 3);
  CHECK(cp.rep == P);
  REQUIRE(cp.orbit.size() == 3);
  CHECK(cp.orbit[1] == make_point(F8, 0, 1, F8.pow(t, 2)));
  CHECK(cp.orbit[2] == make_point(F8, 0, 1, F8.pow(t, 4)));

  // rational points have singleton orbits
  ProjPoint R = make_point(F8, 1, 1, 0);
  CHECK(point_degree(R, F2) == 1);
  CHECK(closed_point_of(R, F2).degree == 1);

  // rep is the orbit minimum even when seeded elsewhere in the orbit
  ClosedPoint cp2 = closed_point_of(cp.orbit[2], F2);
  CHECK(cp2.rep == P);
}

TEST_CASE("closed point counts over F_2 and F_3") {
  const FieldCtx& F2 = make_field(2, 1);
  CHECK(closed_points(F2, 1).size() == 7);
  CHECK(closed_points(F2, 2).size() == 7);
  CHECK(closed_points(F2, 3).size() == 22);
  CHECK(closed_points(F2, 4).size() == 63);
  CHECK(closed_points(F2, 5).size() == 210);

  // sum over d | r of d * (#closed points of degree d) covers P^2(F_{q^r})
  for (u32 p : {2u, 3u}) {
    const FieldCtx& F = make_field(p, 1);
    std::map<u32, u64> counts;
    for (u32 d = 1; d <= 6; ++d) counts[d] = closed_points(F, d).size();
    for (u32 r = 1; r <= 6; ++r) {
      u64 Qr = 1;
      for (u32 i = 0; i < r; ++i) Qr *= p;
      u64 sum = 0;
      for (u32 d = 1; d <= r; ++d)
        if (r % d == 0) sum += d * counts[d];
      CHECK(sum == plane_size(Qr));
    }
  }
}

TEST_CASE("closed point lists are canonical and well-formed") {
  const FieldCtx& F2 = make_field(2, 1);
  std::vector<ClosedPoint> pts = closed_points(F2, 3);
  for (size_t i = 0; i + 1 < pts.size(); ++i) CHECK(pts[i].rep < pts[i + 1].rep);
  for (const ClosedPoint& cp : pts) {
    REQUIRE(cp.orbit.size() == cp.degree);
    CHECK(cp.rep == cp.orbit.front());
    for (const ProjPoint& P : cp.orbit) {
      CHECK(!(P < cp.rep));
      CHECK(point_degree(P, F2) == cp.degree);
    }
    // orbit is Frobenius-stable and cyclically ordered
    for (size_t i = 0; i < cp.orbit.size(); ++i)
      CHECK(frobenius_point(cp.orbit[i], F2) ==
            cp.orbit[(i + 1) % cp.orbit.size()]);
  }
}

TEST_CASE("PGL3 group enumeration") {
  const FieldCtx& F2 = make_field(2, 1);
  const FieldCtx& F3 = make_field(3, 1);
  const FieldCtx& F4 = make_field(2, 2);
  const FieldCtx& F5 = make_field(5, 1);

  const std::vector<Pgl3Map>& G2 = pgl3_all(F2);
  CHECK(G2.size() == 168);
  CHECK(pgl3_all(F3).size() == 5616);
  CHECK(pgl3_all(F4).size() == 60480);
  CHECK_THROWS_AS(pgl3_all(F5), error);

  for (const Pgl3Map& g : G2) {
    CHECK(det3(F2, g.m) != 0);
    size_t lead = 0;
    while (lead < 9 && g.m[lead] == 0) ++lead;
    CHECK(g.m[lead] == F2.one());
  }
  CHECK(std::set<Pgl3Map>(G2.begin(), G2.end()).size() == 168);

  Pgl3Map id = make_pgl3(F2, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(std::binary_search(G2.begin(), G2.end(), id));

  // group laws on a sample: closure, inverses, associativity
  rng gen(kDefaultSeed);
  for (int i = 0; i < 50; ++i) {
    const Pgl3Map& a = G2[gen.below(G2.size())];
    const Pgl3Map& b = G2[gen.below(G2.size())];
    const Pgl3Map& c = G2[gen.below(G2.size())];
    CHECK(std::binary_search(G2.begin(), G2.end(), pgl3_compose(a, b)));
    CHECK(pgl3_compose(a, pgl3_inverse(a)) == id);
    CHECK(pgl3_compose(pgl3_compose(a, b), c) ==
          pgl3_compose(a, pgl3_compose(b, c)));
  }
}

TEST_CASE("make_pgl3 validation and normalization") {
  const FieldCtx& F3 = make_field(3, 1);
  CHECK_THROWS_AS(make_pgl3(F3, {1, 0, 0, 0, 1, 0, 1, 1, 0}), error);  // singular
  CHECK_THROWS_AS(make_pgl3(F3, {0, 0, 0, 0, 0, 0, 0, 0, 0}), error);
  // scaling: 2*I normalizes to I over F_3
  Pgl3Map m = make_pgl3(F3, {2, 0, 0, 0, 2, 0, 0, 0, 2});
  CHECK(m == make_pgl3(F3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));

  const FieldCtx& F2 = make_field(2, 1);
  Pgl3Map a = make_pgl3(F2, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  Pgl3Map b = make_pgl3(F3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK_THROWS_AS(pgl3_compose(a, b), error);
}

TEST_CASE("pgl3_apply fixtures and degree preservation") {
  const FieldCtx& F2 = make_field(2, 1);
  const FieldCtx& F8 = make_field(2, 3);
  elem t = F8.gen();

  Pgl3Map id = make_pgl3(F2, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  ProjPoint P = make_point(F8, 1, t, F8.pow(t, 2));
  CHECK(pgl3_apply(id, P) == P);

  Pgl3Map swap_xy = make_pgl3(F2, {0, 1, 0, 1, 0, 0, 0, 0, 1});
  CHECK(pgl3_apply(swap_xy, make_point(F8, 0, 1, t)) == make_point(F8, 1, 0, t));

  Pgl3Map shear = make_pgl3(F2, {1, 0, 0, 0, 1, 0, 1, 1, 1});
  CHECK(pgl3_apply(shear, make_point(F2, 1, 1, 0)) == make_point(F2, 1, 1, 0));

  // the action preserves degree and is compatible with composition
  rng gen(kDefaultSeed);
  const std::vector<Pgl3Map>& G2 = pgl3_all(F2);
  for (const ProjPoint& Q :
       {P, make_point(F8, 0, 1, t), make_point(F8, 1, 1, F8.pow(t, 3))}) {
    u32 deg = point_degree(Q, F2);
    for (int i = 0; i < 25; ++i) {
      const Pgl3Map& a = G2[gen.below(G2.size())];
      const Pgl3Map& b = G2[gen.below(G2.size())];
      CHECK(point_degree(pgl3_apply(a, Q), F2) == deg);
      CHECK(pgl3_apply(pgl3_compose(a, b), Q) ==
            pgl3_apply(a, pgl3_apply(b, Q)));
    }
  }

  // a map over F_8 cannot act on coordinates in F_4 (no embedding)
  const FieldCtx& F4 = make_field(2, 2);
  Pgl3Map m8 = make_pgl3(F8, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK_THROWS_AS(pgl3_apply(m8, make_point(F4, 1, F4.gen(), 0)), error);
}

TEST_CASE("PGL3 orbit decomposition over F_2") {
  const FieldCtx& F2 = make_field(2, 1);
  const FieldCtx& F8 = make_field(2, 3);
  elem t = F8.gen();

  auto check_partition = [&](const std::vector<ClosedPoint>& pts,
                             const std::vector<std::vector<ClosedPoint>>& orbits) {
    std::set<ProjPoint> seen;
    size_t total = 0;
    for (const auto& orb : orbits) {
      REQUIRE(!orb.empty());
      CHECK(168 % orb.size() == 0);
      for (size_t i = 0; i + 1 < orb.size(); ++i) CHECK(orb[i].rep < orb[i + 1].rep);
      for (const ClosedPoint& cp : orb) seen.insert(cp.rep);
      total += orb.size();
    }
    CHECK(total == pts.size());
    CHECK(seen.size() == pts.size());
  };

  std::vector<ClosedPoint> deg2 = closed_points(F2, 2);
  auto orb2 = pgl3_orbits(F2, deg2);
  CHECK(orb2.size() == 1);
  check_partition(deg2, orb2);

  std::vector<ClosedPoint> deg3 = closed_points(F2, 3);
  auto orb3 = pgl3_orbits(F2, deg3);
  CHECK(orb3.size() == 2);
  check_partition(deg3, orb3);

  // (0:1:t) and (1:t:t^2) represent the two distinct cubic orbits
  ProjPoint A = make_point(F8, 0, 1, t);
  ProjPoint B = make_point(F8, 1, t, F8.pow(t, 2));
  int orbit_of_A = -1, orbit_of_B = -1;
  for (size_t i = 0; i < orb3.size(); ++i)
    for (const ClosedPoint& cp : orb3[i]) {
      if (cp.rep == A) orbit_of_A = static_cast<int>(i);
      if (cp.rep == B) orbit_of_B = static_cast<int>(i);
    }
  CHECK(orbit_of_A >= 0);
  CHECK(orbit_of_B >= 0);
  CHECK(orbit_of_A != orbit_of_B);

  std::vector<ClosedPoint> deg4 = closed_points(F2, 4);
  auto orb4 = pgl3_orbits(F2, deg4);
  CHECK(orb4.size() == 2);
  check_partition(deg4, orb4);

  // structural check over F_3 as well
  const FieldCtx& F3 = make_field(3, 1);
  std::vector<ClosedPoint> d2q3 = closed_points(F3, 2);
  auto orb = pgl3_orbits(F3, d2q3);
  size_t total = 0;
  for (const auto& o : orb) {
    CHECK(5616 % o.size() == 0);
    total += o.size();
  }
  CHECK(total == d2q3.size());
}
