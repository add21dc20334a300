#pragma once
// The projective plane over a small finite field: normalized points, closed
// points (Frobenius orbits with their degrees), and the PGL3 action with
// orbit decomposition for small base fields.

#include <array>
#include <string>
#include <vector>

#include "maxgon/gfield.hpp"

namespace maxgon {

// A point of P^2 with coordinates in *F, normalized so the first nonzero
// coordinate equals 1.
struct ProjPoint {
  const FieldCtx* F = nullptr;
  elem x = 0, y = 0, z = 0;

  bool operator==(const ProjPoint& o) const {
    return F == o.F && x == o.x && y == o.y && z == o.z;
  }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  // element-code order, coordinates compared left to right
  bool operator<(const ProjPoint& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

// Normalizing constructor; rejects (0:0:0).
ProjPoint make_point(const FieldCtx& F, elem x, elem y, elem z);

// All Q^2 + Q + 1 points, deterministically ordered: the z-chart classes of
// (a:b:1) by (a, b) element order, then (a:1:0) by a, then (1:0:0); every
// returned point is in normalized form.
std::vector<ProjPoint> enumerate_points(const FieldCtx& F);

std::string point_to_string(const ProjPoint& P);                     // "a:b:c"
ProjPoint parse_point(const FieldCtx& F, const std::string& text);   // inverse

// Frobenius over the base field applied coordinatewise (stays normalized).
ProjPoint frobenius_point(const ProjPoint& P, const FieldCtx& base);

// Degree of the point over `base`: size of its Frobenius orbit.
u32 point_degree(const ProjPoint& P, const FieldCtx& base);

// A closed point of degree d over `base`: a full Frobenius orbit of d
// distinct points of P^2(F_{Q^d}), represented by its code-order minimum.
struct ClosedPoint {
  const FieldCtx* base = nullptr;
  u32 degree = 0;
  ProjPoint rep;                  // order-minimal orbit member
  std::vector<ProjPoint> orbit;   // rep, frob(rep), frob^2(rep), ...

  bool operator==(const ClosedPoint& o) const {
    return base == o.base && rep == o.rep;
  }
};

// The closed point containing P (coordinates of P may lie in any extension
// of base).
ClosedPoint closed_point_of(const ProjPoint& P, const FieldCtx& base);

// All closed points of P^2 over `base` of degree exactly d, ordered by rep.
std::vector<ClosedPoint> closed_points(const FieldCtx& base, u32 d);

// An element of PGL3(F_q): invertible 3x3 matrix, row-major, scaled so the
// first nonzero entry equals 1.
struct Pgl3Map {
  const FieldCtx* F = nullptr;
  std::array<elem, 9> m{};

  bool operator==(const Pgl3Map& o) const { return F == o.F && m == o.m; }
  bool operator<(const Pgl3Map& o) const { return m < o.m; }
};

// Normalizes the projective scale and verifies invertibility.
Pgl3Map make_pgl3(const FieldCtx& F, const std::array<elem, 9>& entries);

elem det3(const FieldCtx& F, const std::array<elem, 9>& m);
Pgl3Map pgl3_compose(const Pgl3Map& a, const Pgl3Map& b);  // a after b
Pgl3Map pgl3_inverse(const Pgl3Map& a);

// Image of P under m; P's field must be an extension of m's field.
ProjPoint pgl3_apply(const Pgl3Map& m, const ProjPoint& P);

// The full group, materialized; only for q <= 4 (168 / 5616 / 60480 maps).
const std::vector<Pgl3Map>& pgl3_all(const FieldCtx& F);

// Partition of closed points (all of one degree) into PGL3(F_q) orbits; each
// orbit is sorted with its canonical (minimal-rep) member first.
std::vector<std::vector<ClosedPoint>> pgl3_orbits(const FieldCtx& base,
                                                  const std::vector<ClosedPoint>& pts);

}  // namespace maxgon
