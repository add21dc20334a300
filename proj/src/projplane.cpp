// Points, closed points, and the PGL3 action on P^2 over small finite fields.

#include "maxgon/projplane.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "maxgon/util.hpp"

namespace maxgon {

namespace {

ProjPoint normalized(const FieldCtx& F, elem x, elem y, elem z) {
  check(x != 0 || y != 0 || z != 0, errc::bad_argument,
        "(0:0:0) is not a projective point");
  elem lead = x != 0 ? x : (y != 0 ? y : z);
  if (lead != F.one()) {
    elem s = F.inv(lead);
    x = F.mul(x, s);
    y = F.mul(y, s);
    z = F.mul(z, s);
  }
  return ProjPoint{&F, x, y, z};
}

}  // namespace

ProjPoint make_point(const FieldCtx& F, elem x, elem y, elem z) {
  check(x < F.size() && y < F.size() && z < F.size(), errc::bad_argument,
        "point coordinate out of range");
  return normalized(F, x, y, z);
}

std::vector<ProjPoint> enumerate_points(const FieldCtx& F) {
  std::vector<ProjPoint> pts;
  pts.reserve(static_cast<size_t>(F.size()) * F.size() + F.size() + 1);
  for (elem a = 0; a < F.size(); ++a)
    for (elem b = 0; b < F.size(); ++b)
      pts.push_back(normalized(F, a, b, F.one()));
  for (elem a = 0; a < F.size(); ++a) pts.push_back(normalized(F, a, F.one(), 0));
  pts.push_back(ProjPoint{&F, F.one(), 0, 0});
  return pts;
}

std::string point_to_string(const ProjPoint& P) {
  const FieldCtx& F = *P.F;
  return F.to_string(P.x) + ":" + F.to_string(P.y) + ":" + F.to_string(P.z);
}

ProjPoint parse_point(const FieldCtx& F, const std::string& text) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t colon = text.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, colon - start));
    start = colon + 1;
  }
  check(parts.size() == 3, errc::parse_error,
        "point literal must have three ':'-separated coordinates: " + text);
  return normalized(F, F.parse(parts[0]), F.parse(parts[1]), F.parse(parts[2]));
}

ProjPoint frobenius_point(const ProjPoint& P, const FieldCtx& base) {
  const FieldCtx& F = *P.F;
  // q-th power fixes the normalizing 1, so the image is still normalized.
  return ProjPoint{&F, F.frobenius_over(P.x, base), F.frobenius_over(P.y, base),
                   F.frobenius_over(P.z, base)};
}

u32 point_degree(const ProjPoint& P, const FieldCtx& base) {
  u32 d = 1;
  ProjPoint Q = frobenius_point(P, base);
  while (!(Q == P)) {
    Q = frobenius_point(Q, base);
    ++d;
    check(d <= 64, errc::bad_argument, "runaway Frobenius orbit");
  }
  return d;
}

ClosedPoint closed_point_of(const ProjPoint& P, const FieldCtx& base) {
  ClosedPoint cp;
  cp.base = &base;
  cp.orbit.push_back(P);
  ProjPoint Q = frobenius_point(P, base);
  while (!(Q == P)) {
    cp.orbit.push_back(Q);
    Q = frobenius_point(Q, base);
    check(cp.orbit.size() <= 64, errc::bad_argument, "runaway Frobenius orbit");
  }
  cp.degree = static_cast<u32>(cp.orbit.size());
  size_t best = 0;
  for (size_t i = 1; i < cp.orbit.size(); ++i)
    if (cp.orbit[i] < cp.orbit[best]) best = i;
  std::rotate(cp.orbit.begin(), cp.orbit.begin() + best, cp.orbit.end());
  cp.rep = cp.orbit.front();
  return cp;
}

std::vector<ClosedPoint> closed_points(const FieldCtx& base, u32 d) {
  check(d >= 1, errc::bad_argument, "closed point degree must be >= 1");
  const FieldCtx& E = d == 1 ? base : ext_field(base, d);
  std::vector<ClosedPoint> out;
  std::vector<u64> tally(d + 1, 0);
  for (const ProjPoint& P : enumerate_points(E)) {
    // Walk the orbit once, tracking its size and whether P is its minimum.
    bool is_min = true;
    u32 deg = 1;
    ProjPoint Q = frobenius_point(P, base);
    while (!(Q == P)) {
      if (Q < P) is_min = false;
      Q = frobenius_point(Q, base);
      ++deg;
    }
    check(deg <= d && d % deg == 0, errc::bad_argument,
          "Frobenius orbit size does not divide the extension degree");
    ++tally[deg];
    if (deg == d && is_min) out.push_back(closed_point_of(P, base));
  }
  // Every point has exact degree dividing d, orbits have full size, and the
  // degree tallies add up to #P^2(F_{Q^d}).
  u64 total = 0;
  for (u32 e = 1; e <= d; ++e) {
    check(d % e != 0 ? tally[e] == 0 : tally[e] % e == 0, errc::bad_argument,
          "inconsistent Frobenius orbit tally");
    total += tally[e];
  }
  u64 Qd = E.size();
  check(total == Qd * Qd + Qd + 1, errc::bad_argument,
        "closed point tally does not cover the plane");
  check(tally[d] == static_cast<u64>(out.size()) * d, errc::bad_argument,
        "closed point count mismatch");
  std::sort(out.begin(), out.end(),
            [](const ClosedPoint& a, const ClosedPoint& b) { return a.rep < b.rep; });
  return out;
}

elem det3(const FieldCtx& F, const std::array<elem, 9>& m) {
  auto mul = [&](elem a, elem b) { return F.mul(a, b); };
  elem t0 = F.sub(mul(m[4], m[8]), mul(m[5], m[7]));
  elem t1 = F.sub(mul(m[3], m[8]), mul(m[5], m[6]));
  elem t2 = F.sub(mul(m[3], m[7]), mul(m[4], m[6]));
  return F.add(F.sub(mul(m[0], t0), mul(m[1], t1)), mul(m[2], t2));
}

Pgl3Map make_pgl3(const FieldCtx& F, const std::array<elem, 9>& entries) {
  std::array<elem, 9> m = entries;
  for (elem e : m)
    check(e < F.size(), errc::bad_argument, "matrix entry out of range");
  size_t lead = 0;
  while (lead < 9 && m[lead] == 0) ++lead;
  check(lead < 9, errc::bad_argument, "zero matrix is not invertible");
  if (m[lead] != F.one()) {
    elem s = F.inv(m[lead]);
    for (elem& e : m) e = F.mul(e, s);
  }
  check(det3(F, m) != 0, errc::bad_argument, "matrix is not invertible");
  return Pgl3Map{&F, m};
}

Pgl3Map pgl3_compose(const Pgl3Map& a, const Pgl3Map& b) {
  check(a.F->same(*b.F), errc::mixed_fields, "composing maps over different fields");
  const FieldCtx& F = *a.F;
  std::array<elem, 9> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      elem s = 0;
      for (int k = 0; k < 3; ++k)
        s = F.add(s, F.mul(a.m[3 * i + k], b.m[3 * k + j]));
      m[3 * i + j] = s;
    }
  return make_pgl3(F, m);
}

Pgl3Map pgl3_inverse(const Pgl3Map& a) {
  const FieldCtx& F = *a.F;
  const std::array<elem, 9>& m = a.m;
  auto cof = [&](int r0, int r1, int c0, int c1) {
    return F.sub(F.mul(m[3 * r0 + c0], m[3 * r1 + c1]),
                 F.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
  };
  // Adjugate; the determinant scale is absorbed by projective normalization.
  std::array<elem, 9> adj = {
      cof(1, 2, 1, 2), F.neg(cof(0, 2, 1, 2)), cof(0, 1, 1, 2),
      F.neg(cof(1, 2, 0, 2)), cof(0, 2, 0, 2), F.neg(cof(0, 1, 0, 2)),
      cof(1, 2, 0, 1), F.neg(cof(0, 2, 0, 1)), cof(0, 1, 0, 1)};
  return make_pgl3(F, adj);
}

ProjPoint pgl3_apply(const Pgl3Map& m, const ProjPoint& P) {
  const FieldCtx& E = *P.F;
  std::array<elem, 9> a;
  for (int i = 0; i < 9; ++i) a[i] = E.embed_from(*m.F, m.m[i]);
  std::array<elem, 3> v = {P.x, P.y, P.z}, w{};
  for (int i = 0; i < 3; ++i) {
    elem s = 0;
    for (int j = 0; j < 3; ++j) s = E.add(s, E.mul(a[3 * i + j], v[j]));
    w[i] = s;
  }
  return normalized(E, w[0], w[1], w[2]);
}

const std::vector<Pgl3Map>& pgl3_all(const FieldCtx& F) {
  static std::mutex mu;
  static std::vector<std::pair<const FieldCtx*, std::unique_ptr<std::vector<Pgl3Map>>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& entry : cache)
    if (entry.first == &F) return *entry.second;
  check(F.size() <= 4, errc::group_too_large,
        "PGL3 is only materialized for q <= 4");
  auto group = std::make_unique<std::vector<Pgl3Map>>();
  // One matrix per projective class: entries before the first nonzero one are
  // zero and that entry is 1 (row-major scan).
  std::array<elem, 9> m{};
  for (int lead = 8; lead >= 0; --lead) {
    m.fill(0);
    m[lead] = F.one();
    int nfree = 8 - lead;
    u64 span = 1;
    for (int i = 0; i < nfree; ++i) span *= F.size();
    for (u64 code = 0; code < span; ++code) {
      u64 rest = code;
      for (int i = lead + 1; i < 9; ++i) {
        m[i] = static_cast<elem>(rest % F.size());
        rest /= F.size();
      }
      if (det3(F, m) != 0) group->push_back(Pgl3Map{&F, m});
    }
  }
  std::sort(group->begin(), group->end());
  cache.emplace_back(&F, std::move(group));
  return *cache.back().second;
}

std::vector<std::vector<ClosedPoint>> pgl3_orbits(const FieldCtx& base,
                                                  const std::vector<ClosedPoint>& pts) {
  const std::vector<Pgl3Map>& group = pgl3_all(base);
  std::map<ProjPoint, size_t> index;
  for (size_t i = 0; i < pts.size(); ++i) {
    check(pts[i].base == &base, errc::mixed_fields,
          "closed point over a different base field");
    index[pts[i].rep] = i;
  }
  std::vector<bool> used(pts.size(), false);
  std::vector<std::vector<ClosedPoint>> orbits;
  for (size_t seed = 0; seed < pts.size(); ++seed) {
    if (used[seed]) continue;
    std::vector<size_t> members;
    for (const Pgl3Map& g : group) {
      ProjPoint img = pgl3_apply(g, pts[seed].rep);
      ClosedPoint cp = closed_point_of(img, base);
      auto it = index.find(cp.rep);
      check(it != index.end(), errc::bad_argument,
            "PGL3 image leaves the given closed point set");
      if (!used[it->second]) {
        used[it->second] = true;
        members.push_back(it->second);
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<ClosedPoint> orbit;
    orbit.reserve(members.size());
    for (size_t i : members) orbit.push_back(pts[i]);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace maxgon
