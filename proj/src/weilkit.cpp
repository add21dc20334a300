// Real Weil polynomial machinery: exact count derivation and reconstruction,
// real-rootedness decisions, the feasibility gate, and the coefficient sieve.

#include "maxgon/weilkit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace maxgon {

namespace {

i64 to_i64(const bigint& v) {
  check(v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max(),
        errc::bad_argument, "count does not fit in 64 bits");
  return v.convert_to<i64>();
}

bigint bpow(const bigint& b, u32 e) {
  bigint r = 1, x = b;
  for (; e; e >>= 1) {
    if (e & 1) r *= x;
    x *= x;
  }
  return r;
}

// Pascal triangle up to row n.
std::vector<std::vector<bigint>> binomials(u32 n) {
  std::vector<std::vector<bigint>> C(n + 1);
  for (u32 i = 0; i <= n; ++i) {
    C[i].assign(i + 1, 1);
    for (u32 j = 1; j < i; ++j) C[i][j] = C[i - 1][j - 1] + C[i - 1][j];
  }
  return C;
}

// B_0 = 2, B_1 = u, B_r = u*B_{r-1} - q*B_{r-2}, as coefficient vectors in u;
// B_r(x) = alpha^r + beta^r when alpha + beta = x and alpha*beta = q.
std::vector<std::vector<bigint>> b_polys(u32 r_max, u32 q) {
  std::vector<std::vector<bigint>> B(r_max + 1);
  B[0] = {2};
  if (r_max >= 1) B[1] = {0, 1};
  for (u32 r = 2; r <= r_max; ++r) {
    std::vector<bigint> b(r + 1);
    for (size_t k = 0; k < B[r - 1].size(); ++k) b[k + 1] += B[r - 1][k];
    for (size_t k = 0; k < B[r - 2].size(); ++k) b[k] -= bigint(q) * B[r - 2][k];
    B[r] = std::move(b);
  }
  return B;
}

// Power sums of the roots of a monic integer polynomial, via Newton's
// identities (P[0] = deg).
std::vector<bigint> power_sums(const ZPoly& f, u32 m_max) {
  check(f.is_monic(), errc::bad_argument, "power sums need a monic polynomial");
  u32 n = static_cast<u32>(f.deg());
  std::vector<bigint> P(m_max + 1);
  P[0] = n;
  for (u32 m = 1; m <= m_max; ++m) {
    bigint acc = 0;
    for (u32 i = 1; i < m && i <= n; ++i) acc += f[n - i] * P[m - i];
    if (m <= n) acc += bigint(m) * f[n - m];
    P[m] = -acc;
  }
  return P;
}

// ceil(a / b) for b > 0
bigint cdiv(const bigint& a, const bigint& b) {
  bigint t = a / b;
  if (a % b > 0) ++t;
  return t;
}

}  // namespace

RealWeilPoly make_real_weil(u32 g, u32 q, ZPoly h) {
  u32 p = 0, k = 0;
  check(g >= 1, errc::bad_argument, "genus must be >= 1");
  check(split_prime_power(q, p, k), errc::bad_argument,
        "base field order must be a prime power >= 2");
  check(h.deg() == static_cast<int>(g) && h.is_monic(), errc::bad_argument,
        "real Weil polynomial must be monic of degree g");
  return RealWeilPoly{g, q, std::move(h)};
}

CountsVector counts_from_real_weil(const RealWeilPoly& hw, u32 r_max) {
  check(r_max >= 1, errc::bad_argument, "need at least one count");
  std::vector<bigint> P = power_sums(hw.h, r_max);
  std::vector<std::vector<bigint>> B = b_polys(r_max, hw.q);
  CountsVector N(r_max);
  bigint qr = 1;
  for (u32 r = 1; r <= r_max; ++r) {
    qr *= hw.q;
    bigint tr = 0;
    for (size_t k = 0; k < B[r].size(); ++k) tr += B[r][k] * P[k];
    N[r - 1] = to_i64(qr + 1 - tr);
  }
  return N;
}

ZPoly weil_from_real(const RealWeilPoly& hw) {
  // T^g h(T + q/T) = sum_m h_m T^(g-m) (T^2 + q)^m over h = sum_m h_m u^m
  ZPoly base({static_cast<i64>(hw.q), 0, 1});
  ZPoly pw{1};
  ZPoly f;
  for (u32 m = 0; m <= hw.g; ++m) {
    if (hw.h[m] != 0) f = f + ZPoly::monomial(hw.g - m, hw.h[m]) * pw;
    pw = pw * base;
  }
  return f;
}

RealWeilPoly real_weil_from_counts(const CountsVector& N, u32 g, u32 q) {
  check(g >= 1, errc::bad_argument, "genus must be >= 1");
  check(N.size() >= g, errc::bad_argument, "need counts N_1..N_g");
  // s_r = q^r + 1 - N_r are the power sums of the Weil polynomial's roots
  std::vector<bigint> s(g + 1);
  bigint qr = 1;
  for (u32 r = 1; r <= g; ++r) {
    qr *= q;
    s[r] = qr + 1 - N[r - 1];
  }
  // Newton's identities give f's coefficients c_1..c_g ...
  std::vector<bigint> c(2 * g + 1);
  c[0] = 1;
  for (u32 m = 1; m <= g; ++m) {
    bigint acc = s[m];
    for (u32 i = 1; i < m; ++i) acc += c[i] * s[m - i];
    check(acc % m == 0, errc::non_integral_reconstruction,
          "counts are incompatible with an integer Weil polynomial");
    c[m] = -acc / m;
  }
  // ... and the functional equation the rest.
  for (u32 i = 0; i < g; ++i) c[2 * g - i] = bpow(q, g - i) * c[i];
  // Reduce f / T^g to a polynomial in u = T + q/T: since
  // T^g B_m(T + q/T) = T^(2g-m) + q^(g-m) T^m, the combination
  // sum_{i<g} c_i B_{g-i} + c_g reproduces f.
  std::vector<std::vector<bigint>> B = b_polys(g, q);
  std::vector<bigint> hv(g + 1);
  for (u32 i = 0; i < g; ++i)
    for (size_t k = 0; k < B[g - i].size(); ++k) hv[k] += c[i] * B[g - i][k];
  hv[0] += c[g];
  RealWeilPoly out = make_real_weil(g, q, ZPoly(std::move(hv)));

  std::vector<bigint> fv(2 * g + 1);
  for (u32 m = 0; m <= 2 * g; ++m) fv[2 * g - m] = c[m];
  check(weil_from_real(out) == ZPoly(std::move(fv)), errc::bad_argument,
        "internal: Weil polynomial expansion mismatch");
  return out;
}

CountsVector closed_counts(const CountsVector& N) {
  CountsVector a(N.size());
  for (u32 d = 1; d <= N.size(); ++d) {
    i64 acc = 0;
    for (u32 r : divisors_of(d)) acc += moebius_mu(d / r) * N[r - 1];
    check(acc % d == 0, errc::non_integral_reconstruction,
          "counts do not come from an integral closed-point profile");
    a[d - 1] = acc / d;
  }
  return a;
}

bool is_real_rooted_in_interval(const RealWeilPoly& hw) {
  ZPoly p = hw.h;
  u32 q = hw.q;
  u32 s = static_cast<u32>(std::lround(std::sqrt(static_cast<double>(q))));
  if (s * s == q) {
    for (i64 e : {2 * static_cast<i64>(s), -2 * static_cast<i64>(s)}) {
      ZPoly lin({-e, 1});
      while (p.deg() > 0 && p.eval(e) == 0) p = div_exact(p, lin);
    }
  } else {
    // a root at either endpoint +-2*sqrt(q) forces the factor T^2 - 4q
    ZPoly quad({-4 * static_cast<i64>(q), 0, 1});
    while (p.deg() >= 2 && divides(quad, p)) p = div_exact(p, quad);
  }
  if (p.deg() <= 0) return true;
  ZPoly sq = squarefree_part(p);
  SurdPoint lo, hi;
  if (s * s == q) {
    lo = SurdPoint{bigrat(-2 * static_cast<i64>(s)), 0, q};
    hi = SurdPoint{bigrat(2 * static_cast<i64>(s)), 0, q};
  } else {
    lo = SurdPoint{0, -2, q};
    hi = SurdPoint{0, 2, q};
  }
  // all deg(sq) distinct roots real and strictly inside the interval
  return count_distinct_roots_in(sq, lo, hi) == sq.deg();
}

ConstraintSet vanishing_constraints(u32 g) {
  check(g >= 3, errc::bad_argument, "vanishing constraints need genus >= 3");
  u32 m = g - 2;
  u32 full = 1u << m;  // bit d-1 represents degree d
  // rep[mask]: is m a sum of the masked degrees with each used at least once?
  std::vector<bool> rep(full, false);
  for (u32 mask = 1; mask < full; ++mask) {
    u32 base = 0;
    for (u32 d = 1; d <= m; ++d)
      if (mask & (1u << (d - 1))) base += d;
    if (base > m) continue;
    std::vector<bool> dp(m - base + 1, false);
    dp[0] = true;
    for (u32 d = 1; d <= m; ++d)
      if (mask & (1u << (d - 1)))
        for (u32 v = d; v <= m - base; ++v)
          if (dp[v - d]) dp[v] = true;
    rep[mask] = dp[m - base];
  }
  std::vector<DegreeSet> sets;
  for (u32 mask = 1; mask < full; ++mask) {
    if (!rep[mask]) continue;
    bool minimal = true;
    for (u32 sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
      if (rep[sub]) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    DegreeSet s;
    for (u32 d = 1; d <= m; ++d)
      if (mask & (1u << (d - 1))) s.push_back(d);
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end(), [](const DegreeSet& a, const DegreeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return ConstraintSet{g, std::move(sets)};
}

std::string constraint_to_string(const DegreeSet& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += " * ";
    out += "a_" + std::to_string(s[i]);
  }
  return out + " = 0";
}

std::vector<std::pair<u32, u32>> weil_bound_pairs() {
  std::vector<std::pair<u32, u32>> out;
  for (u32 g = 3; g <= 10; ++g)
    for (u32 q = 2; q <= 40; ++q) {
      u32 p = 0, k = 0;
      if (!split_prime_power(q, p, k)) continue;
      if (bpow(q, g - 2) < 4 * g * g) out.emplace_back(g, q);
    }
  return out;
}

IsogenyClassRecord make_record(const RealWeilPoly& h) {
  IsogenyClassRecord rec;
  rec.f = weil_from_real(h);
  rec.N = counts_from_real_weil(h, 2 * h.g);
  rec.a = closed_counts(rec.N);
  rec.h = h;
  return rec;
}

bool record_admissible(const IsogenyClassRecord& rec, const ConstraintSet& cs) {
  for (i64 ad : rec.a)
    if (ad < 0) return false;
  if (!cs.forbidden.empty())
    check(cs.g == rec.h.g, errc::bad_argument,
          "constraint set for a different genus");
  for (const DegreeSet& s : cs.forbidden) {
    bool vanishes = false;
    for (u32 d : s) {
      check(d >= 1 && d <= rec.a.size(), errc::bad_argument,
            "constraint degree out of range");
      if (rec.a[d - 1] == 0) {
        vanishes = true;
        break;
      }
    }
    if (!vanishes) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sieve
// ---------------------------------------------------------------------------

namespace {

struct SieveCtx {
  u32 g = 0, q = 0;
  double L = 0, R = 0;  // -2 sqrt(q), +2 sqrt(q)
  std::vector<std::vector<bigint>> C;  // binomials up to g
  std::vector<bigint> qpow;            // q^r, r = 0..g
  std::vector<bigint> clamp;           // floor(C(g,k) (2 sqrt q)^k)
  std::vector<bool> pinned;            // singleton constraint {d}
  std::vector<std::vector<DegreeSet>> products_by_max;  // larger constraints
  const ConstraintSet* cs = nullptr;
};

// Mutable per-branch state; slot d holds the value chosen at depth d.
struct SieveState {
  std::vector<bigint> hc;  // h's coefficient of T^(g-d)
  std::vector<bigint> fc;  // f's coefficient c_d
  std::vector<bigint> s;   // power sums of f's roots
  std::vector<bigint> N;   // N_d
  std::vector<bigint> a;   // a_d
};

double eval_asc(const std::vector<double>& c, double x) {
  double v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

double tol_at(const std::vector<double>& c, double x) {
  double ax = std::abs(x), scale = 0, xp = 1;
  for (double ci : c) {
    scale += std::abs(ci) * xp;
    xp *= ax;
  }
  return 1e-9 * (scale + 1);
}

// H_d as ascending double coefficients: coefficient of T^(d-j) is
// hc[j] * C(g-j, d-j) (the normalized (g-d)-th derivative of h).
std::vector<double> h_poly(const SieveCtx& ctx, const SieveState& st, u32 d) {
  std::vector<double> c(d + 1, 0.0);
  for (u32 j = 0; j <= d; ++j) {
    bigint v = (j == 0 ? bigint(1) : st.hc[j]) * ctx.C[ctx.g - j][d - j];
    c[d - j] = v.convert_to<double>();
  }
  return c;
}

// Isolates the d roots of H_d inside the brackets formed by the parent roots
// and the interval endpoints (H_d is strictly monotone between consecutive
// roots of H_{d-1}, its rescaled derivative). Returns false when some
// bracket provably contains no root, i.e. the branch is dead.
bool isolate_roots(const std::vector<double>& H, double L, double R,
                   const std::vector<double>& parents, std::vector<double>& out) {
  std::vector<double> xs;
  xs.reserve(parents.size() + 2);
  xs.push_back(L);
  for (double r : parents) xs.push_back(std::min(std::max(r, L), R));
  xs.push_back(R);
  out.clear();
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    double a = xs[i], b = xs[i + 1];
    double fa = eval_asc(H, a), fb = eval_asc(H, b);
    int sa = std::abs(fa) <= tol_at(H, a) ? 0 : (fa > 0 ? 1 : -1);
    int sb = std::abs(fb) <= tol_at(H, b) ? 0 : (fb > 0 ? 1 : -1);
    if (sa == 0) {
      out.push_back(a);
      continue;
    }
    if (sb == 0) {
      out.push_back(b);
      continue;
    }
    if (sa == sb) return false;
    for (int it = 0; it < 64; ++it) {
      double mid = 0.5 * (a + b);
      double fm = eval_asc(H, mid);
      if ((fm > 0 ? 1 : -1) == sa)
        a = mid;
      else
        b = mid;
    }
    out.push_back(0.5 * (a + b));
  }
  return true;
}

struct Candidate {
  bigint lo, hi;  // inclusive integer range for h_{d}
  bool dead = false;
};

// Integer range for the next coefficient h_d, combining the float sign
// conditions (with a one-integer margin), the exact symmetric-function
// clamp, the exact a_d >= 0 lower bound, and an exact pin when a_d = 0 is
// required. st slots < d must be filled.
Candidate next_range(const SieveCtx& ctx, const SieveState& st, u32 d,
                     const std::vector<double>& parents) {
  check(parents.size() == d - 1, errc::bad_argument,
        "internal: wrong parent root count");
  Candidate cand;
  // float side: H_d(x) = G(x) + v must satisfy (-1)^(d-t) H_d(x_t) >= 0 at
  // x_0 = L, x_1..x_(d-1) = parent roots, x_d = R
  std::vector<double> G(d + 1, 0.0);
  for (u32 j = 0; j < d; ++j) {
    bigint v = (j == 0 ? bigint(1) : st.hc[j]) * ctx.C[ctx.g - j][d - j];
    G[d - j] = v.convert_to<double>();
  }
  std::vector<double> xs;
  xs.push_back(ctx.L);
  for (double r : parents) xs.push_back(std::min(std::max(r, ctx.L), ctx.R));
  xs.push_back(ctx.R);
  double flo = -std::numeric_limits<double>::infinity(), fhi = -flo;
  for (u32 t = 0; t < xs.size(); ++t) {
    double gv = eval_asc(G, xs[t]);
    if ((d - t) % 2 == 0)
      flo = std::max(flo, -gv);
    else
      fhi = std::min(fhi, -gv);
  }
  if (flo > fhi + 2) {
    cand.dead = true;
    return cand;
  }
  cand.lo = bigint(static_cast<i64>(std::ceil(flo))) - 1;
  cand.hi = bigint(static_cast<i64>(std::floor(fhi))) + 1;
  // exact clamp |h_d| <= C(g,d) (2 sqrt q)^d
  if (cand.lo < -ctx.clamp[d]) cand.lo = -ctx.clamp[d];
  if (cand.hi > ctx.clamp[d]) cand.hi = ctx.clamp[d];
  // exact lower bound from a_d >= 0, i.e. N_d >= sum_{e|d, e<d} e a_e:
  // N_d = q^d + 1 + d c_d + sum_{i<d} c_i s_{d-i} and c_d = h_d + corr
  bigint corr = 0;
  for (u32 j = 1; 2 * j <= d; ++j)
    corr += ctx.C[ctx.g - d + 2 * j][j] * bpow(ctx.q, j) *
            (d == 2 * j ? bigint(1) : st.hc[d - 2 * j]);
  bigint mixed = 0;
  for (u32 i = 1; i < d; ++i) mixed += st.fc[i] * st.s[d - i];
  bigint t0 = 0;
  for (u32 e : divisors_of(d))
    if (e < d) t0 += bigint(e) * st.a[e];
  bigint rhs = t0 - (ctx.qpow[d] + 1) - mixed;  // d*c_d >= rhs
  cand.lo = std::max(cand.lo, cdiv(rhs, d) - corr);
  // exact pin when the constraint a_d = 0 is active
  if (ctx.pinned[d]) {
    bigint sd = ctx.qpow[d] + 1 - t0;
    bigint acc = sd + mixed;
    if (acc % d != 0) {
      cand.dead = true;
      return cand;
    }
    bigint v = -acc / d - corr;
    cand.lo = std::max(cand.lo, v);
    cand.hi = std::min(cand.hi, v);
  }
  if (cand.lo > cand.hi) cand.dead = true;
  return cand;
}

// Fills st slot d for h_d = v; returns false if the branch dies (negative
// a_d or a fully determined constraint product that cannot vanish).
bool apply_choice(const SieveCtx& ctx, SieveState& st, u32 d, const bigint& v) {
  st.hc[d] = v;
  bigint corr = 0;
  for (u32 j = 1; 2 * j <= d; ++j)
    corr += ctx.C[ctx.g - d + 2 * j][j] * bpow(ctx.q, j) *
            (d == 2 * j ? bigint(1) : st.hc[d - 2 * j]);
  st.fc[d] = v + corr;
  bigint acc = bigint(d) * st.fc[d];
  for (u32 i = 1; i < d; ++i) acc += st.fc[i] * st.s[d - i];
  st.s[d] = -acc;
  st.N[d] = ctx.qpow[d] + 1 - st.s[d];
  bigint am = 0;
  for (u32 r : divisors_of(d)) am += moebius_mu(d / r) * st.N[r];
  check(am % d == 0, errc::non_integral_reconstruction,
        "internal: prefix closed counts not integral");
  st.a[d] = am / d;
  if (st.a[d] < 0) return false;
  if (ctx.pinned[d] && st.a[d] != 0) return false;
  for (const DegreeSet& s : ctx.products_by_max[d]) {
    bool vanishes = false;
    for (u32 e : s)
      if (st.a[e] == 0) {
        vanishes = true;
        break;
      }
    if (!vanishes) return false;
  }
  return true;
}

void sieve_leaf(const SieveCtx& ctx, const SieveState& st,
                std::vector<IsogenyClassRecord>& out) {
  std::vector<bigint> hv(ctx.g + 1);
  hv[ctx.g] = 1;
  for (u32 d = 1; d <= ctx.g; ++d) hv[ctx.g - d] = st.hc[d];
  RealWeilPoly h = make_real_weil(ctx.g, ctx.q, ZPoly(std::move(hv)));
  if (!is_real_rooted_in_interval(h)) return;
  IsogenyClassRecord rec = make_record(h);
  if (!record_admissible(rec, *ctx.cs)) return;
  out.push_back(std::move(rec));
}

void sieve_dfs(const SieveCtx& ctx, SieveState& st, u32 k,
               const std::vector<double>& roots, std::vector<IsogenyClassRecord>& out) {
  u32 d = k + 1;
  Candidate cand = next_range(ctx, st, d, roots);
  if (cand.dead) return;
  for (bigint v = cand.lo; v <= cand.hi; ++v) {
    if (!apply_choice(ctx, st, d, v)) continue;
    if (d == ctx.g) {
      sieve_leaf(ctx, st, out);
      continue;
    }
    std::vector<double> next_roots;
    if (!isolate_roots(h_poly(ctx, st, d), ctx.L, ctx.R, roots, next_roots)) continue;
    sieve_dfs(ctx, st, d, next_roots, out);
  }
}

}  // namespace

std::vector<IsogenyClassRecord> sieve(u32 g, u32 q, const ConstraintSet& constraints,
                                      u32 workers) {
  u32 p = 0, kk = 0;
  check(g >= 1 && g <= 9, errc::bad_argument, "sieve supports genus 1..9");
  check(split_prime_power(q, p, kk), errc::bad_argument,
        "base field order must be a prime power");
  if (!constraints.forbidden.empty())
    check(constraints.g == g, errc::bad_argument,
          "constraint set for a different genus");

  SieveCtx ctx;
  ctx.g = g;
  ctx.q = q;
  ctx.R = 2.0 * std::sqrt(static_cast<double>(q));
  ctx.L = -ctx.R;
  ctx.C = binomials(g);
  ctx.qpow.resize(g + 1);
  ctx.qpow[0] = 1;
  for (u32 r = 1; r <= g; ++r) ctx.qpow[r] = ctx.qpow[r - 1] * q;
  ctx.clamp.resize(g + 1);
  for (u32 k = 0; k <= g; ++k)
    ctx.clamp[k] = sqrt(ctx.C[g][k] * ctx.C[g][k] * bpow(4 * q, k));
  ctx.pinned.assign(g + 1, false);
  ctx.products_by_max.assign(g + 1, {});
  ctx.cs = &constraints;
  for (const DegreeSet& s : constraints.forbidden) {
    check(!s.empty(), errc::bad_argument, "empty constraint");
    u32 mx = *std::max_element(s.begin(), s.end());
    if (s.size() == 1 && mx <= g)
      ctx.pinned[mx] = true;
    else if (mx <= g)
      ctx.products_by_max[mx].push_back(s);
    // constraints reaching beyond degree g are checked on full records only
  }

  SieveState st;
  st.hc.assign(g + 1, 0);
  st.fc.assign(g + 1, 0);
  st.s.assign(g + 1, 0);
  st.N.assign(g + 1, 0);
  st.a.assign(g + 1, 0);

  std::vector<IsogenyClassRecord> out;
  Candidate top = next_range(ctx, st, 1, {});
  if (!top.dead) {
    std::vector<bigint> tops;
    for (bigint v = top.lo; v <= top.hi; ++v) tops.push_back(v);
    u32 nw = std::max<u32>(1, std::min<u32>(workers, tops.size()));
    if (nw <= 1) {
      sieve_dfs(ctx, st, 0, {}, out);
    } else {
      // one result slot per top-level branch keeps the merge deterministic
      std::vector<std::vector<IsogenyClassRecord>> slots(tops.size());
      std::atomic<size_t> next{0};
      auto work = [&] {
        SieveState local = st;
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= tops.size()) break;
          if (!apply_choice(ctx, local, 1, tops[i])) continue;
          if (g == 1) {
            sieve_leaf(ctx, local, slots[i]);
            continue;
          }
          std::vector<double> roots;
          if (!isolate_roots(h_poly(ctx, local, 1), ctx.L, ctx.R, {}, roots)) continue;
          sieve_dfs(ctx, local, 1, roots, slots[i]);
        }
      };
      std::vector<std::thread> pool;
      for (u32 i = 0; i < nw; ++i) pool.emplace_back(work);
      for (auto& th : pool) th.join();
      for (auto& slot : slots)
        for (auto& rec : slot) out.push_back(std::move(rec));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IsogenyClassRecord& x, const IsogenyClassRecord& y) {
              return x.h.h < y.h.h;
            });
  return out;
}

// ---------------------------------------------------------------------------
// Display factorization
// ---------------------------------------------------------------------------

namespace {

// All real roots, found by bracketing with the roots of the derivative
// (adequate for the real-rooted polynomials this is used on).
std::vector<double> float_roots(const ZPoly& p) {
  int n = p.deg();
  if (n <= 0) return {};
  std::vector<double> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = p[i].convert_to<double>();
  if (n == 1) return {-c[0] / c[1]};
  double M = 0;
  for (int i = 0; i < n; ++i) M = std::max(M, std::abs(c[i] / c[n]));
  M += 1;
  std::vector<double> xs{-M};
  for (double r : float_roots(p.derivative()))
    if (r > -M && r < M) xs.push_back(r);
  xs.push_back(M);
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    double a = xs[i], b = xs[i + 1];
    double fa = eval_asc(c, a), fb = eval_asc(c, b);
    int sa = fa == 0 ? 0 : (fa > 0 ? 1 : -1);
    int sb = fb == 0 ? 0 : (fb > 0 ? 1 : -1);
    if (sa == 0) {
      out.push_back(a);
      continue;
    }
    if (sb == 0 || sa == sb) continue;
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (a + b);
      if ((eval_asc(c, mid) > 0 ? 1 : -1) == sa)
        a = mid;
      else
        b = mid;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

// Smallest monic integer factor of p with degree <= max_deg (excluding p
// itself), or the zero polynomial when none is found.
ZPoly smallest_factor(const ZPoly& p, int max_deg) {
  std::vector<ZPoly> found;
  // linear factors from integer roots (divisors of the constant term)
  if (p[0] == 0) {
    found.push_back(ZPoly::monomial(1));
  } else {
    bigint a0 = p[0] < 0 ? -p[0] : p[0];
    for (bigint dv = 1; dv * dv <= a0; ++dv) {
      if (a0 % dv != 0) continue;
      const bigint cands[4] = {dv, bigint(-dv), bigint(a0 / dv),
                               bigint(-(a0 / dv))};
      for (const bigint& root : cands)
        if (p.eval(root) == 0) found.push_back(ZPoly(std::vector<bigint>{-root, 1}));
    }
  }
  if (found.empty()) {
    // higher-degree factors: integer combinations of float roots
    std::vector<double> roots = float_roots(squarefree_part(p));
    int nr = static_cast<int>(roots.size());
    for (int m = 2; m <= max_deg && m < p.deg() && found.empty(); ++m) {
      std::vector<int> idx(m);
      for (int i = 0; i < m; ++i) idx[i] = i;
      while (nr >= m) {
        // expand prod (T - roots[idx[i]]) and round to integers
        std::vector<double> fc(m + 1, 0.0);
        fc[0] = 1;
        for (int i = 0; i < m; ++i) {
          for (int j = i + 1; j >= 1; --j) fc[j] = fc[j - 1] - roots[idx[i]] * fc[j];
          fc[0] *= -roots[idx[i]];
        }
        std::vector<bigint> ic(m + 1);
        for (int i = 0; i <= m; ++i)
          ic[i] = bigint(static_cast<i64>(std::llround(fc[i])));
        ZPoly cand(std::move(ic));
        if (cand.deg() == m && cand.is_monic() && divides(cand, p))
          found.push_back(cand);
        // next m-combination of {0..nr-1}
        int i = m - 1;
        while (i >= 0 && idx[i] == nr - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  if (found.empty()) return ZPoly();
  return *std::min_element(found.begin(), found.end());
}

}  // namespace

std::vector<std::pair<ZPoly, u32>> factor_for_display(const ZPoly& h) {
  check(!h.is_zero() && h.is_monic(), errc::bad_argument,
        "display factorization expects a monic polynomial");
  ZPoly p = h;
  std::vector<ZPoly> factors;
  while (p.deg() > 1) {
    ZPoly f = smallest_factor(p, 4);
    if (f.is_zero()) break;
    factors.push_back(f);
    p = div_exact(p, factors.back());
  }
  if (p.deg() >= 1) factors.push_back(p);
  std::vector<std::pair<ZPoly, u32>> out;
  for (ZPoly& f : factors) {
    if (!out.empty() && out.back().first == f)
      ++out.back().second;
    else
      out.emplace_back(std::move(f), 1);
  }
  return out;
}

std::string factored_string(const ZPoly& h) {
  std::vector<std::pair<ZPoly, u32>> fs = factor_for_display(h);
  if (fs.size() == 1 && fs[0].second == 1) return fs[0].first.to_string();
  std::string out;
  for (const auto& [f, e] : fs) {
    bool bare = f.deg() >= 1 && e == 1 && out.empty() && f == ZPoly::monomial(f.deg());
    if (bare)
      out += f.to_string();  // leading monomial factor, e.g. "T(...)"
    else
      out += "(" + f.to_string() + ")" + (e > 1 ? "^" + std::to_string(e) : "");
  }
  return out;
}

std::string record_line(const IsogenyClassRecord& rec) {
  auto join = [](const CountsVector& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(v[i]);
    }
    return s;
  };
  std::string s = factored_string(rec.h.h);
  s += " | coeffs [";
  for (int i = rec.h.h.deg(); i >= 0; --i) {
    s += rec.h.h[i].str();
    if (i) s += ", ";
  }
  s += "] | N [" + join(rec.N) + "] | a [" + join(rec.a) + "]";
  return s;
}

}  // namespace maxgon
