#include "maxgon/quartic_census.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

namespace maxgon {

namespace {

using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Field plumbing

struct PrimePower {
  u32 p = 0, k = 0;
};

PrimePower factor_prime_power(u32 q) {
  check(q >= 2, errc::bad_argument, "field size must be at least 2");
  u32 p = q;
  for (u32 d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  u32 k = 0;
  u64 m = 1;
  while (m < q) {
    m *= p;
    ++k;
  }
  check(m == q, errc::bad_argument, "field size must be a prime power");
  return {p, k};
}

// Quartic coefficient slots, in the fixed monomial order.
constexpr u32 kX4 = 0;                                 // x^4
constexpr u32 kXY[4] = {1, 3, 6, 10};                  // x^3y x^2y^2 xy^3 y^4
constexpr u32 kXZ[4] = {2, 5, 9, 14};                  // x^3z x^2z^2 xz^3 z^4
constexpr u32 kYZ[3] = {11, 12, 13};                   // y^3z y^2z^2 yz^3
constexpr u32 kIn[3] = {4, 7, 8};                      // x^2yz xy^2z xyz^2

// ---------------------------------------------------------------------------
// Packed coefficient vectors and open-addressing sets

u64 pack3(const std::vector<elem>& c) {
  u64 k = 0;
  for (elem v : c) k = (k << 3) | v;
  return k;
}

std::vector<elem> unpack3(u64 k, u32 n) {
  std::vector<elem> c(n);
  for (u32 i = n; i-- > 0;) {
    c[i] = static_cast<elem>(k & 7);
    k >>= 3;
  }
  return c;
}

u128 pack8(const std::vector<elem>& c) {
  u128 k = 0;
  for (elem v : c) k = (k << 8) | v;
  return k;
}

u64 mix64(u64 x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

u64 hash_key(u64 k) { return mix64(k); }
u64 hash_key(u128 k) {
  return mix64(static_cast<u64>(k) ^
               mix64(static_cast<u64>(k >> 64)));
}

// Open-addressing set with a never-occurring all-ones sentinel (coefficient
// codes stay far below the byte/3-bit capacity).
template <typename K>
class FlatSet {
 public:
  explicit FlatSet(u32 cap_log = 16) { reset(cap_log); }

  void reset(u32 cap_log) {
    cap_log_ = cap_log;
    slots_.assign(size_t{1} << cap_log_, kEmpty);
    count_ = 0;
  }

  bool contains(K k) const {
    size_t mask = slots_.size() - 1;
    for (size_t i = hash_key(k) & mask;; i = (i + 1) & mask) {
      if (slots_[i] == kEmpty) return false;
      if (slots_[i] == k) return true;
    }
  }

  // true when the key was newly inserted
  bool insert(K k) {
    if (count_ * 5 >= slots_.size() * 3) grow();
    size_t mask = slots_.size() - 1;
    for (size_t i = hash_key(k) & mask;; i = (i + 1) & mask) {
      if (slots_[i] == k) return false;
      if (slots_[i] == kEmpty) {
        slots_[i] = k;
        ++count_;
        return true;
      }
    }
  }

  size_t size() const { return count_; }

 private:
  static constexpr K kEmpty = static_cast<K>(-1);

  void grow() {
    std::vector<K> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    size_t mask = slots_.size() - 1;
    for (K k : old) {
      if (k == kEmpty) continue;
      size_t i = hash_key(k) & mask;
      while (slots_[i] != kEmpty) i = (i + 1) & mask;
      slots_[i] = k;
    }
    ++cap_log_;
  }

  std::vector<K> slots_;
  size_t count_ = 0;
  u32 cap_log_ = 0;
};

// ---------------------------------------------------------------------------
// Frame data: the pinned points, solving tables, and the fixed source frame

struct FrameData {
  PinnedFrame frame;
  std::vector<elem> emb;               // F_q code -> F_{q^2} code
  std::vector<int> down;               // F_{q^2} code -> F_q code, or -1
  std::array<elem, 5> s1p{};           // s1^0..s1^4 in F_{q^2}
  elem s1conj = 0;
  std::vector<u32> pin_xz;             // w -> (d0 << 8 | e) + 1
  std::vector<u32> pin_yz;             // w -> (c2 << 8 | d1) + 1
  std::array<std::array<elem, 3>, 4> source{};  // (s1:0:1) (s1q:0:1) (0:s1:1) (0:s1q:1)
  std::array<elem, 9> src_inv{};       // inverse of the source frame matrix
};

std::array<elem, 9> mat3_mul(const FieldCtx& F, const std::array<elem, 9>& a,
                             const std::array<elem, 9>& b) {
  std::array<elem, 9> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      elem s = 0;
      for (int k = 0; k < 3; ++k)
        s = F.add(s, F.mul(a[3 * i + k], b[3 * k + j]));
      r[3 * i + j] = s;
    }
  return r;
}

std::array<elem, 9> mat3_inv(const FieldCtx& F, const std::array<elem, 9>& m) {
  elem d = det3(F, m);
  check(d != 0, errc::bad_argument, "singular frame matrix");
  elem id = F.inv(d);
  auto co = [&](int r0, int c0, int r1, int c1) {
    return F.sub(F.mul(m[3 * r0 + c0], m[3 * r1 + c1]),
                 F.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
  };
  std::array<elem, 9> adj{};
  adj[0] = co(1, 1, 2, 2);
  adj[1] = F.neg(co(0, 1, 2, 2));
  adj[2] = co(0, 1, 1, 2);
  adj[3] = F.neg(co(1, 0, 2, 2));
  adj[4] = co(0, 0, 2, 2);
  adj[5] = F.neg(co(0, 0, 1, 2));
  adj[6] = co(1, 0, 2, 1);
  adj[7] = F.neg(co(0, 0, 2, 1));
  adj[8] = co(0, 0, 1, 1);
  for (elem& v : adj) v = F.mul(v, id);
  return adj;
}

// Solves S.c = p3 for the columns scaling of the frame matrix sending the
// standard frame (e1, e2, e3, e1+e2+e3) to the four given points.
std::array<elem, 9> frame_matrix(const FieldCtx& F,
                                 const std::array<std::array<elem, 3>, 4>& pts) {
  // Gaussian elimination on [p0 p1 p2 | p3]
  std::array<std::array<elem, 4>, 3> a{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) a[r][c] = pts[c][r];
    a[r][3] = pts[3][r];
  }
  std::array<int, 3> where{-1, -1, -1};
  int row = 0;
  for (int col = 0; col < 3 && row < 3; ++col) {
    int piv = -1;
    for (int r = row; r < 3; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    elem iv = F.inv(a[row][col]);
    for (int c = col; c < 4; ++c) a[row][c] = F.mul(a[row][c], iv);
    for (int r = 0; r < 3; ++r) {
      if (r == row || a[r][col] == 0) continue;
      elem f = a[r][col];
      for (int c = col; c < 4; ++c)
        a[r][c] = F.sub(a[r][c], F.mul(f, a[row][c]));
    }
    where[col] = row;
    ++row;
  }
  std::array<elem, 3> cs{};
  for (int col = 0; col < 3; ++col) {
    check(where[col] >= 0, errc::bad_argument,
          "frame points are not in general position");
    cs[col] = a[where[col]][3];
    check(cs[col] != 0, errc::bad_argument,
          "frame points are not in general position");
  }
  std::array<elem, 9> m{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[3 * r + c] = F.mul(cs[c], pts[c][r]);
  return m;
}

std::map<u32, FrameData>& frame_cache() {
  static std::map<u32, FrameData> cache;
  return cache;
}
std::mutex& frame_mutex() {
  static std::mutex m;
  return m;
}

const FrameData& frame_data(u32 q) {
  std::lock_guard<std::mutex> lock(frame_mutex());
  auto& cache = frame_cache();
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  PrimePower pp = factor_prime_power(q);
  const FieldCtx& Fq = make_field(pp.p, pp.k);
  const FieldCtx& E = make_field(pp.p, 2 * pp.k);
  check(E.size() == u64{q} * q, errc::field_too_large,
        "quadratic extension exceeds the field cap");

  FrameData fd;
  fd.frame.q = q;
  fd.frame.Fq = &Fq;
  fd.frame.Fq2 = &E;

  fd.emb.resize(q);
  for (u32 a = 0; a < q; ++a) fd.emb[a] = E.embed_from(Fq, a);
  fd.down.assign(E.size(), -1);
  for (u32 a = 0; a < q; ++a) fd.down[fd.emb[a]] = static_cast<int>(a);

  // least multiplicative order, then least code, outside the subfield
  elem best = 0;
  u64 best_ord = ~0ull;
  for (elem a = 1; a < E.size(); ++a) {
    if (E.in_subfield(a, Fq)) continue;
    u64 o = E.mult_order(a);
    if (o < best_ord) {
      best_ord = o;
      best = a;
    }
  }
  check(best != 0, errc::bad_argument, "no degree-2 element found");
  fd.frame.s1 = best;
  fd.s1conj = E.frobenius_over(best, Fq);
  for (u32 i = 0; i < 5; ++i) fd.s1p[i] = E.pow(best, i);
  fd.frame.P1 = make_point(E, best, 0, E.one());
  fd.frame.P2 = make_point(E, 0, best, E.one());

  // d0*s1 + e and c2*s1^2 + d1*s1 are bijections F_q^2 -> F_{q^2}
  fd.pin_xz.assign(E.size(), 0);
  fd.pin_yz.assign(E.size(), 0);
  for (u32 a = 0; a < q; ++a)
    for (u32 b = 0; b < q; ++b) {
      elem w1 = E.add(E.mul(fd.emb[a], fd.s1p[1]), fd.emb[b]);
      check(fd.pin_xz[w1] == 0, errc::bad_argument, "pin table collision");
      fd.pin_xz[w1] = ((a << 8) | b) + 1;
      elem w2 = E.add(E.mul(fd.emb[a], fd.s1p[2]), E.mul(fd.emb[b], fd.s1p[1]));
      check(fd.pin_yz[w2] == 0, errc::bad_argument, "pin table collision");
      fd.pin_yz[w2] = ((a << 8) | b) + 1;
    }

  fd.source = {{{best, 0, E.one()},
                {fd.s1conj, 0, E.one()},
                {0, best, E.one()},
                {0, fd.s1conj, E.one()}}};
  fd.src_inv = mat3_inv(E, frame_matrix(E, fd.source));

  return cache.emplace(q, std::move(fd)).first->second;
}

// ---------------------------------------------------------------------------
// Degree-2 closed points with their rational lines

struct QuadSite {
  ProjPoint rep, conj;
  std::array<elem, 3> line;  // over F_q, first nonzero entry scaled to 1
};

std::vector<QuadSite> build_quad_sites(const FrameData& fd) {
  const FieldCtx& Fq = *fd.frame.Fq;
  const FieldCtx& E = *fd.frame.Fq2;
  std::vector<QuadSite> out;
  for (const ClosedPoint& cp : closed_points(Fq, 2)) {
    QuadSite s;
    s.rep = cp.rep;
    s.conj = cp.orbit.at(1);
    std::array<elem, 3> u{s.rep.x, s.rep.y, s.rep.z};
    std::array<elem, 3> v{s.conj.x, s.conj.y, s.conj.z};
    std::array<elem, 3> cr{
        E.sub(E.mul(u[1], v[2]), E.mul(u[2], v[1])),
        E.sub(E.mul(u[2], v[0]), E.mul(u[0], v[2])),
        E.sub(E.mul(u[0], v[1]), E.mul(u[1], v[0]))};
    int lead = cr[0] ? 0 : (cr[1] ? 1 : 2);
    check(cr[lead] != 0, errc::bad_argument, "degenerate conjugate line");
    elem iv = E.inv(cr[lead]);
    for (int i = 0; i < 3; ++i) {
      elem w = E.mul(cr[i], iv);
      check(fd.down[w] >= 0, errc::bad_argument,
            "conjugate line is not rational");
      s.line[i] = static_cast<elem>(fd.down[w]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

const std::vector<QuadSite>& quad_sites_for(u32 q) {
  static std::map<u32, std::vector<QuadSite>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, build_quad_sites(frame_data(q))).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Streaming enumeration of pointless quartics (optionally pinned)

struct StreamParams {
  u32 q = 0;
  bool pinned = false;
  u32 workers = 1;
  u32 worker_id = 0;
};

// Calls emit with a reused scratch form; the reference is only valid during
// the callback.
void stream_pointless(const StreamParams& sp,
                      const std::function<void(const TernaryForm&)>& emit) {
  const FrameData& fd = frame_data(sp.q);
  const FieldCtx& F = *fd.frame.Fq;
  const FieldCtx& E = *fd.frame.Fq2;
  const u32 q = sp.q;

  // quartic value of (1, c3, c2, c1, c0) at t, by Horner
  auto quart = [&](elem c3, elem c2, elem c1, elem c0, elem t) {
    elem v = F.add(t, c3);
    v = F.add(F.mul(v, t), c2);
    v = F.add(F.mul(v, t), c1);
    v = F.add(F.mul(v, t), c0);
    return v;
  };
  // quartic value of (c4, c3, c2, c1, c0) at t, by Horner
  auto quart5 = [&](elem c4, elem c3, elem c2, elem c1, elem c0, elem t) {
    elem v = F.add(F.mul(c4, t), c3);
    v = F.add(F.mul(v, t), c2);
    v = F.add(F.mul(v, t), c1);
    v = F.add(F.mul(v, t), c0);
    return v;
  };

  // x/y block: (1, a1, a2, a3, a4) nonzero on the whole line z = 0
  struct ABlock {
    elem a1, a2, a3, a4;
  };
  std::vector<ABlock> alist;
  for (elem a1 = 0; a1 < q; ++a1)
    for (elem a2 = 0; a2 < q; ++a2)
      for (elem a3 = 0; a3 < q; ++a3)
        for (elem a4 = 1; a4 < q; ++a4) {
          bool ok = true;
          for (elem t = 0; t < q && ok; ++t) ok = quart(a1, a2, a3, a4, t) != 0;
          if (ok) alist.push_back({a1, a2, a3, a4});
        }

  // x/z block: vanishing at P1 (when pinned) and nonzero on the line y = 0
  struct XZBlock {
    elem b0, c0, d0, e;
    std::vector<elem> val;  // value at (a, 1), a = 1..q-1
  };
  std::vector<XZBlock> xzlist;
  auto try_xz = [&](elem b0, elem c0, elem d0, elem e) {
    for (elem t = 0; t < q; ++t)
      if (quart(b0, c0, d0, e, t) == 0) return;
    XZBlock blk{b0, c0, d0, e, {}};
    blk.val.resize(q - 1);
    // store the block's own contribution, without the x^4 leading term that
    // the x/y block already supplies
    for (elem a = 1; a < q; ++a)
      blk.val[a - 1] = quart5(0, b0, c0, d0, e, a);
    xzlist.push_back(std::move(blk));
  };
  if (sp.pinned) {
    for (elem b0 = 0; b0 < q; ++b0)
      for (elem c0 = 0; c0 < q; ++c0) {
        elem w = E.neg(E.add(
            fd.s1p[4], E.add(E.mul(fd.emb[b0], fd.s1p[3]),
                             E.mul(fd.emb[c0], fd.s1p[2]))));
        u32 de = fd.pin_xz[w] - 1;
        try_xz(b0, c0, (de >> 8) & 0xff, de & 0xff);
      }
  } else {
    for (elem b0 = 0; b0 < q; ++b0)
      for (elem c0 = 0; c0 < q; ++c0)
        for (elem d0 = 0; d0 < q; ++d0)
          for (elem e = 1; e < q; ++e) try_xz(b0, c0, d0, e);
  }

  // interior monomial values at the off-line affine points (a, b, 1)
  const u32 npts = (q - 1) * (q - 1);
  std::vector<elem> t1(npts), t2(npts), t3i(npts);
  std::vector<u32> aidx(npts), bidx(npts);
  std::vector<std::array<elem, 5>> mono(npts);  // a^i b^(4-i), i = 0..4
  {
    u32 k = 0;
    for (elem a = 1; a < q; ++a)
      for (elem b = 1; b < q; ++b, ++k) {
        t1[k] = F.mul(F.mul(a, a), b);
        t2[k] = F.mul(a, F.mul(b, b));
        t3i[k] = F.inv(F.mul(a, b));
        aidx[k] = a - 1;
        bidx[k] = b - 1;
        for (u32 i = 0; i <= 4; ++i)
          mono[k][i] = F.mul(F.pow(a, i), F.pow(b, 4 - i));
      }
  }

  TernaryForm scratch = make_form(F, 4, std::vector<elem>(15, 0));
  scratch.c[kX4] = F.one();

  std::vector<elem> aval(npts), base(npts), vu(npts);
  std::vector<elem> yzv(q - 1);
  struct YZBlock {
    elem b3, c2, d1;
  };
  std::vector<YZBlock> yzlist;

  const u32 full_mask = (q >= 32) ? 0xffffffffu : ((1u << q) - 1);

  for (size_t ai = sp.worker_id; ai < alist.size(); ai += sp.workers) {
    const ABlock& A = alist[ai];
    for (u32 k = 0; k < npts; ++k) {
      elem v = mono[k][4];
      v = F.add(v, F.mul(A.a1, mono[k][3]));
      v = F.add(v, F.mul(A.a2, mono[k][2]));
      v = F.add(v, F.mul(A.a3, mono[k][1]));
      v = F.add(v, F.mul(A.a4, mono[k][0]));
      aval[k] = v;
    }
    scratch.c[kXY[0]] = A.a1;
    scratch.c[kXY[1]] = A.a2;
    scratch.c[kXY[2]] = A.a3;
    scratch.c[kXY[3]] = A.a4;

    for (const XZBlock& xz : xzlist) {
      // y/z block: vanishing at P2 (when pinned), nonzero on the line x = 0
      yzlist.clear();
      auto try_yz = [&](elem b3, elem c2, elem d1) {
        for (elem t = 1; t < q; ++t)
          if (quart5(A.a4, b3, c2, d1, xz.e, t) == 0) return;
        yzlist.push_back({b3, c2, d1});
      };
      if (sp.pinned) {
        for (elem b3 = 0; b3 < q; ++b3) {
          elem w = E.neg(E.add(
              E.mul(fd.emb[A.a4], fd.s1p[4]),
              E.add(E.mul(fd.emb[b3], fd.s1p[3]), fd.emb[xz.e])));
          u32 cd = fd.pin_yz[w] - 1;
          try_yz(b3, (cd >> 8) & 0xff, cd & 0xff);
        }
      } else {
        for (elem b3 = 0; b3 < q; ++b3)
          for (elem c2 = 0; c2 < q; ++c2)
            for (elem d1 = 0; d1 < q; ++d1) try_yz(b3, c2, d1);
      }
      if (yzlist.empty()) continue;
      scratch.c[kXZ[0]] = xz.b0;
      scratch.c[kXZ[1]] = xz.c0;
      scratch.c[kXZ[2]] = xz.d0;
      scratch.c[kXZ[3]] = xz.e;

      for (const YZBlock& yz : yzlist) {
        for (elem b = 1; b < q; ++b) {
          elem v = F.mul(yz.b3, F.mul(F.mul(b, b), b));
          v = F.add(v, F.mul(yz.c2, F.mul(b, b)));
          v = F.add(v, F.mul(yz.d1, b));
          yzv[b - 1] = v;
        }
        for (u32 k = 0; k < npts; ++k)
          base[k] = F.add(F.add(aval[k], xz.val[aidx[k]]), yzv[bidx[k]]);
        scratch.c[kYZ[0]] = yz.b3;
        scratch.c[kYZ[1]] = yz.c2;
        scratch.c[kYZ[2]] = yz.d1;

        for (elem u = 0; u < q; ++u) {
          if (u == 0)
            vu = base;
          else
            for (u32 k = 0; k < npts; ++k)
              vu[k] = F.add(base[k], F.mul(u, t1[k]));
          for (elem v = 0; v < q; ++v) {
            u32 mask = full_mask;
            for (u32 k = 0; k < npts; ++k) {
              elem cell = v ? F.add(vu[k], F.mul(v, t2[k])) : vu[k];
              mask &= ~(1u << F.mul(F.neg(cell), t3i[k]));
              if (!mask) break;
            }
            if (!mask) continue;
            scratch.c[kIn[0]] = u;
            scratch.c[kIn[1]] = v;
            for (u32 m = mask; m; m &= m - 1) {
              scratch.c[kIn[2]] =
                  static_cast<elem>(std::countr_zero(m));
              emit(scratch);
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Pinned isomorphs of a smooth pointless quartic

// quadratic points of the curve, as indices into the site table
std::vector<u32> curve_quad_points(const TernaryForm& f,
                                   const std::vector<QuadSite>& sites) {
  std::vector<u32> on;
  for (u32 i = 0; i < sites.size(); ++i)
    if (evaluate(f, sites[i].rep) == 0) on.push_back(i);
  return on;
}

void normalize_leading(const FieldCtx& F, TernaryForm& f) {
  u32 lead = 0;
  while (lead < f.c.size() && f.c[lead] == 0) ++lead;
  check(lead < f.c.size(), errc::bad_argument, "zero form");
  if (f.c[lead] == F.one()) return;
  elem iv = F.inv(f.c[lead]);
  for (elem& c : f.c) c = F.mul(c, iv);
}

u32 nonzero_terms(const TernaryForm& f) {
  u32 n = 0;
  for (elem c : f.c) n += c != 0;
  return n;
}

// fewer nonzero terms first, then lexicographic coefficients
bool normal_form_less(const TernaryForm& a, const TernaryForm& b) {
  u32 na = nonzero_terms(a), nb = nonzero_terms(b);
  if (na != nb) return na < nb;
  return a.c < b.c;
}

std::vector<TernaryForm> isomorphs_from_points(const FrameData& fd,
                                               const TernaryForm& f,
                                               const std::vector<QuadSite>& sites,
                                               const std::vector<u32>& on) {
  const FieldCtx& Fq = *fd.frame.Fq;
  const FieldCtx& E = *fd.frame.Fq2;
  std::vector<std::pair<std::pair<u32, u128>, TernaryForm>> found;
  FlatSet<u128> dedup(10);

  auto coords = [&](const ProjPoint& P) {
    return std::array<elem, 3>{P.x, P.y, P.z};
  };

  for (u32 i : on)
    for (u32 j : on) {
      if (i == j || sites[i].line == sites[j].line) continue;
      for (int swap1 = 0; swap1 < 2; ++swap1)
        for (int swap2 = 0; swap2 < 2; ++swap2) {
          std::array<std::array<elem, 3>, 4> tgt{
              coords(swap1 ? sites[i].conj : sites[i].rep),
              coords(swap1 ? sites[i].rep : sites[i].conj),
              coords(swap2 ? sites[j].conj : sites[j].rep),
              coords(swap2 ? sites[j].rep : sites[j].conj)};
          std::array<elem, 9> psi =
              mat3_mul(E, frame_matrix(E, tgt), fd.src_inv);
          // the map commutes with conjugation, so it descends to F_q
          u32 lead = 0;
          while (lead < 9 && psi[lead] == 0) ++lead;
          check(lead < 9, errc::bad_argument, "zero frame map");
          elem iv = E.inv(psi[lead]);
          std::array<elem, 9> m{};
          for (int t = 0; t < 9; ++t) {
            elem w = E.mul(psi[t], iv);
            check(fd.down[w] >= 0, errc::bad_argument,
                  "frame map does not descend to the base field");
            m[t] = static_cast<elem>(fd.down[w]);
          }
          TernaryForm g = substitute(f, make_pgl3(Fq, m));
          check(g.c[kX4] != 0, errc::bad_argument,
                "transformed quartic lost its leading term");
          normalize_leading(Fq, g);
          u128 key = pack8(g.c);
          if (dedup.insert(key))
            found.push_back({{nonzero_terms(g), key}, std::move(g)});
        }
    }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TernaryForm> out;
  out.reserve(found.size());
  for (auto& p : found) out.push_back(std::move(p.second));
  return out;
}

// ---------------------------------------------------------------------------
// Projective-linear generators acting on coefficient vectors

struct GenAction {
  // (target, coeff, source) triples
  std::vector<std::array<u32, 3>> moves;
};

std::vector<std::array<elem, 9>> group_generators(const FieldCtx& F) {
  elem g = F.gen();
  return {
      {1, 1, 0, 0, 1, 0, 0, 0, 1},  // x -> x + y
      {1, 0, 0, 1, 1, 0, 0, 0, 1},  // y -> x + y
      {0, 1, 0, 0, 0, 1, 1, 0, 0},  // cycle x -> y -> z -> x
      {0, 1, 0, 1, 0, 0, 0, 0, 1},  // swap x, y
      {g, 0, 0, 0, 1, 0, 0, 0, 1},  // scale x by a generator
  };
}

std::vector<GenAction> coefficient_actions(const FieldCtx& F, u32 degree) {
  std::vector<GenAction> out;
  for (const auto& mat : group_generators(F)) {
    Pgl3Map M = make_pgl3(F, mat);
    GenAction act;
    for (u32 i = 0; i <= degree; ++i)
      for (u32 j = 0; i + j <= degree; ++j) {
        u32 src = monomial_index(degree, i, j);
        TernaryForm g = substitute(monomial_form(F, degree, i, j, F.one()), M);
        for (u32 t = 0; t < g.c.size(); ++t)
          if (g.c[t] != 0) act.moves.push_back({t, g.c[t], src});
      }
    out.push_back(std::move(act));
  }
  return out;
}

void apply_action(const FieldCtx& F, const GenAction& act,
                  const std::vector<elem>& in, std::vector<elem>& out) {
  std::fill(out.begin(), out.end(), 0);
  for (const auto& mv : act.moves)
    out[mv[0]] = F.add(out[mv[0]], F.mul(mv[1], in[mv[2]]));
}

// BFS closure of the (normalized) orbit of `start` under the generator
// actions; returns the least packed vector.
u64 orbit_min_packed(const FieldCtx& F, const std::vector<GenAction>& acts,
                     const std::vector<elem>& start, FlatSet<u64>& seen,
                     std::vector<u64>* members) {
  std::vector<u64> stack;
  std::vector<elem> cur(start.size()), next(start.size());
  u64 k0 = pack3(start);
  seen.insert(k0);
  if (members) members->push_back(k0);
  stack.push_back(k0);
  u64 best = k0;
  while (!stack.empty()) {
    u64 k = stack.back();
    stack.pop_back();
    cur = unpack3(k, static_cast<u32>(start.size()));
    for (const GenAction& act : acts) {
      apply_action(F, act, cur, next);
      u32 lead = 0;
      while (lead < next.size() && next[lead] == 0) ++lead;
      check(lead < next.size(), errc::bad_argument,
            "orbit move produced the zero form");
      if (next[lead] != F.one()) {
        elem iv = F.inv(next[lead]);
        for (elem& c : next) c = F.mul(c, iv);
      }
      u64 k2 = pack3(next);
      if (seen.insert(k2)) {
        stack.push_back(k2);
        if (members) members->push_back(k2);
        best = std::min(best, k2);
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Census entry assembly

CensusEntry finish_entry(u32 q, TernaryForm nf) {
  CensusEntry e;
  e.q = q;
  CountsVector N = point_counts(nf, 3);
  CountsVector a = closed_counts(N);
  e.counts = {a[0], a[1], a[2]};
  e.real_weil = real_weil_from_counts(N, 3, q);
  e.normal_form = std::move(nf);
  return e;
}

bool supported_census_field(u32 q) {
  switch (q) {
    case 2:
    case 3:
    case 4:
    case 5:
    case 7:
    case 8:
    case 9:
    case 11:
    case 13:
    case 16:
    case 17:
    case 19:
    case 23:
      return true;
    default:
      return false;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Public interface

PinnedFrame pinned_frame(u32 q) { return frame_data(q).frame; }

void enumerate_pinned_pointless(
    u32 q, const std::function<void(const TernaryForm&)>& emit) {
  check(supported_census_field(q), errc::unsupported_field,
        "no exhaustive search profile for this field");
  StreamParams sp;
  sp.q = q;
  sp.pinned = true;
  stream_pointless(sp, emit);
}

std::vector<TernaryForm> pinned_isomorphs(const TernaryForm& f) {
  check(f.degree == 4, errc::bad_argument, "pinned forms are quartics");
  u32 q = f.F->size();
  const FrameData& fd = frame_data(q);
  const std::vector<QuadSite>& sites = quad_sites_for(q);
  check(count_points(f, 1) == 0, errc::not_pointless,
        "the curve has a rational point");
  check(is_smooth(f), errc::not_smooth, "the curve is singular");
  std::vector<u32> on = curve_quad_points(f, sites);
  std::vector<TernaryForm> out = isomorphs_from_points(fd, f, sites, on);
  check(!out.empty(), errc::not_enough_quadratic_points,
        "no pair of quadratic points on distinct rational lines");
  return out;
}

TernaryForm first_pinned_quartic(const TernaryForm& f) {
  return pinned_isomorphs(f).front();
}

std::vector<CensusEntry> census(u32 q, u32 workers) {
  check(supported_census_field(q), errc::unsupported_field,
        "no exhaustive search profile for this field");
  if (workers < 1) workers = 1;
  if (workers > 16) workers = 16;

  const FrameData& fd = frame_data(q);
  const std::vector<QuadSite>& sites = quad_sites_for(q);
  // warm shared lazy tables (field interning, embeddings) before threading
  {
    TernaryForm probe = make_form(*fd.frame.Fq, 4, std::vector<elem>(15, 0));
    probe.c[kX4] = probe.c[kXY[3]] = probe.c[kXZ[3]] = fd.frame.Fq->one();
    (void)evaluate(probe, sites.front().rep);
    (void)is_smooth(probe);
  }

  std::vector<std::map<u128, TernaryForm>> found(workers);
  std::vector<std::thread> threads;
  for (u32 w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      FlatSet<u128> seen(16);
      StreamParams sp;
      sp.q = q;
      sp.pinned = true;
      sp.workers = workers;
      sp.worker_id = w;
      stream_pointless(sp, [&](const TernaryForm& f) {
        u128 key = pack8(f.c);
        if (seen.contains(key)) return;
        if (!is_smooth(f)) return;
        std::vector<u32> on = curve_quad_points(f, sites);
        std::vector<TernaryForm> iso =
            isomorphs_from_points(fd, f, sites, on);
        check(!iso.empty(), errc::not_enough_quadratic_points,
              "pinned survivor lost its frame points");
        for (const TernaryForm& g : iso) seen.insert(pack8(g.c));
        found[w].emplace(pack8(iso.front().c), std::move(iso.front()));
      });
    });
  }
  for (std::thread& t : threads) t.join();

  std::map<u128, TernaryForm> merged;
  for (auto& m : found)
    for (auto& kv : m) merged.emplace(kv.first, std::move(kv.second));

  std::vector<CensusEntry> entries;
  entries.reserve(merged.size());
  for (auto& kv : merged) entries.push_back(finish_entry(q, std::move(kv.second)));
  std::sort(entries.begin(), entries.end(),
            [](const CensusEntry& a, const CensusEntry& b) {
              return normal_form_less(a.normal_form, b.normal_form);
            });
  return entries;
}

std::vector<CensusEntry> brute_census_small(u32 q) {
  check(q >= 2 && q <= 5, errc::unsupported_field,
        "orbit classification is sized for fields up to 5 elements");
  const FrameData& fd = frame_data(q);
  const FieldCtx& F = *fd.frame.Fq;
  std::vector<GenAction> acts = coefficient_actions(F, 4);

  FlatSet<u64> seen(q == 5 ? 22 : 16);
  std::vector<u64> class_keys;
  StreamParams sp;
  sp.q = q;
  sp.pinned = false;
  stream_pointless(sp, [&](const TernaryForm& f) {
    u64 key = pack3(f.c);
    if (seen.contains(key)) return;
    u64 mn = orbit_min_packed(F, acts, f.c, seen, nullptr);
    TernaryForm rep = make_form(F, 4, unpack3(mn, 15));
    if (is_smooth(rep)) class_keys.push_back(mn);
  });

  std::sort(class_keys.begin(), class_keys.end());
  std::vector<CensusEntry> entries;
  entries.reserve(class_keys.size());
  for (u64 k : class_keys)
    entries.push_back(finish_entry(q, make_form(F, 4, unpack3(k, 15))));
  return entries;
}

TernaryForm orbit_canonical_form(const TernaryForm& f) {
  check(f.degree == 4 && !is_zero(f), errc::bad_argument,
        "orbit canonicalization applies to nonzero quartics");
  const FieldCtx& F = *f.F;
  check(F.size() <= 7, errc::group_too_large,
        "orbit closure is sized for fields up to 7 elements");
  std::vector<GenAction> acts = coefficient_actions(F, 4);
  TernaryForm start = f;
  normalize_leading(F, start);
  FlatSet<u64> seen(16);
  u64 mn = orbit_min_packed(F, acts, start.c, seen, nullptr);
  return make_form(F, 4, unpack3(mn, 15));
}

u64 projective_group_order(u32 q) {
  PrimePower pp = factor_prime_power(q);
  check(q <= 7, errc::group_too_large,
        "group closure is sized for fields up to 7 elements");
  const FieldCtx& F = make_field(pp.p, pp.k);
  auto gens = group_generators(F);
  auto pack_mat = [&](const std::array<elem, 9>& m) {
    u64 k = 0;
    for (elem v : m) k = (k << 3) | v;
    return k;
  };
  auto normalize_mat = [&](std::array<elem, 9>& m) {
    u32 lead = 0;
    while (lead < 9 && m[lead] == 0) ++lead;
    elem iv = F.inv(m[lead]);
    for (elem& v : m) v = F.mul(v, iv);
  };
  std::array<elem, 9> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  FlatSet<u64> seen(16);
  std::vector<std::array<elem, 9>> stack{id};
  seen.insert(pack_mat(id));
  while (!stack.empty()) {
    std::array<elem, 9> m = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      std::array<elem, 9> n = mat3_mul(F, g, m);
      normalize_mat(n);
      if (seen.insert(pack_mat(n))) stack.push_back(n);
    }
  }
  return seen.size();
}

namespace {

UniqueQuarticReport verify_unique_quartic(const FieldCtx& F,
                                          const std::string& text) {
  UniqueQuarticReport r;
  r.q = F.size();
  r.form = parse_form(F, 4, text);
  r.pointless = count_points(r.form, 1) == 0;
  r.smooth = is_smooth(r.form);
  CountsVector N = point_counts(r.form, 3);
  CountsVector a = closed_counts(N);
  r.counts = {a[0], a[1], a[2]};
  r.real_weil = real_weil_from_counts(N, 3, r.q);
  r.counts_match = counts_from_real_weil(r.real_weil, 3) == N;
  return r;
}

}  // namespace

UniqueQuarticReport verify_f29_unique() {
  return verify_unique_quartic(make_field(29, 1), "x^4 + y^4 + z^4");
}

UniqueQuarticReport verify_f32_unique() {
  return verify_unique_quartic(
      make_field(2, 5),
      "(x^2 + x*z)^2 + (y^2 + y*z)*(x^2 + x*z) + (y^2 + y*z)^2 + z^4");
}

std::string census_line(const CensusEntry& e) {
  std::string out = std::to_string(e.q);
  out += '\t';
  out += form_to_string(e.normal_form);
  out += '\t';
  for (int i = 0; i < 3; ++i) {
    if (i) out += ' ';
    out += std::to_string(e.counts[i]);
  }
  out += '\t';
  const ZPoly& h = e.real_weil.h;
  for (int i = h.deg(); i >= 0; --i) {
    if (i != h.deg()) out += ' ';
    out += h[i].str();
  }
  return out;
}

CensusEntry parse_census_line(const std::string& line) {
  std::array<std::string, 4> field;
  size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    size_t tab = line.find('\t', start);
    check(i == 3 ? tab == std::string::npos : tab != std::string::npos,
          errc::parse_error, "census line needs four tab-separated fields");
    field[i] = line.substr(start, tab == std::string::npos ? tab : tab - start);
    start = tab + 1;
  }

  CensusEntry e;
  {
    size_t used = 0;
    e.q = static_cast<u32>(std::stoul(field[0], &used));
    check(used == field[0].size(), errc::parse_error, "bad field size: " + field[0]);
  }
  PrimePower pp = factor_prime_power(e.q);
  const FieldCtx& F = make_field(pp.p, pp.k);
  e.normal_form = parse_form(F, 4, field[1]);

  std::istringstream counts(field[2]);
  for (i64& c : e.counts)
    check(static_cast<bool>(counts >> c), errc::parse_error,
          "census line needs three counts: " + field[2]);
  std::string extra;
  check(!(counts >> extra), errc::parse_error, "trailing counts: " + field[2]);

  std::istringstream hs(field[3]);
  std::vector<i64> lead_first;
  i64 v = 0;
  while (hs >> v) lead_first.push_back(v);
  check(hs.eof(), errc::parse_error, "bad polynomial coefficient: " + field[3]);
  check(lead_first.size() == 4, errc::parse_error,
        "census line needs four polynomial coefficients: " + field[3]);
  std::vector<bigint> asc(lead_first.rbegin(), lead_first.rend());
  e.real_weil = make_real_weil(3, e.q, ZPoly(std::move(asc)));
  return e;
}

}  // namespace maxgon
