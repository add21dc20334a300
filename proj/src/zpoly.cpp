// Exact integer/rational polynomial arithmetic and Sturm root counting.

#include "maxgon/zpoly.hpp"

#include <algorithm>
#include <cctype>

namespace maxgon {
namespace {

const bigint kZero = 0;

bigint bigint_pow(bigint b, u32 e) {
  bigint r = 1;
  while (e--) r *= b;
  return r;
}

// rational-coefficient scratch polynomials for division and Sturm chains
using qvec = std::vector<bigrat>;

qvec to_q(const ZPoly& f) {
  qvec v(f.deg() + 1);
  for (int i = 0; i <= f.deg(); ++i) v[i] = f[i];
  return v;
}

int qdeg(const qvec& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// remainder of a by b over Q (b nonzero)
qvec qrem(qvec a, const qvec& b) {
  int db = qdeg(b);
  for (int da = qdeg(a); da >= db; da = qdeg(a)) {
    bigrat coef = a[da] / b[db];
    for (int j = 0; j <= db; ++j) a[da - db + j] -= coef * b[j];
    a[da] = 0;  // force exact cancellation of the leading term
    a.resize(da);
    if (a.empty()) break;
  }
  return a;
}

// scale a rational polynomial by the unique positive rational making it a
// primitive integer polynomial (sign pattern preserved)
ZPoly q_to_primitive(const qvec& f) {
  int d = qdeg(f);
  if (d < 0) return ZPoly{};
  bigint l = 1;
  for (int i = 0; i <= d; ++i) l = boost::multiprecision::lcm(l, denominator(f[i]));
  std::vector<bigint> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = numerator(f[i]) * (l / denominator(f[i]));
  ZPoly z(std::move(c));
  bigint ct = content(z);
  if (ct > 1) z = div_exact(z, ZPoly(std::vector<bigint>{ct}));
  return z;
}

}  // namespace

ZPoly::ZPoly(std::initializer_list<i64> coeffs) {
  c_.reserve(coeffs.size());
  for (i64 v : coeffs) c_.emplace_back(v);
  trim();
}

ZPoly::ZPoly(std::vector<bigint> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(int d, const bigint& coef) {
  std::vector<bigint> c(d + 1, 0);
  c[d] = coef;
  return ZPoly(std::move(c));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const bigint& ZPoly::operator[](int i) const {
  if (i < 0 || i > deg()) return kZero;
  return c_[i];
}

const bigint& ZPoly::lc() const {
  check(!c_.empty(), errc::bad_argument, "leading coefficient of zero polynomial");
  return c_.back();
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<bigint> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = (*this)[static_cast<int>(i)] + o[static_cast<int>(i)];
  return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<bigint> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = (*this)[static_cast<int>(i)] - o[static_cast<int>(i)];
  return ZPoly(std::move(c));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<bigint> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return ZPoly(std::move(c));
}

ZPoly ZPoly::operator*(const bigint& s) const {
  std::vector<bigint> c(c_);
  for (auto& x : c) x *= s;
  return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-() const { return *this * bigint(-1); }

bool ZPoly::operator<(const ZPoly& o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  for (int i = deg(); i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

ZPoly ZPoly::derivative() const {
  if (deg() < 1) return {};
  std::vector<bigint> c(deg());
  for (int i = 1; i <= deg(); ++i) c[i - 1] = c_[i] * i;
  return ZPoly(std::move(c));
}

bigint ZPoly::eval(const bigint& x) const {
  bigint acc = 0;
  for (int i = deg(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

double ZPoly::eval_d(double x) const {
  double acc = 0;
  for (int i = deg(); i >= 0; --i) acc = acc * x + static_cast<double>(c_[i]);
  return acc;
}

std::string ZPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    const bigint& v = c_[i];
    if (v == 0) continue;
    bigint av = v < 0 ? bigint(-v) : v;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (i == 0 || av != 1) out += av.str();
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

// sum-of-terms parser: [+-] [int] [ '*'? 'T' [ '^' int ] ]
ZPoly parse_sum(const std::string& s, size_t& pos, size_t end) {
  std::vector<bigint> c;
  auto skip = [&] {
    while (pos < end && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto add_term = [&](const bigint& coef, int expo) {
    if (static_cast<int>(c.size()) <= expo) c.resize(expo + 1, 0);
    c[expo] += coef;
  };
  bool first = true;
  for (;;) {
    skip();
    if (pos >= end) break;
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    } else {
      check(first, errc::parse_error, "expected '+' or '-' in polynomial: " + s);
    }
    skip();
    check(pos < end, errc::parse_error, "truncated polynomial: " + s);
    bigint coef = 1;
    bool have_digits = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = 0;
      while (pos < end && std::isdigit(static_cast<unsigned char>(s[pos])))
        coef = coef * 10 + (s[pos++] - '0');
      have_digits = true;
      skip();
      if (pos < end && s[pos] == '*') {
        ++pos;
        skip();
      }
    }
    int expo = 0;
    if (pos < end && (s[pos] == 'T' || s[pos] == 't')) {
      ++pos;
      expo = 1;
      skip();
      if (pos < end && s[pos] == '^') {
        ++pos;
        skip();
        check(pos < end && std::isdigit(static_cast<unsigned char>(s[pos])), errc::parse_error,
              "bad exponent in polynomial: " + s);
        expo = 0;
        while (pos < end && std::isdigit(static_cast<unsigned char>(s[pos])))
          expo = expo * 10 + (s[pos++] - '0');
      }
    } else {
      check(have_digits, errc::parse_error, "expected term in polynomial: " + s);
    }
    add_term(sign * coef, expo);
    first = false;
    skip();
    if (pos < end && (s[pos] == '(' || s[pos] == ')')) break;
  }
  check(!first, errc::parse_error, "empty polynomial: " + s);
  return ZPoly(std::move(c));
}

}  // namespace

ZPoly parse_zpoly(const std::string& text) {
  if (text.find('(') == std::string::npos) {
    size_t pos = 0;
    ZPoly f = parse_sum(text, pos, text.size());
    check(pos >= text.size(), errc::parse_error, "trailing junk in polynomial: " + text);
    return f;
  }
  // product of parenthesized factors, each with an optional integer power
  ZPoly prod{1};
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    ZPoly f;
    if (text[pos] == '(') {
      ++pos;
      f = parse_sum(text, pos, text.size());
      check(pos < text.size() && text[pos] == ')', errc::parse_error,
            "missing ')' in polynomial product: " + text);
      ++pos;
    } else {
      // bare factor such as the leading "T" in "T(T^2 - 2)"
      f = parse_sum(text, pos, text.size());
      check(pos >= text.size() || text[pos] == '(', errc::parse_error,
            "expected '(' in polynomial product: " + text);
    }
    skip();
    u32 e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      check(pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])),
            errc::parse_error, "bad power in polynomial product: " + text);
      e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        e = e * 10 + (text[pos++] - '0');
    }
    while (e--) prod = prod * f;
    skip();
  }
  return prod;
}

ZPoly div_exact(const ZPoly& f, const ZPoly& g) {
  check(!g.is_zero(), errc::bad_argument, "division by zero polynomial");
  if (f.is_zero()) return {};
  check(f.deg() >= g.deg(), errc::bad_argument, "inexact polynomial division");
  std::vector<bigint> rem(f.deg() + 1), q(f.deg() - g.deg() + 1, 0);
  for (int i = 0; i <= f.deg(); ++i) rem[i] = f[i];
  for (int d = f.deg(); d >= g.deg(); --d) {
    if (rem[d] == 0) continue;
    check(rem[d] % g.lc() == 0, errc::bad_argument, "inexact polynomial division");
    bigint coef = rem[d] / g.lc();
    q[d - g.deg()] = coef;
    for (int j = 0; j <= g.deg(); ++j) rem[d - g.deg() + j] -= coef * g[j];
  }
  for (const bigint& r : rem) check(r == 0, errc::bad_argument, "inexact polynomial division");
  return ZPoly(std::move(q));
}

bool divides(const ZPoly& g, const ZPoly& f) {
  if (f.is_zero()) return true;
  if (g.is_zero() || f.deg() < g.deg()) return false;
  return qdeg(qrem(to_q(f), to_q(g))) < 0;
}

bigint content(const ZPoly& f) {
  bigint c = 0;
  for (int i = 0; i <= f.deg(); ++i) c = boost::multiprecision::gcd(c, f[i]);
  return c;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.is_zero()) return {};
  bigint c = content(f);
  if (f.lc() < 0) c = -c;
  std::vector<bigint> out(f.deg() + 1);
  for (int i = 0; i <= f.deg(); ++i) out[i] = f[i] / c;
  return ZPoly(std::move(out));
}

ZPoly gcd_poly(const ZPoly& f, const ZPoly& g) {
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  qvec a = to_q(f), b = to_q(g);
  while (qdeg(b) >= 0) {
    qvec r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  ZPoly z = q_to_primitive(a);
  return z.lc() < 0 ? -z : z;
}

ZPoly squarefree_part(const ZPoly& f) {
  if (f.deg() < 1) return primitive_part(f);
  ZPoly g = gcd_poly(f, f.derivative());
  qvec a = to_q(f), b = to_q(g);
  // exact quotient over Q, then primitive
  int dq = qdeg(a) - qdeg(b);
  qvec q(dq + 1, 0);
  for (int d = qdeg(a); d >= qdeg(b) && d >= 0; d = qdeg(a)) {
    bigrat coef = a[d] / b[qdeg(b)];
    q[d - qdeg(b)] = coef;
    for (int j = 0; j <= qdeg(b); ++j) a[d - qdeg(b) + j] -= coef * b[j];
    a[d] = 0;
    a.resize(d);
    if (a.empty()) break;
  }
  ZPoly z = q_to_primitive(q);
  return z.lc() < 0 ? -z : z;
}

namespace {

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced mod b
ZPoly prem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  int e = a.deg() - b.deg() + 1;
  while (!r.is_zero() && r.deg() >= b.deg()) {
    ZPoly t = ZPoly::monomial(r.deg() - b.deg(), r.lc()) * b;
    r = r * b.lc() - t;
    --e;
  }
  if (e > 0) r = r * bigint_pow(b.lc(), static_cast<u32>(e));
  return r;
}

// Sylvester resultant of (A, B): lc(A)^{deg B} * prod B(alpha) over roots of A.
bigint sylvester_resultant(ZPoly A, ZPoly B) {
  if (A.is_zero() || B.is_zero()) return 0;
  if (A.deg() == 0) return bigint_pow(A.lc(), static_cast<u32>(B.deg()));
  int s = 1;
  if (A.deg() < B.deg()) {
    if ((A.deg() & 1) && (B.deg() & 1)) s = -s;
    std::swap(A, B);
  }
  if (B.deg() == 0) return bigint_pow(B.lc(), static_cast<u32>(A.deg()));
  bigint g = 1, h = 1;
  for (;;) {
    int delta = A.deg() - B.deg();
    if ((A.deg() & 1) && (B.deg() & 1)) s = -s;
    ZPoly R = prem(A, B);
    A = B;
    bigint divisor = g * bigint_pow(h, static_cast<u32>(delta));
    B = div_exact(R, ZPoly(std::vector<bigint>{divisor}));
    if (B.is_zero()) return 0;  // nontrivial common factor
    g = A.lc();
    if (delta >= 1) {
      // h <- g^delta / h^(delta-1), exact by the subresultant theory
      bigint num = bigint_pow(g, static_cast<u32>(delta));
      bigint den = bigint_pow(h, static_cast<u32>(delta - 1));
      h = num / den;
    }
    if (B.deg() == 0) {
      // res = s * lc(B)^{deg A} / h^{deg A - 1}
      bigint num = bigint_pow(B.lc(), static_cast<u32>(A.deg()));
      bigint den = bigint_pow(h, static_cast<u32>(A.deg() - 1));
      return s * (num / den);
    }
  }
}

}  // namespace

bigint resultant(const ZPoly& f, const ZPoly& g) {
  check(!f.is_zero() && !g.is_zero(), errc::bad_argument, "resultant of zero polynomial");
  return sylvester_resultant(g, f);
}

int sign_of(const SurdPoint& x) {
  int sa = x.a.sign(), sb = x.b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;  // sqrt(q) >= 0; q = 0 gives b*0, but then b-part is 0 anyway
  if (sa == sb) return sa;
  // signs differ: the larger of |a| and |b|*sqrt(q) decides
  bigrat a2 = x.a * x.a, qb2 = x.b * x.b * x.q;
  if (a2 == qb2) return 0;
  return a2 > qb2 ? sa : sb;
}

int sign_at(const ZPoly& f, const SurdPoint& x) {
  bigrat A = 0, B = 0;  // accumulator A + B*sqrt(q)
  for (int i = f.deg(); i >= 0; --i) {
    bigrat nA = A * x.a + B * x.b * x.q + f[i];
    bigrat nB = A * x.b + B * x.a;
    A = std::move(nA);
    B = std::move(nB);
  }
  return sign_of(SurdPoint{A, B, x.q});
}

namespace {

std::vector<ZPoly> sturm_chain(const ZPoly& f) {
  // q_to_primitive rescales by a positive rational only, which is exactly the
  // freedom Sturm sequences allow: every sign below is faithful.
  std::vector<ZPoly> chain;
  chain.push_back(q_to_primitive(to_q(f)));
  ZPoly d = f.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(q_to_primitive(to_q(d)));
  for (;;) {
    qvec r = qrem(to_q(chain[chain.size() - 2]), to_q(chain.back()));
    if (qdeg(r) < 0) break;
    for (auto& v : r) v = -v;
    chain.push_back(q_to_primitive(r));
  }
  return chain;
}

int variations(const std::vector<ZPoly>& chain, const SurdPoint& x) {
  int v = 0, prev = 0;
  for (const ZPoly& f : chain) {
    int s = sign_at(f, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int count_distinct_roots_in(const ZPoly& f, const SurdPoint& lo, const SurdPoint& hi) {
  check(!f.is_zero(), errc::bad_argument, "root count of zero polynomial");
  if (f.deg() == 0) return 0;
  std::vector<ZPoly> chain = sturm_chain(f);
  return variations(chain, lo) - variations(chain, hi);
}

}  // namespace maxgon
