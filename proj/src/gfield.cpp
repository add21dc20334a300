// Field construction: Conway polynomial search, arithmetic tables, embeddings,
// element parsing/printing. Everything here runs once per distinct field and
// is off every hot path, so clarity wins over speed.

#include "maxgon/gfield.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace maxgon {
namespace {

constexpr u32 kFieldCap = 1u << 16;   // largest constructible field
constexpr u32 kAddTableCap = 2048;    // dense addition table for sizes up to this

// --- dense polynomials over F_p, used only during construction ---------------
// coefficient vectors c[0..deg], no trailing-zero guarantee needed beyond deg()

using ppoly = std::vector<u32>;

int pdeg(const ppoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

// a*b mod (f, p); a and b have degree < k = deg f
ppoly pmulmod(const ppoly& a, const ppoly& b, const ppoly& f, u32 p) {
  u32 k = static_cast<u32>(f.size()) - 1;
  std::vector<u64> acc(2 * k, 0);
  for (u32 i = 0; i < k; ++i) {
    if (i < a.size() && a[i])
      for (u32 j = 0; j < k; ++j)
        if (j < b.size() && b[j]) acc[i + j] += static_cast<u64>(a[i]) * b[j];
  }
  // reduce by monic f from the top
  for (int d = static_cast<int>(2 * k) - 2; d >= static_cast<int>(k); --d) {
    u64 c = acc[d] % p;
    if (!c) continue;
    acc[d] = 0;
    for (u32 j = 0; j < k; ++j) acc[d - k + j] += c * (p - f[j] % p);
  }
  ppoly r(k, 0);
  for (u32 i = 0; i < k; ++i) r[i] = static_cast<u32>(acc[i] % p);
  return r;
}

ppoly ppowmod(ppoly base, u64 e, const ppoly& f, u32 p) {
  u32 k = static_cast<u32>(f.size()) - 1;
  ppoly r(k, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

bool pis_one(const ppoly& f) { return pdeg(f) == 0 && f[0] == 1; }

ppoly pmod(ppoly a, const ppoly& b, u32 p) {  // b monic-ish (leading invertible)
  int db = pdeg(b);
  u32 lead_inv = 1;
  {  // inverse of b's leading coefficient mod p
    u32 l = b[db] % p;
    for (u32 i = 1; i < p; ++i)
      if (l * i % p == 1) lead_inv = i;
  }
  for (int d = pdeg(a); d >= db; d = pdeg(a)) {
    u32 c = a[d] % p;
    if (c) {
      u32 q = c * lead_inv % p;
      for (int j = 0; j <= db; ++j) {
        u64 v = a[d - db + j] + static_cast<u64>(q) * (p - b[j] % p);
        a[d - db + j] = static_cast<u32>(v % p);
      }
    }
    a.resize(d);  // degree strictly dropped
    if (a.empty()) break;
  }
  return a;
}

u64 upow(u64 b, u32 e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

// Irreducibility by trial division: monic f of degree k has a factor iff it
// has a monic divisor of degree in [1, k/2].
bool pirreducible(const ppoly& f, u32 p) {
  u32 k = static_cast<u32>(f.size()) - 1;
  if (k == 1) return true;
  for (u32 m = 1; 2 * m <= k; ++m) {
    u64 count = upow(p, m);  // monic degree-m candidates, coded by lower digits
    for (u64 c = 0; c < count; ++c) {
      ppoly g(m + 1, 0);
      g[m] = 1;
      u64 cc = c;
      for (u32 i = 0; i < m; ++i) {
        g[i] = static_cast<u32>(cc % p);
        cc /= p;
      }
      if (pdeg(pmod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

// order of x in (F_p[x]/f)^* equals p^k - 1?
bool pprimitive_x(const ppoly& f, u32 p) {
  u32 k = static_cast<u32>(f.size()) - 1;
  u64 n = upow(p, k) - 1;
  ppoly x(k, 0);
  x[1] = 1;
  for (u32 ell : prime_factors_of(static_cast<u32>(n)))
    if (pis_one(ppowmod(x, n / ell, f, p))) return false;
  return true;
}

u32 least_primitive_root(u32 p) {
  if (p == 2) return 1;
  auto fac = prime_factors_of(p - 1);
  for (u32 g = 2; g < p; ++g) {
    bool ok = true;
    for (u32 ell : fac) {
      // g^((p-1)/l) mod p
      u64 e = (p - 1) / ell, b = g, r = 1;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(errc::bad_argument, "no primitive root (p not prime?)");
}

std::map<std::pair<u32, u32>, ppoly>& conway_cache() {
  static std::map<std::pair<u32, u32>, ppoly> c;
  return c;
}
std::mutex& conway_mutex() {
  static std::mutex m;
  return m;
}

ppoly conway_impl(u32 p, u32 k);

// evaluate the degree-m polynomial g (integer digit coefficients) at the ring
// element y of F_p[x]/f; returns the residue polynomial
ppoly peval_at(const ppoly& g, const ppoly& y, const ppoly& f, u32 p) {
  u32 kk = static_cast<u32>(f.size()) - 1;
  ppoly acc(kk, 0);
  for (int i = pdeg(g); i >= 0; --i) {
    acc = pmulmod(acc, y, f, p);
    acc[0] = (acc[0] + g[i]) % p;
  }
  return acc;
}

ppoly conway_impl(u32 p, u32 k) {
  auto key = std::make_pair(p, k);
  if (auto it = conway_cache().find(key); it != conway_cache().end()) return it->second;
  ppoly result;
  if (k == 1) {
    u32 g = least_primitive_root(p);
    result = {(p - g) % p, 1};  // x - g
  } else {
    std::vector<u32> proper;  // proper divisors of k (for compatibility checks)
    for (u32 m : divisors_of(k))
      if (m != k) proper.push_back(m);
    u64 n = upow(p, k) - 1;
    // scan candidates in the canonical word order: the word of
    // f = x^k + a_{k-1} x^{k-1} + ... + a_0 is b_i = (-1)^(k-i) a_i mod p,
    // compared lexicographically from b_{k-1} down to b_0.
    std::vector<u32> b(k, 0);
    for (;;) {
      ppoly f(k + 1, 0);
      f[k] = 1;
      for (u32 i = 0; i < k; ++i) {
        u32 a = ((k - i) % 2 == 0) ? b[i] : (p - b[i]) % p;
        f[i] = a;
      }
      if (pirreducible(f, p) && pprimitive_x(f, p)) {
        bool ok = true;
        for (u32 m : proper) {
          ppoly cm = conway_impl(p, m);
          ppoly x(k, 0);
          x[1] = 1;
          ppoly y = ppowmod(x, n / (upow(p, m) - 1), f, p);
          if (pdeg(peval_at(cm, y, f, p)) >= 0) {
            ok = false;
            break;
          }
        }
        if (ok) {
          result = f;
          break;
        }
      }
      // next word (odometer; b_0 is the last lex component, so it moves fastest)
      u32 i = 0;
      while (i < k && b[i] == p - 1) b[i++] = 0;
      if (i == k) fail(errc::bad_argument, "conway search exhausted");
      ++b[i];
    }
  }
  conway_cache()[key] = result;
  return result;
}

// --- field registry -----------------------------------------------------------

struct Registry {
  std::mutex mu;
  std::vector<std::unique_ptr<FieldCtx>> fields;
};
Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::vector<u32> conway_polynomial(u32 p, u32 k) {
  std::lock_guard<std::mutex> lk(conway_mutex());
  return conway_impl(p, k);
}

const FieldCtx& make_field(u32 p, u32 k, const std::vector<u32>* modulus, char symbol) {
  check(is_prime_u32(p), errc::bad_argument, "field characteristic must be prime");
  check(k >= 1, errc::bad_argument, "extension degree must be >= 1");
  u64 size = 1;
  for (u32 i = 0; i < k; ++i) {
    size *= p;
    check(size <= kFieldCap, errc::field_too_large, "field exceeds 2^16 elements");
  }

  std::vector<u32> mod;
  if (modulus) {
    mod = *modulus;
    check(mod.size() == k + 1, errc::bad_modulus, "modulus degree must equal k");
    for (auto& c : mod) c %= p;
    check(mod[k] == 1, errc::bad_modulus, "modulus must be monic");
  } else {
    mod = conway_polynomial(p, k);
    if (p == 2 && k == 4) symbol = 's';  // conventional letter for this field here
  }

  Registry& reg = registry();
  std::lock_guard<std::mutex> lk(reg.mu);
  for (auto& f : reg.fields)
    if (f->p() == p && f->k() == k && f->modulus() == mod) return *f;

  auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx());
  FieldCtx& F = *ctx;
  F.p_ = p;
  F.k_ = k;
  F.size_ = static_cast<u32>(size);
  F.ord_ = F.size_ - 1;
  F.mod_ = mod;
  F.sym_ = symbol;
  F.one_ = 1;

  F.divp_.resize(F.size_);
  F.modp_.resize(F.size_);
  for (u32 c = 0; c < F.size_; ++c) {
    F.divp_[c] = static_cast<u16>(c / p);
    F.modp_[c] = static_cast<u16>(c % p);
  }
  F.neg_.resize(F.size_);
  for (u32 c = 0; c < F.size_; ++c) {
    u32 r = 0, mul = 1, cc = c;
    for (u32 i = 0; i < k; ++i) {
      u32 d = cc % p;
      cc /= p;
      r += ((p - d) % p) * mul;
      mul *= p;
    }
    F.neg_[c] = static_cast<u16>(r);
  }

  // multiplicative tables
  F.exp_.assign(2 * F.ord_, 0);
  F.log_.assign(F.size_, 0);
  if (k == 1) {
    u32 g = (p - mod[0] % p) % p;  // root of x - g
    // verify g generates
    {
      u32 seen = 0, x = 1;
      for (u32 i = 0; i < F.ord_; ++i) {
        x = static_cast<u32>(static_cast<u64>(x) * g % p);
        if (x == 1) {
          seen = i + 1;
          break;
        }
      }
      check(seen == F.ord_, errc::bad_modulus, "modulus root is not a primitive root");
    }
    F.gen_ = g;
    u32 x = 1;
    for (u32 i = 0; i < F.ord_; ++i) {
      F.exp_[i] = static_cast<u16>(x);
      F.log_[x] = i;
      x = static_cast<u32>(static_cast<u64>(x) * g % p);
    }
  } else {
    check(pirreducible(mod, p), errc::bad_modulus, "modulus is not irreducible");
    auto code_of = [&](const ppoly& a) {
      u32 c = 0, mul = 1;
      for (u32 i = 0; i < k; ++i) {
        c += (i < a.size() ? a[i] % p : 0) * mul;
        mul *= p;
      }
      return c;
    };
    auto poly_of = [&](u32 c) {
      ppoly a(k, 0);
      for (u32 i = 0; i < k; ++i) {
        a[i] = c % p;
        c /= p;
      }
      return a;
    };
    // find a multiplicative generator: x itself for primitive moduli (Conway
    // default), otherwise the least element whose order is size-1
    u32 gen_code = 0;
    for (u32 cand = p; cand < F.size_ && !gen_code; ++cand) {
      ppoly c = poly_of(cand), acc = c;
      u32 steps = 1;
      while (!pis_one(acc) && steps <= F.ord_) {
        acc = pmulmod(acc, c, mod, p);
        ++steps;
      }
      if (steps == F.ord_ && pis_one(acc)) gen_code = cand;
    }
    check(gen_code != 0, errc::bad_modulus, "no multiplicative generator found");
    F.gen_ = gen_code;
    ppoly g = poly_of(gen_code), acc(k, 0);
    acc[0] = 1;
    for (u32 i = 0; i < F.ord_; ++i) {
      u32 c = code_of(acc);
      F.exp_[i] = static_cast<u16>(c);
      F.log_[c] = i;
      acc = pmulmod(acc, g, mod, p);
    }
    check(pis_one(acc), errc::bad_modulus, "generator order mismatch");
  }
  for (u32 i = 0; i < F.ord_; ++i) F.exp_[F.ord_ + i] = F.exp_[i];

  if (p != 2 && F.size_ <= kAddTableCap) {
    F.add_.assign(static_cast<size_t>(F.size_) * F.size_, 0);
    for (u32 a = 0; a < F.size_; ++a)
      for (u32 b = 0; b < F.size_; ++b) F.add_[a * F.size_ + b] = static_cast<u16>(F.add_slow(a, b));
  }

  reg.fields.push_back(std::move(ctx));
  return *reg.fields.back();
}

const FieldCtx& ext_field(const FieldCtx& base, u32 r) {
  check(r >= 1, errc::bad_argument, "extension degree must be >= 1");
  const FieldCtx& big = make_field(base.p(), base.k() * r);
  if (!big.base_) const_cast<FieldCtx&>(big).base_ = &base;
  big.embed_from(base, 0);  // force-build (and sanity-check) the embedding now
  return big;
}

elem FieldCtx::add_slow(elem a, elem b) const {
  u32 r = 0, mul = 1;
  while (a || b) {
    u32 d = modp_[a] + modp_[b];
    if (d >= p_) d -= p_;
    r += d * mul;
    mul *= p_;
    a = divp_[a];
    b = divp_[b];
  }
  return r;
}

elem FieldCtx::pow(elem a, i64 e) const {
  if (a == 0) {
    check(e >= 0, errc::bad_argument, "zero to negative power");
    return e == 0 ? one_ : 0;
  }
  i64 m = e % static_cast<i64>(ord_);
  if (m < 0) m += ord_;
  u64 idx = static_cast<u64>(log_[a]) * static_cast<u64>(m) % ord_;
  return exp_[idx];
}

elem FieldCtx::frobenius_over(elem a, const FieldCtx& base) const {
  check(base.p_ == p_ && k_ % base.k_ == 0, errc::mixed_fields, "incompatible base field");
  return pow(a, static_cast<i64>(base.size_));
}

int FieldCtx::degree_over(elem a, const FieldCtx& base) const {
  check(base.p_ == p_ && k_ % base.k_ == 0, errc::mixed_fields, "incompatible base field");
  elem b = frobenius_over(a, base);
  int d = 1;
  while (b != a) {
    b = frobenius_over(b, base);
    ++d;
  }
  return d;
}

u32 FieldCtx::mult_order(elem a) const {
  check(a != 0, errc::bad_argument, "order of zero");
  return ord_ / std::gcd(ord_, log_[a]);
}

u32 FieldCtx::digit(elem a, int i) const {
  while (i-- > 0) a = divp_[a];
  return modp_[a];
}

std::vector<u32> FieldCtx::digits(elem a) const {
  std::vector<u32> d(k_);
  for (u32 i = 0; i < k_; ++i) {
    d[i] = modp_[a];
    a = divp_[a];
  }
  return d;
}

elem FieldCtx::from_digits(const std::vector<u32>& d) const {
  check(d.size() <= k_, errc::bad_argument, "too many digits");
  u32 c = 0, mul = 1;
  for (u32 i = 0; i < k_; ++i) {
    c += (i < d.size() ? d[i] % p_ : 0) * mul;
    mul *= p_;
  }
  return c;
}

const std::vector<u16>& FieldCtx::embedding_table(const FieldCtx& base) const {
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  for (auto& e : embeds_)
    if (e.first == &base) return e.second;
  check(base.p_ == p_ && k_ % base.k_ == 0, errc::mixed_fields, "no embedding: incompatible fields");

  // candidate image of the base polynomial generator: x^((P-1)/(Q-1)) -- the
  // norm-compatible choice, a root of the base modulus for Conway towers;
  // otherwise fall back to the least root of the base modulus in this field
  u32 N = ord_ / base.ord_;
  auto eval_base_mod = [&](elem y) {
    elem acc = 0;
    for (int i = static_cast<int>(base.mod_.size()) - 1; i >= 0; --i)
      acc = add(mul(acc, y), scalar(base.mod_[i]));
    return acc;
  };
  elem rho = 0;
  bool found = false;
  {
    elem cand = (k_ >= 2) ? pow(p_, static_cast<i64>(N)) : pow(gen_, static_cast<i64>(N));
    if (eval_base_mod(cand) == 0) {
      rho = cand;
      found = true;
    }
  }
  if (!found) {
    for (u32 c = 0; c < size_; ++c)
      if (pow(c, static_cast<i64>(base.size_)) == c && eval_base_mod(c) == 0) {
        rho = c;
        found = true;
        break;
      }
  }
  check(found, errc::mixed_fields, "no embedding root found");

  std::vector<u16> table(base.size_, 0);
  std::vector<elem> rho_pow(base.k_);
  rho_pow[0] = one_;
  for (u32 i = 1; i < base.k_; ++i) rho_pow[i] = mul(rho_pow[i - 1], rho);
  for (u32 c = 0; c < base.size_; ++c) {
    elem acc = 0;
    u32 cc = c;
    for (u32 i = 0; i < base.k_; ++i) {
      u32 d = cc % base.p_;
      cc /= base.p_;
      if (d) acc = add(acc, mul(scalar(d), rho_pow[i]));
    }
    table[c] = static_cast<u16>(acc);
  }
  // embedding must be a ring homomorphism; multiplicativity is by construction
  // (rho has the right minimal polynomial), spot-check additivity
  for (u32 a = 0; a < std::min<u32>(base.size_, 64); ++a)
    for (u32 b = 0; b < std::min<u32>(base.size_, 64); ++b)
      check(table[base.add(a, b)] == add(table[a], table[b]), errc::mixed_fields,
            "embedding failed additivity check");
  embeds_.emplace_back(&base, std::move(table));
  return embeds_.back().second;
}

elem FieldCtx::embed_from(const FieldCtx& base, elem a) const {
  if (&base == this) return a;
  return embedding_table(base)[a];
}

std::string FieldCtx::to_string(elem a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::string out;
  for (int i = static_cast<int>(k_) - 1; i >= 0; --i) {
    u32 d = digit(a, i);
    if (!d) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d);
    } else {
      if (d != 1) out += std::to_string(d) + "*";
      out += sym_;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

elem FieldCtx::parse(const std::string& text) const {
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  elem acc = 0;
  bool first = true;
  elem x = (k_ >= 2) ? static_cast<elem>(p_) : 0;  // the polynomial generator
  for (;;) {
    skip();
    int sign = 1;
    if (!first) {
      if (pos >= text.size()) break;
      if (text[pos] == '+') {
        ++pos;
      } else if (text[pos] == '-') {
        sign = -1;
        ++pos;
      } else {
        fail(errc::parse_error, "expected '+' or '-' in element literal: " + text);
      }
    } else if (pos < text.size() && text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    skip();
    check(pos < text.size(), errc::parse_error, "truncated element literal: " + text);
    i64 coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coef = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        coef = coef * 10 + (text[pos++] - '0');
      have_coef = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    i64 expo = 0;
    if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      check(k_ >= 2, errc::parse_error, "generator symbol in prime-field literal: " + text);
      ++pos;
      expo = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        check(pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])),
              errc::parse_error, "bad exponent in element literal: " + text);
        expo = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          expo = expo * 10 + (text[pos++] - '0');
      }
    } else {
      check(have_coef, errc::parse_error, "expected term in element literal: " + text);
    }
    elem term = mul(scalar(sign * coef), pow(x, expo));
    acc = add(acc, term);
    first = false;
    skip();
    if (pos >= text.size()) break;
  }
  check(!first, errc::parse_error, "empty element literal");
  return acc;
}

const FieldCtx& parse_field(const std::string& spec) {
  u32 p = 0, k = 0;
  auto caret = spec.find('^');
  try {
    if (caret == std::string::npos) {
      u32 q = static_cast<u32>(std::stoul(spec));
      check(split_prime_power(q, p, k), errc::parse_error, "not a prime power: " + spec);
    } else {
      p = static_cast<u32>(std::stoul(spec.substr(0, caret)));
      k = static_cast<u32>(std::stoul(spec.substr(caret + 1)));
    }
  } catch (const std::logic_error&) {
    fail(errc::parse_error, "bad field specifier: " + spec);
  }
  return make_field(p, k);
}

}  // namespace maxgon
