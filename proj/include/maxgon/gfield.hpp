#pragma once
// Small finite fields F_{p^k}, capped at 2^16 elements.
//
// An element is an integer code in [0, p^k): its base-p digit expansion is the
// coefficient vector of the element in the polynomial basis {1, x, ..., x^{k-1}}
// of F_p[x]/(modulus). The code order is the canonical total order on elements
// used everywhere for normal forms and "least" choices.
//
// Arithmetic uses discrete log/antilog tables built at construction (plus a
// dense addition table for small fields). The default modulus is the Conway
// polynomial, computed on demand, so towers of default fields embed
// compatibly: the subfield embedding sends the polynomial generator x of the
// small field to x^((P-1)/(Q-1)) in the big field.

#include <string>
#include <vector>

#include "maxgon/util.hpp"

namespace maxgon {

using elem = u32;  // element code, < field size

class FieldCtx {
public:
  u32 p() const { return p_; }
  u32 k() const { return k_; }
  u32 size() const { return size_; }
  // modulus coefficient digits c_0..c_k (monic, c_k = 1); for k = 1 this is
  // the linear polynomial x - g with g the chosen multiplicative generator.
  const std::vector<u32>& modulus() const { return mod_; }
  // generator symbol used when printing elements ("t" unless overridden)
  char symbol() const { return sym_; }

  elem zero() const { return 0; }
  elem one() const { return one_; }
  elem gen() const { return gen_; }  // multiplicative generator; equals code p for k >= 2

  elem add(elem a, elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_.empty()) return add_[a * size_ + b];
    return add_slow(a, b);
  }
  elem neg(elem a) const { return p_ == 2 ? a : neg_[a]; }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  elem mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  elem inv(elem a) const {
    check(a != 0, errc::bad_argument, "inverse of zero");
    return exp_[ord_ - log_[a]];
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }
  elem pow(elem a, i64 e) const;
  elem scalar(i64 n) const {  // image of the integer n in the prime subfield
    i64 r = n % static_cast<i64>(p_);
    if (r < 0) r += p_;
    return static_cast<elem>(r);  // constants are the codes 0..p-1
  }

  u32 log(elem a) const {
    check(a != 0, errc::bad_argument, "log of zero");
    return log_[a];
  }
  elem exp(u64 e) const { return exp_[e % ord_]; }

  elem frobenius(elem a) const { return pow(a, p_); }               // a^p
  elem frobenius_over(elem a, const FieldCtx& base) const;          // a^{|base|}
  int degree_over(elem a, const FieldCtx& base) const;              // [F_p(a) : base]
  bool in_subfield(elem a, const FieldCtx& base) const { return degree_over(a, base) == 1 || a == 0; }
  u32 mult_order(elem a) const;

  u32 digit(elem a, int i) const;
  std::vector<u32> digits(elem a) const;
  elem from_digits(const std::vector<u32>& d) const;

  // The subfield this context was built over via ext_field (null for
  // make_field-constructed contexts, whose implicit base is F_p).
  const FieldCtx* base() const { return base_; }
  // Ring-homomorphic embedding of a base-field element; `base` must divide
  // this field compatibly (size a power of base size).
  elem embed_from(const FieldCtx& base, elem a) const;

  std::string to_string(elem a) const;
  elem parse(const std::string& text) const;

  // identity comparison: contexts are interned, one per (p, k, modulus)
  bool same(const FieldCtx& o) const { return this == &o; }

private:
  friend const FieldCtx& make_field(u32 p, u32 k, const std::vector<u32>* modulus, char symbol);
  friend const FieldCtx& ext_field(const FieldCtx& base, u32 r);
  FieldCtx() = default;
  elem add_slow(elem a, elem b) const;
  const std::vector<u16>& embedding_table(const FieldCtx& base) const;

  u32 p_ = 0, k_ = 0, size_ = 0, ord_ = 0;  // ord_ = size_ - 1
  std::vector<u32> mod_;
  char sym_ = 't';
  elem one_ = 1, gen_ = 0;
  std::vector<u16> exp_;   // length 2*ord_: exp_[i] = gen^i (doubled to skip a mod)
  std::vector<u32> log_;   // log_[code]; log_[0] unused
  std::vector<u16> add_;   // dense table when size_ <= kAddTableCap
  std::vector<u16> neg_;
  std::vector<u16> divp_, modp_;  // code -> code/p, code%p (digit access)
  const FieldCtx* base_ = nullptr;
  // memoized embedding tables keyed by source context (small, linear scan)
  mutable std::vector<std::pair<const FieldCtx*, std::vector<u16>>> embeds_;
};

// Interned field construction. `modulus` (digits c_0..c_k, monic) overrides
// the Conway default; `symbol` sets the printing symbol for the generator.
const FieldCtx& make_field(u32 p, u32 k, const std::vector<u32>* modulus = nullptr, char symbol = 't');

// F_{q^r} over base q = p^k: the (interned) field of size q^r wired so that
// embed_from(base, .) works; with default moduli this is the Conway tower.
const FieldCtx& ext_field(const FieldCtx& base, u32 r);

// Conway polynomial digits c_0..c_k (computed, memoized).
std::vector<u32> conway_polynomial(u32 p, u32 k);

// Parse a field specifier like "2^3", "9", "16"; returns the default field.
const FieldCtx& parse_field(const std::string& spec);

}  // namespace maxgon
