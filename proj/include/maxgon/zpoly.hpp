#pragma once
// Dense univariate polynomials with exact integer (and internally rational)
// coefficients: arithmetic, exact division, gcd/squarefree machinery, the
// subresultant resultant, and Sturm-sequence root counting on intervals whose
// endpoints live in Q(sqrt(q)). Degrees stay tiny (<= 10) throughout the
// pipeline, so clarity beats asymptotics everywhere here.

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxgon/util.hpp"

namespace maxgon {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

class ZPoly {
public:
  ZPoly() = default;
  ZPoly(std::initializer_list<i64> coeffs);  // c0, c1, ... (ascending powers)
  explicit ZPoly(std::vector<bigint> coeffs);
  static ZPoly monomial(int d, const bigint& coef = 1);

  int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const bigint& operator[](int i) const;  // coefficient of T^i (0 beyond deg)
  const bigint& lc() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator*(const bigint& s) const;
  ZPoly operator-() const;
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }
  bool operator!=(const ZPoly& o) const { return c_ != o.c_; }
  bool operator<(const ZPoly& o) const;  // degree, then coefficient vector

  ZPoly derivative() const;
  bigint eval(const bigint& x) const;
  double eval_d(double x) const;

  std::string to_string(const std::string& var = "T") const;

private:
  std::vector<bigint> c_;  // no trailing zeros
  void trim();
};

// Parses "T^3-3*T^2-3*T+10" (the '*' optional) and products of parenthesized
// factors with optional powers, e.g. "(T+1)(T^4-2T^3-6T^2+10T+1)^2".
ZPoly parse_zpoly(const std::string& text);

// Quotient of f by g when the division is exact over the integers;
// errc::bad_argument otherwise.
ZPoly div_exact(const ZPoly& f, const ZPoly& g);
bool divides(const ZPoly& g, const ZPoly& f);  // g | f over the rationals

bigint content(const ZPoly& f);          // gcd of coefficients, >= 0
ZPoly primitive_part(const ZPoly& f);    // f / content, leading coefficient > 0
ZPoly gcd_poly(const ZPoly& f, const ZPoly& g);  // primitive, lc > 0
ZPoly squarefree_part(const ZPoly& f);   // f / gcd(f, f'), primitive, lc > 0

// Resultant with the convention res(f, g) = lc(g)^{deg f} * prod f(beta) over
// the roots beta of g, so res(T-a, T-b) = b-a. Subresultant PRS inside.
bigint resultant(const ZPoly& f, const ZPoly& g);

// A point a + b*sqrt(q) with rational a, b and integer q >= 0.
struct SurdPoint {
  bigrat a, b;
  u32 q = 0;
};

int sign_of(const SurdPoint& x);                       // -1, 0, +1
int sign_at(const ZPoly& f, const SurdPoint& x);       // sign of f(x), exact

// Number of distinct real roots of f in the half-open interval (lo, hi],
// computed from a Sturm sequence with exact endpoint signs. lo < hi expected.
int count_distinct_roots_in(const ZPoly& f, const SurdPoint& lo, const SurdPoint& hi);

}  // namespace maxgon
