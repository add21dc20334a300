#pragma once
// Homogeneous ternary forms over small finite fields: ring operations,
// evaluation at projective points, point counts over extensions, closed-point
// counts, smooth-point detection, exact smoothness for degree <= 4, and
// gonality classification of smooth quartics.

#include <array>
#include <string>
#include <vector>

#include "maxgon/gfield.hpp"
#include "maxgon/projplane.hpp"
#include "maxgon/util.hpp"

namespace maxgon {

// Homogeneous form of fixed degree in x, y, z. Coefficients are stored in the
// fixed monomial order: x-exponent descending, then y-exponent descending
// (the z-exponent is implied). Degree 0 (scalars) is allowed; the zero form
// of any degree has all-zero coefficients.
struct TernaryForm {
  const FieldCtx* F = nullptr;
  u32 degree = 0;
  std::vector<elem> c;

  bool operator==(const TernaryForm& o) const {
    return F == o.F && degree == o.degree && c == o.c;
  }
  bool operator!=(const TernaryForm& o) const { return !(*this == o); }
  // degree first, then coefficient codes in monomial order
  bool operator<(const TernaryForm& o) const {
    if (degree != o.degree) return degree < o.degree;
    return c < o.c;
  }
};

// Number of degree-d monomials, (d+1)(d+2)/2.
u32 monomial_count(u32 d);
// Index of x^i y^j z^(d-i-j) in the fixed monomial order.
u32 monomial_index(u32 d, u32 i, u32 j);

TernaryForm make_form(const FieldCtx& F, u32 degree, std::vector<elem> coeffs);
TernaryForm zero_form(const FieldCtx& F, u32 degree);
TernaryForm monomial_form(const FieldCtx& F, u32 degree, u32 i, u32 j,
                          elem coeff);
bool is_zero(const TernaryForm& f);

TernaryForm add(const TernaryForm& a, const TernaryForm& b);
TernaryForm scale(const TernaryForm& a, elem s);
TernaryForm mul(const TernaryForm& a, const TernaryForm& b);

// Formal partial derivatives, degree - 1, with mod-p coefficient kill.
TernaryForm partial(const TernaryForm& f, int var);  // 0 = x, 1 = y, 2 = z
std::array<TernaryForm, 3> partials(const TernaryForm& f);

// Coefficient-wise embedding into an extension E of f's field.
TernaryForm embed_form(const TernaryForm& f, const FieldCtx& E);

// Value at the canonical representative of P; P may live in any extension of
// f's field.
elem evaluate(const TernaryForm& f, const ProjPoint& P);
// Whether f vanishes at the closed point (independent of the representative).
bool vanishes_at(const TernaryForm& f, const ClosedPoint& P);

// The composed form f(M.(x,y,z)): row r of M gives the image of the r-th
// variable. M must be over f's field.
TernaryForm substitute(const TernaryForm& f, const Pgl3Map& M);

// Number of points of P^2(F_{q^r}) on the zero locus of f.
i64 count_points(const TernaryForm& f, u32 r);
// count_points for r = 1..r_max.
CountsVector point_counts(const TernaryForm& f, u32 r_max);
// a[d-1] = number of closed points of degree d on the zero locus, by Moebius
// inversion of point_counts; a failed integrality or sign check signals an
// internal arithmetic bug.
CountsVector closed_point_counts(const TernaryForm& f, u32 d_max);

// Closed points of degree exactly d where f vanishes and some partial
// derivative does not.
std::vector<ClosedPoint> smooth_points_of_degree(const TernaryForm& f, u32 d);

// Whether the plane curve f = 0 is smooth, i.e. f and its partials share no
// projective zero over any extension. Degrees 1..4 only.
bool is_smooth(const TernaryForm& f);

// 3 when the smooth quartic f has a rational point, 4 otherwise.
int quartic_gonality_class(const TernaryForm& f);

// Human-readable monomial sum, e.g. "x^4 + t*x*y^3 + (t^2+1)*z^4".
std::string form_to_string(const TernaryForm& f);
// Parse a sum of products of variables, parenthesized subforms, and field
// literals; the result must be homogeneous of the given degree.
TernaryForm parse_form(const FieldCtx& F, u32 degree, const std::string& text);

// Compact coefficient-vector literal: element codes in the fixed monomial
// order, as one base-p digit run per coefficient (most significant digit
// first), or comma-separated decimal codes when p > 9.
std::string form_to_digits(const TernaryForm& f);
TernaryForm form_from_digits(const FieldCtx& F, u32 degree,
                             const std::string& text);

}  // namespace maxgon
