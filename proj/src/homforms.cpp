// Homogeneous ternary form arithmetic, point counting, and smoothness.

#include "maxgon/homforms.hpp"

#include <algorithm>
#include <cctype>

namespace maxgon {

namespace {

void check_same_field(const TernaryForm& a, const TernaryForm& b) {
  check(a.F == b.F, errc::mixed_fields, "forms over different fields");
}

// Invoke fn(i, j, index) over the degree-d monomial order.
template <typename Fn>
void for_monomials(u32 d, Fn&& fn) {
  u32 idx = 0;
  for (int i = static_cast<int>(d); i >= 0; --i)
    for (int j = static_cast<int>(d) - i; j >= 0; --j)
      fn(static_cast<u32>(i), static_cast<u32>(j), idx++);
}

std::vector<elem> powers_of(const FieldCtx& F, elem a, u32 n) {
  std::vector<elem> p(n + 1);
  p[0] = F.one();
  for (u32 i = 1; i <= n; ++i) p[i] = F.mul(p[i - 1], a);
  return p;
}

}  // namespace

u32 monomial_count(u32 d) { return (d + 1) * (d + 2) / 2; }

u32 monomial_index(u32 d, u32 i, u32 j) {
  check(i + j <= d, errc::bad_argument, "monomial exponents exceed the degree");
  return (d - i) * (d - i + 1) / 2 + (d - i - j);
}

TernaryForm make_form(const FieldCtx& F, u32 degree, std::vector<elem> coeffs) {
  check(coeffs.size() == monomial_count(degree), errc::bad_argument,
        "coefficient count does not match the degree");
  for (elem c : coeffs)
    check(c < F.size(), errc::bad_argument, "coefficient out of field range");
  return TernaryForm{&F, degree, std::move(coeffs)};
}

TernaryForm zero_form(const FieldCtx& F, u32 degree) {
  return TernaryForm{&F, degree, std::vector<elem>(monomial_count(degree), 0)};
}

TernaryForm monomial_form(const FieldCtx& F, u32 degree, u32 i, u32 j,
                          elem coeff) {
  TernaryForm f = zero_form(F, degree);
  check(coeff < F.size(), errc::bad_argument, "coefficient out of field range");
  f.c[monomial_index(degree, i, j)] = coeff;
  return f;
}

bool is_zero(const TernaryForm& f) {
  return std::all_of(f.c.begin(), f.c.end(), [](elem c) { return c == 0; });
}

TernaryForm add(const TernaryForm& a, const TernaryForm& b) {
  check_same_field(a, b);
  check(a.degree == b.degree, errc::bad_argument,
        "adding forms of different degrees");
  TernaryForm out = a;
  for (size_t i = 0; i < out.c.size(); ++i)
    out.c[i] = a.F->add(a.c[i], b.c[i]);
  return out;
}

TernaryForm scale(const TernaryForm& a, elem s) {
  TernaryForm out = a;
  for (elem& c : out.c) c = a.F->mul(c, s);
  return out;
}

TernaryForm mul(const TernaryForm& a, const TernaryForm& b) {
  check_same_field(a, b);
  const FieldCtx& F = *a.F;
  TernaryForm out = zero_form(F, a.degree + b.degree);
  for_monomials(a.degree, [&](u32 i1, u32 j1, u32 k1) {
    if (a.c[k1] == 0) return;
    for_monomials(b.degree, [&](u32 i2, u32 j2, u32 k2) {
      if (b.c[k2] == 0) return;
      u32 t = monomial_index(out.degree, i1 + i2, j1 + j2);
      out.c[t] = F.add(out.c[t], F.mul(a.c[k1], b.c[k2]));
    });
  });
  return out;
}

TernaryForm partial(const TernaryForm& f, int var) {
  check(var >= 0 && var <= 2, errc::bad_argument, "variable index out of range");
  check(f.degree >= 1, errc::bad_argument, "derivative of a constant form");
  const FieldCtx& F = *f.F;
  TernaryForm out = zero_form(F, f.degree - 1);
  for_monomials(f.degree, [&](u32 i, u32 j, u32 idx) {
    if (f.c[idx] == 0) return;
    u32 k = f.degree - i - j;
    u32 e = var == 0 ? i : var == 1 ? j : k;
    if (e == 0) return;
    elem coeff = F.mul(F.scalar(static_cast<i64>(e)), f.c[idx]);
    if (coeff == 0) return;
    u32 ti = var == 0 ? i - 1 : i;
    u32 tj = var == 1 ? j - 1 : j;
    u32 t = monomial_index(out.degree, ti, tj);
    out.c[t] = F.add(out.c[t], coeff);
  });
  return out;
}

std::array<TernaryForm, 3> partials(const TernaryForm& f) {
  return {partial(f, 0), partial(f, 1), partial(f, 2)};
}

TernaryForm embed_form(const TernaryForm& f, const FieldCtx& E) {
  if (&E == f.F) return f;
  TernaryForm out = f;
  out.F = &E;
  for (elem& c : out.c) c = E.embed_from(*f.F, c);
  return out;
}

elem evaluate(const TernaryForm& f, const ProjPoint& P) {
  const FieldCtx& E = *P.F;
  std::vector<elem> xp = powers_of(E, P.x, f.degree);
  std::vector<elem> yp = powers_of(E, P.y, f.degree);
  std::vector<elem> zp = powers_of(E, P.z, f.degree);
  elem acc = 0;
  for_monomials(f.degree, [&](u32 i, u32 j, u32 idx) {
    if (f.c[idx] == 0) return;
    elem c = &E == f.F ? f.c[idx] : E.embed_from(*f.F, f.c[idx]);
    elem term = E.mul(E.mul(c, xp[i]), E.mul(yp[j], zp[f.degree - i - j]));
    acc = E.add(acc, term);
  });
  return acc;
}

bool vanishes_at(const TernaryForm& f, const ClosedPoint& P) {
  return evaluate(f, P.rep) == 0;
}

TernaryForm substitute(const TernaryForm& f, const Pgl3Map& M) {
  check(M.F == f.F, errc::mixed_fields, "substitution matrix over a different field");
  const FieldCtx& F = *f.F;
  // powers of the images of x, y, z
  std::array<std::vector<TernaryForm>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    TernaryForm lin = make_form(F, 1, {M.m[3 * v], M.m[3 * v + 1], M.m[3 * v + 2]});
    pw[v].push_back(make_form(F, 0, {F.one()}));
    for (u32 e = 1; e <= f.degree; ++e) pw[v].push_back(mul(pw[v][e - 1], lin));
  }
  TernaryForm out = zero_form(F, f.degree);
  for_monomials(f.degree, [&](u32 i, u32 j, u32 idx) {
    if (f.c[idx] == 0) return;
    TernaryForm term = mul(mul(pw[0][i], pw[1][j]), pw[2][f.degree - i - j]);
    out = add(out, scale(term, f.c[idx]));
  });
  return out;
}

i64 count_points(const TernaryForm& f, u32 r) {
  check(r >= 1, errc::bad_argument, "extension degree must be >= 1");
  const FieldCtx& E = r == 1 ? *f.F : ext_field(*f.F, r);
  TernaryForm g = embed_form(f, E);
  u32 d = g.degree;
  u32 Q = E.size();
  // nonzero coefficients as (i, j, c) triples
  std::vector<std::array<u32, 3>> terms;
  for_monomials(d, [&](u32 i, u32 j, u32 idx) {
    if (g.c[idx] != 0) terms.push_back({i, j, g.c[idx]});
  });
  i64 cnt = 0;
  // chart z = 1: restrict to the univariate in y for each x = a
  std::vector<elem> ub(d + 1);
  for (u32 a = 0; a < Q; ++a) {
    std::vector<elem> ap = powers_of(E, a, d);
    std::fill(ub.begin(), ub.end(), 0);
    for (const auto& t : terms) ub[t[1]] = E.add(ub[t[1]], E.mul(t[2], ap[t[0]]));
    bool all0 = std::all_of(ub.begin(), ub.end(), [](elem c) { return c == 0; });
    if (all0) {
      cnt += Q;
      continue;
    }
    for (u32 b = 0; b < Q; ++b) {
      elem v = ub[d];
      for (int j = static_cast<int>(d) - 1; j >= 0; --j)
        v = E.add(E.mul(v, b), ub[j]);
      if (v == 0) ++cnt;
    }
  }
  // chart y = 1, z = 0: univariate in x
  std::fill(ub.begin(), ub.end(), 0);
  for (const auto& t : terms)
    if (t[0] + t[1] == d) ub[t[0]] = E.add(ub[t[0]], t[2]);
  for (u32 a = 0; a < Q; ++a) {
    elem v = ub[d];
    for (int j = static_cast<int>(d) - 1; j >= 0; --j)
      v = E.add(E.mul(v, a), ub[j]);
    if (v == 0) ++cnt;
  }
  // the point (1 : 0 : 0)
  if (g.c[monomial_index(d, d, 0)] == 0) ++cnt;
  return cnt;
}

CountsVector point_counts(const TernaryForm& f, u32 r_max) {
  CountsVector N(r_max);
  for (u32 r = 1; r <= r_max; ++r) N[r - 1] = count_points(f, r);
  return N;
}

CountsVector closed_point_counts(const TernaryForm& f, u32 d_max) {
  check(d_max >= 1, errc::bad_argument, "d_max must be >= 1");
  CountsVector N = point_counts(f, d_max);
  CountsVector a(d_max);
  for (u32 d = 1; d <= d_max; ++d) {
    i64 acc = 0;
    for (u32 r : divisors_of(d)) acc += moebius_mu(d / r) * N[r - 1];
    check(acc >= 0 && acc % d == 0, errc::non_integral_reconstruction,
          "internal inconsistency: closed-point counts are not a nonnegative "
          "multiple of the degree");
    a[d - 1] = acc / d;
  }
  return a;
}

std::vector<ClosedPoint> smooth_points_of_degree(const TernaryForm& f, u32 d) {
  check(d >= 1, errc::bad_argument, "degree must be >= 1");
  std::array<TernaryForm, 3> dfs = partials(f);
  std::vector<ClosedPoint> out;
  for (const ClosedPoint& cp : closed_points(*f.F, d)) {
    if (evaluate(f, cp.rep) != 0) continue;
    bool movable = false;
    for (const TernaryForm& df : dfs)
      if (evaluate(df, cp.rep) != 0) {
        movable = true;
        break;
      }
    if (movable) out.push_back(cp);
  }
  return out;
}

namespace {

// Rank of a dense row-major matrix over F by Gaussian elimination.
u32 matrix_rank(const FieldCtx& F, std::vector<elem>& m, u32 rows, u32 cols) {
  u32 rank = 0;
  for (u32 col = 0; col < cols && rank < rows; ++col) {
    u32 pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    for (u32 j = 0; j < cols; ++j)
      std::swap(m[rank * cols + j], m[pivot * cols + j]);
    elem inv = F.inv(m[rank * cols + col]);
    for (u32 j = col; j < cols; ++j)
      m[rank * cols + j] = F.mul(m[rank * cols + j], inv);
    for (u32 r = 0; r < rows; ++r) {
      if (r == rank) continue;
      elem factor = m[r * cols + col];
      if (factor == 0) continue;
      for (u32 j = col; j < cols; ++j)
        m[r * cols + j] = F.sub(m[r * cols + j], F.mul(factor, m[rank * cols + j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_smooth(const TernaryForm& f) {
  check(!is_zero(f) && f.degree >= 1, errc::bad_argument,
        "smoothness of a zero or constant form");
  check(f.degree <= 4, errc::degree_too_large,
        "smoothness test supports degree <= 4");
  u32 d = f.degree;
  if (d == 1) return true;
  const FieldCtx& F = *f.F;
  // The curve is singular iff f and its partials share a projective zero
  // over the algebraic closure. The forms generate an ideal containing the
  // full degree-D graded piece iff there is no common zero, with
  // D = d + 2(d-1) - 2 (sum of the three largest generator degrees minus 2),
  // and that containment is a rank condition invariant under field extension.
  std::vector<TernaryForm> gens{f};
  for (const TernaryForm& df : partials(f))
    if (!is_zero(df)) gens.push_back(df);
  // with fewer than three independent generators two plane curves always
  // intersect, so a shared zero exists
  if (gens.size() < 3) return false;
  u32 D = 3 * d - 4;
  u32 cols = monomial_count(D);
  u32 rows = 0;
  for (const TernaryForm& g : gens) rows += monomial_count(D - g.degree);
  std::vector<elem> m(static_cast<size_t>(rows) * cols, 0);
  u32 row = 0;
  for (const TernaryForm& g : gens) {
    for_monomials(D - g.degree, [&](u32 mi, u32 mj, u32) {
      for_monomials(g.degree, [&](u32 i, u32 j, u32 idx) {
        if (g.c[idx] == 0) return;
        m[static_cast<size_t>(row) * cols + monomial_index(D, mi + i, mj + j)] =
            g.c[idx];
      });
      ++row;
    });
  }
  return matrix_rank(F, m, rows, cols) == cols;
}

int quartic_gonality_class(const TernaryForm& f) {
  check(f.degree == 4, errc::bad_argument,
        "gonality classification applies to quartics");
  check(is_smooth(f), errc::not_smooth, "quartic is singular");
  return count_points(f, 1) > 0 ? 3 : 4;
}

// ---------------------------------------------------------------------------
// Literals
// ---------------------------------------------------------------------------

std::string form_to_string(const TernaryForm& f) {
  if (is_zero(f)) return "0";
  const FieldCtx& F = *f.F;
  std::string out;
  for_monomials(f.degree, [&](u32 i, u32 j, u32 idx) {
    if (f.c[idx] == 0) return;
    u32 k = f.degree - i - j;
    std::string mono;
    auto var = [&](char v, u32 e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var('x', i);
    var('y', j);
    var('z', k);
    std::string term;
    if (mono.empty()) {
      term = F.to_string(f.c[idx]);
      if (term.find('+') != std::string::npos ||
          term.find('-') != std::string::npos)
        term = "(" + term + ")";
    } else if (f.c[idx] == F.one()) {
      term = mono;
    } else {
      std::string cs = F.to_string(f.c[idx]);
      if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos)
        cs = "(" + cs + ")";
      term = cs + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  });
  return out;
}

namespace {

struct FormParser {
  const FieldCtx& F;
  const std::string& text;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at(char c) {
    skip();
    return pos < text.size() && text[pos] == c;
  }
  u32 parse_exponent() {
    // optional ^integer
    skip();
    if (pos >= text.size() || text[pos] != '^') return 1;
    ++pos;
    skip();
    check(pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])),
          errc::parse_error, "bad exponent in form literal: " + text);
    u32 e = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      e = e * 10 + (text[pos] - '0');
      check(e <= 64, errc::parse_error, "exponent too large in form literal");
      ++pos;
    }
    return e;
  }

  TernaryForm power(TernaryForm base, u32 e) {
    TernaryForm acc = make_form(F, 0, {F.one()});
    for (u32 i = 0; i < e; ++i) acc = mul(acc, base);
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return c == '(' || c == 'x' || c == 'y' || c == 'z' || c == F.symbol() ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  TernaryForm parse_factor() {
    skip();
    check(pos < text.size(), errc::parse_error, "truncated form literal: " + text);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      TernaryForm inner = parse_sum();
      check(at(')'), errc::parse_error, "missing ')' in form literal: " + text);
      ++pos;
      return power(std::move(inner), parse_exponent());
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos;
      u32 e = parse_exponent();
      u32 i = c == 'x' ? e : 0;
      u32 j = c == 'y' ? e : 0;
      return monomial_form(F, e, i, j, F.one());
    }
    if (c == F.symbol()) {
      ++pos;
      std::string lit(1, c);
      skip();
      if (pos < text.size() && text[pos] == '^') {
        size_t save = pos;
        ++pos;
        skip();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          digits += text[pos++];
        if (digits.empty()) {
          pos = save;
        } else {
          lit += "^" + digits;
        }
      }
      return make_form(F, 0, {F.parse(lit)});
    }
    check(std::isdigit(static_cast<unsigned char>(c)), errc::parse_error,
          "unexpected character in form literal: " + text);
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits += text[pos++];
    TernaryForm s = make_form(F, 0, {F.parse(digits)});
    return power(std::move(s), parse_exponent());
  }

  TernaryForm parse_product() {
    TernaryForm acc = parse_factor();
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        acc = mul(acc, parse_factor());
      } else if (starts_factor()) {
        acc = mul(acc, parse_factor());
      } else {
        return acc;
      }
    }
  }

  TernaryForm parse_sum() {
    TernaryForm acc = parse_product();
    for (;;) {
      skip();
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        bool minus = text[pos] == '-';
        ++pos;
        TernaryForm t = parse_product();
        if (minus) t = scale(t, F.scalar(-1));
        check(t.degree == acc.degree || is_zero(t) || is_zero(acc),
              errc::parse_error, "inhomogeneous form literal: " + text);
        if (is_zero(acc) && acc.degree != t.degree) acc = std::move(t);
        else if (is_zero(t) && t.degree != acc.degree) {
          // adding zero of a mismatched nominal degree: keep acc
        } else {
          acc = add(acc, t);
        }
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

TernaryForm parse_form(const FieldCtx& F, u32 degree, const std::string& text) {
  check(F.symbol() != 'x' && F.symbol() != 'y' && F.symbol() != 'z',
        errc::bad_argument, "field symbol collides with form variables");
  FormParser p{F, text};
  TernaryForm v = p.parse_sum();
  p.skip();
  check(p.pos == text.size(), errc::parse_error,
        "trailing characters in form literal: " + text);
  if (is_zero(v)) return zero_form(F, degree);
  if (v.degree != degree) {
    check(v.degree < degree, errc::parse_error,
          "form literal degree exceeds the requested degree: " + text);
    fail(errc::parse_error, "form literal is not homogeneous of the requested "
                            "degree: " + text);
  }
  return v;
}

std::string form_to_digits(const TernaryForm& f) {
  const FieldCtx& F = *f.F;
  std::string out;
  if (F.p() <= 9) {
    for (elem c : f.c)
      for (int i = static_cast<int>(F.k()) - 1; i >= 0; --i)
        out += static_cast<char>('0' + F.digit(c, i));
  } else {
    for (size_t i = 0; i < f.c.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(f.c[i]);
    }
  }
  return out;
}

TernaryForm form_from_digits(const FieldCtx& F, u32 degree,
                             const std::string& text) {
  u32 n = monomial_count(degree);
  std::vector<elem> coeffs;
  coeffs.reserve(n);
  if (text.find(',') != std::string::npos || F.p() > 9) {
    size_t pos = 0;
    while (pos < text.size()) {
      size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      std::string tok = text.substr(pos, next - pos);
      check(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos,
            errc::parse_error, "bad coefficient code in digit literal: " + tok);
      u64 code = std::stoull(tok);
      check(code < F.size(), errc::parse_error,
            "coefficient code out of range in digit literal: " + tok);
      coeffs.push_back(static_cast<elem>(code));
      pos = next + 1;
    }
  } else {
    check(text.size() == static_cast<size_t>(n) * F.k(), errc::parse_error,
          "digit literal length does not match the degree");
    for (u32 ci = 0; ci < n; ++ci) {
      u32 code = 0;
      for (u32 i = 0; i < F.k(); ++i) {
        char ch = text[static_cast<size_t>(ci) * F.k() + i];
        check(ch >= '0' && ch < static_cast<char>('0' + F.p()), errc::parse_error,
              "bad digit in form literal");
        code = code * F.p() + static_cast<u32>(ch - '0');
      }
      coeffs.push_back(code);
    }
  }
  check(coeffs.size() == n, errc::parse_error,
        "coefficient count does not match the degree");
  return make_form(F, degree, std::move(coeffs));
}

}  // namespace maxgon
