#include "doctest.h"

#include "maxgon/zpoly.hpp"
#include "maxgon/util.hpp"

using namespace maxgon;

namespace {

// Sylvester-matrix resultant oracle: build the (m+n) x (m+n) matrix of
// res(f, g) = det Syl(g, f) and evaluate with fraction-free (Bareiss)
// elimination. Independent of the subresultant code under test.
bigint sylvester_det_oracle(const ZPoly& f, const ZPoly& g) {
  int m = g.deg(), n = f.deg();  // det Syl(A=g, B=f)
  int dim = m + n;
  if (dim == 0) return 1;
  std::vector<std::vector<bigint>> M(dim, std::vector<bigint>(dim, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = g[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = f[n - j];
  bigint prev = 1;
  int sign = 1;
  for (int r = 0; r < dim; ++r) {
    int piv = -1;
    for (int i = r; i < dim; ++i)
      if (M[i][r] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != r) {
      std::swap(M[piv], M[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < dim; ++i)
      for (int j = r + 1; j < dim; ++j)
        M[i][j] = (M[r][r] * M[i][j] - M[i][r] * M[r][j]) / prev;
    prev = M[r][r];
  }
  return sign * M[dim - 1][dim - 1];
}

ZPoly random_poly(rng& r, int deg, int coef_range) {
  std::vector<bigint> c(deg + 1);
  for (int i = 0; i < deg; ++i)
    c[i] = static_cast<i64>(r.below(2 * coef_range + 1)) - coef_range;
  c[deg] = static_cast<i64>(r.below(coef_range)) + 1;  // nonzero leading
  return ZPoly(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic and evaluation") {
  ZPoly f{-1, 0, 1};  // T^2 - 1
  CHECK(f == ZPoly{1, 1} * ZPoly{-1, 1});
  CHECK(f.deg() == 2);
  CHECK(f.eval(3) == 8);
  CHECK((f + ZPoly{1}) == ZPoly{0, 0, 1});
  CHECK((f - f).is_zero());
  CHECK(f.derivative() == ZPoly{0, 2});
  CHECK(ZPoly{5}.derivative().is_zero());
  CHECK((-f) == ZPoly{1, 0, -1});
  CHECK(ZPoly::monomial(3) == ZPoly{0, 0, 0, 1});
  CHECK(f[0] == -1);
  CHECK(f[7] == 0);
}

TEST_CASE("parsing plain sums, products, and powers") {
  CHECK(parse_zpoly("T^3-3*T^2-3*T+10") == ZPoly{10, -3, -3, 1});
  CHECK(parse_zpoly("T^3 - 3T^2 - 3T + 10") == ZPoly{10, -3, -3, 1});
  CHECK(parse_zpoly("(T-2)(T^2-T-5)") == ZPoly{10, -3, -3, 1});
  CHECK(parse_zpoly("T-10") == ZPoly{-10, 1});
  CHECK(parse_zpoly("(T-10)^3") == ZPoly{-10, 1} * ZPoly{-10, 1} * ZPoly{-10, 1});
  ZPoly q{1, 10, -6, -2, 1};
  CHECK(parse_zpoly("(T+1)(T^4-2T^3-6T^2+10T+1)^2") == ZPoly{1, 1} * q * q);
  CHECK(parse_zpoly("7") == ZPoly{7});
  CHECK(parse_zpoly("-T") == ZPoly{0, -1});
  CHECK_THROWS_AS(parse_zpoly(""), error);
  CHECK_THROWS_AS(parse_zpoly("T^"), error);
  CHECK_THROWS_AS(parse_zpoly("(T+1"), error);
  CHECK_THROWS_AS(parse_zpoly("T++1"), error);
}

TEST_CASE("to_string round-trips through the parser") {
  CHECK(ZPoly{10, -3, -3, 1}.to_string() == "T^3 - 3T^2 - 3T + 10");
  CHECK(ZPoly{}.to_string() == "0");
  CHECK(ZPoly{0, -1}.to_string() == "-T");
  rng r;
  for (int i = 0; i < 50; ++i) {
    ZPoly f = random_poly(r, 1 + static_cast<int>(r.below(6)), 30);
    CHECK(parse_zpoly(f.to_string()) == f);
  }
}

TEST_CASE("exact division and divisibility") {
  rng r;
  for (int i = 0; i < 100; ++i) {
    ZPoly f = random_poly(r, static_cast<int>(r.below(5)), 9);
    ZPoly g = random_poly(r, static_cast<int>(r.below(4)), 9);
    CHECK(div_exact(f * g, g) == f);
    CHECK(divides(g, f * g));
  }
  CHECK_THROWS_AS(div_exact(ZPoly{1, 0, 1}, ZPoly{1, 1}), error);  // T^2+1 by T+1
  CHECK(!divides(ZPoly{1, 1}, ZPoly{1, 0, 1}));
  CHECK(divides(ZPoly{1, 1}, ZPoly{}));
  CHECK_THROWS_AS(div_exact(ZPoly{1}, ZPoly{}), error);
}

TEST_CASE("content, primitive part, gcd, squarefree part") {
  CHECK(content(ZPoly{6, -9, 12}) == 3);
  CHECK(primitive_part(ZPoly{6, -9, 12}) == ZPoly{2, -3, 4});
  CHECK(primitive_part(ZPoly{0, 0, -2}) == ZPoly{0, 0, 1});  // sign normalized
  ZPoly h{-1, 1};                                            // T - 1
  CHECK(gcd_poly(h * ZPoly{3, 1}, h * ZPoly{5, 1}) == h);
  CHECK(gcd_poly(ZPoly{1, 1}, ZPoly{1, 0, 1}) == ZPoly{1});
  CHECK(squarefree_part(h * h * ZPoly{2, 1}) == h * ZPoly{2, 1});
  CHECK(squarefree_part(h * h * h) == h);
  rng r;
  for (int i = 0; i < 60; ++i) {
    ZPoly f = random_poly(r, 1 + static_cast<int>(r.below(3)), 5);
    ZPoly g = random_poly(r, 1 + static_cast<int>(r.below(3)), 5);
    ZPoly c = random_poly(r, 1 + static_cast<int>(r.below(2)), 5);
    ZPoly d = gcd_poly(f * c, g * c);
    CHECK(divides(primitive_part(c), d));  // common factor survives
    CHECK(divides(d, f * c));
    CHECK(divides(d, g * c));
  }
}

TEST_CASE("resultant fixtures") {
  // convention: res(T-a, T-b) = b - a
  for (i64 a : {-3, 0, 2})
    for (i64 b : {-1, 4}) CHECK(resultant(ZPoly{-a, 1}, ZPoly{-b, 1}) == b - a);
  CHECK(resultant(ZPoly{1, 1}, ZPoly{1, 10, -6, -2, 1}) == -12);
  ZPoly h{10, -3, -3, 1};
  CHECK(resultant(h, h) == 0);
  // multiplicativity in the second argument over monic factors
  ZPoly f{3, 1, 2}, g1{-1, 0, 1}, g2{2, -1, 0, 1};
  CHECK(resultant(f, g1 * g2) == resultant(f, g1) * resultant(f, g2));
}

TEST_CASE("resultant matches the sylvester determinant oracle") {
  rng r;
  for (int i = 0; i < 200; ++i) {
    ZPoly f = random_poly(r, 1 + static_cast<int>(r.below(5)), 9);
    ZPoly g = random_poly(r, 1 + static_cast<int>(r.below(5)), 9);
    CAPTURE(f.to_string());
    CAPTURE(g.to_string());
    CHECK(resultant(f, g) == sylvester_det_oracle(f, g));
  }
  // degenerate degrees
  CHECK(resultant(ZPoly{5}, ZPoly{2, 0, 1}) == 25);
  CHECK(resultant(ZPoly{2, 0, 1}, ZPoly{5}) == 25);
  CHECK_THROWS_AS(resultant(ZPoly{}, ZPoly{1, 1}), error);
}

TEST_CASE("surd point signs") {
  using S = SurdPoint;
  CHECK(sign_of(S{0, 0, 2}) == 0);
  CHECK(sign_of(S{1, -1, 2}) == -1);   // 1 - sqrt(2)
  CHECK(sign_of(S{3, -2, 2}) == 1);    // 3 - 2*sqrt(2) = 0.17...
  CHECK(sign_of(S{-3, 2, 2}) == -1);
  CHECK(sign_of(S{2, -2, 1}) == 0);    // 2 - 2*sqrt(1)
  CHECK(sign_of(S{bigrat(-1, 2), 1, 3}) == 1);  // sqrt(3) - 1/2
  CHECK(sign_of(S{0, -3, 5}) == -1);
}

TEST_CASE("exact polynomial signs at surd points") {
  ZPoly f{-2, 0, 1};  // T^2 - 2
  CHECK(sign_at(f, SurdPoint{0, 1, 2}) == 0);
  CHECK(sign_at(f, SurdPoint{0, 2, 2}) == 1);
  CHECK(sign_at(f, SurdPoint{1, 0, 0}) == -1);
  ZPoly g{10, -3, -3, 1};
  CHECK(sign_at(g, SurdPoint{0, 2, 2}) == 1);  // g(2*sqrt(2)) = 10*sqrt(2) - 14 > 0
  CHECK(sign_at(g, SurdPoint{0, 0, 0}) == 1);               // g(0) = 10
  CHECK(sign_at(g, SurdPoint{2, 0, 0}) == 0);               // g(2) = 0
}

TEST_CASE("sturm root counting on rational and surd intervals") {
  ZPoly f = ZPoly{-1, 1} * ZPoly{-2, 1} * ZPoly{-3, 1};  // roots 1, 2, 3
  auto rat = [](i64 v) { return SurdPoint{v, 0, 0}; };
  CHECK(count_distinct_roots_in(f, rat(0), rat(10)) == 3);
  CHECK(count_distinct_roots_in(f, rat(1), rat(3)) == 2);  // (1, 3] excludes 1
  CHECK(count_distinct_roots_in(f, rat(-5), rat(0)) == 0);
  // interval (-2*sqrt(2), 2*sqrt(2)] contains roots 1 and 2 only
  SurdPoint lo{0, -2, 2}, hi{0, 2, 2};
  CHECK(count_distinct_roots_in(f, lo, hi) == 2);
  // T^2 - 8 has roots exactly at the endpoints: only +2*sqrt(2) is inside (lo, hi]
  CHECK(count_distinct_roots_in(ZPoly{-8, 0, 1}, lo, hi) == 1);
  // multiplicities collapse to distinct roots
  ZPoly m = ZPoly{-1, 1} * ZPoly{-1, 1} * ZPoly{-5, 1};
  CHECK(count_distinct_roots_in(m, rat(0), rat(2)) == 1);
  CHECK(count_distinct_roots_in(m, rat(0), rat(6)) == 2);
}
