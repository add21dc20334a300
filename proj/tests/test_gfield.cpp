#include "doctest.h"

#include <set>

#include "maxgon/gfield.hpp"
#include "support/naive.hpp"

using namespace maxgon;

namespace {

// cross-check every binary operation against the digit-vector reference field
void check_against_naive(const FieldCtx& F) {
  naive::Field N(F.p(), F.k(), F.modulus());
  REQUIRE(N.size == F.size());
  for (elem a = 0; a < F.size(); ++a) {
    CHECK(F.neg(a) == N.neg(a));
    CHECK(F.frobenius(a) == N.pow(a, F.p()));
    for (elem b = 0; b < F.size(); ++b) {
      CHECK(F.add(a, b) == N.add(a, b));
      CHECK(F.mul(a, b) == N.mul(a, b));
    }
    if (a != 0) {
      CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.inv(a) == N.inv(a));
      CHECK(F.mult_order(a) == N.mult_order(a));
    }
  }
  // pow against repeated multiplication, including negative exponents
  for (elem a = 1; a < F.size(); ++a) {
    CHECK(F.pow(a, 0) == F.one());
    CHECK(F.pow(a, 5) == N.pow(a, 5));
    CHECK(F.mul(F.pow(a, -3), N.pow(a, 3)) == F.one());
  }
}

}  // namespace

TEST_CASE("conway polynomials match the standard table") {
  using V = std::vector<u32>;
  CHECK(conway_polynomial(2, 1) == V{1, 1});           // x + 1
  CHECK(conway_polynomial(3, 1) == V{1, 1});           // x - 2
  CHECK(conway_polynomial(5, 1) == V{3, 1});           // x - 2
  CHECK(conway_polynomial(7, 1) == V{4, 1});           // x - 3
  CHECK(conway_polynomial(2, 2) == V{1, 1, 1});        // x^2 + x + 1
  CHECK(conway_polynomial(2, 3) == V{1, 1, 0, 1});     // x^3 + x + 1
  CHECK(conway_polynomial(2, 4) == V{1, 1, 0, 0, 1});  // x^4 + x + 1
  CHECK(conway_polynomial(2, 5) == V{1, 0, 1, 0, 0, 1});  // x^5 + x^2 + 1
  CHECK(conway_polynomial(3, 2) == V{2, 2, 1});        // x^2 + 2x + 2
  CHECK(conway_polynomial(3, 3) == V{1, 2, 0, 1});     // x^3 + 2x + 1
  CHECK(conway_polynomial(5, 2) == V{2, 4, 1});        // x^2 + 4x + 2
}

TEST_CASE("arithmetic agrees with the digit-vector reference") {
  for (auto [p, k] : {std::pair<u32, u32>{2, 1},
                      {3, 1},
                      {7, 1},
                      {11, 1},
                      {2, 2},
                      {2, 3},
                      {2, 4},
                      {3, 2},
                      {3, 3},
                      {5, 2}}) {
    CAPTURE(p);
    CAPTURE(k);
    check_against_naive(make_field(p, k));
  }
}

TEST_CASE("generator and log/exp tables") {
  for (auto [p, k] : {std::pair<u32, u32>{2, 4}, {3, 2}, {5, 1}, {3, 3}}) {
    const FieldCtx& F = make_field(p, k);
    CHECK(F.mult_order(F.gen()) == F.size() - 1);
    if (k >= 2) CHECK(F.gen() == p);  // x itself is primitive for default moduli
    std::set<elem> seen;
    for (u32 i = 0; i + 1 < F.size(); ++i) {
      elem a = F.exp(i);
      CHECK(F.log(a) == i);
      seen.insert(a);
    }
    CHECK(seen.size() == F.size() - 1);
  }
}

TEST_CASE("contexts are interned") {
  const FieldCtx& a = make_field(2, 3);
  const FieldCtx& b = make_field(2, 3);
  CHECK(&a == &b);
  CHECK(a.same(b));
  const FieldCtx& c = ext_field(make_field(2, 1), 3);
  CHECK(c.same(a));
  std::vector<u32> other_mod = {1, 0, 1, 1};  // x^3 + x^2 + 1, also irreducible
  const FieldCtx& d = make_field(2, 3, &other_mod);
  CHECK(!d.same(a));
  CHECK(d.size() == 8);
}

TEST_CASE("field size cap") {
  CHECK_THROWS_AS(make_field(2, 17), error);
  try {
    make_field(3, 11);
  } catch (const error& e) {
    CHECK(e.code() == errc::field_too_large);
  }
  // the largest fields the pipeline needs stay constructible
  CHECK(make_field(2, 16).size() == 65536);
  CHECK(make_field(29, 3).size() == 24389);
}

TEST_CASE("bad moduli are rejected") {
  std::vector<u32> reducible = {1, 0, 1};  // x^2 + 1 = (x+1)^2 over F_2
  CHECK_THROWS_AS(make_field(2, 2, &reducible), error);
  std::vector<u32> nonmonic = {1, 1, 2};
  CHECK_THROWS_AS(make_field(3, 2, &nonmonic), error);
  std::vector<u32> wrong_degree = {1, 1};
  CHECK_THROWS_AS(make_field(3, 2, &wrong_degree), error);
}

TEST_CASE("custom modulus with non-primitive x still gets a generator") {
  std::vector<u32> mod = {1, 0, 1};  // x^2 + 1 over F_3: irreducible, x has order 4
  const FieldCtx& F = make_field(3, 2, &mod);
  CHECK(F.mult_order(F.gen()) == 8);
  CHECK(F.gen() == 4);  // x + 1, the least element of full order
  check_against_naive(F);
}

TEST_CASE("frobenius and subfield structure") {
  const FieldCtx& F2 = make_field(2, 1);
  const FieldCtx& F4 = make_field(2, 2);
  const FieldCtx& F16 = make_field(2, 4);
  // degree-over partitions F_16 over F_2 as 2 + 2 + 12 elements
  int d1 = 0, d2 = 0, d4 = 0;
  for (elem a = 0; a < 16; ++a) {
    int d = F16.degree_over(a, F2);
    if (d == 1) ++d1;
    if (d == 2) ++d2;
    if (d == 4) ++d4;
  }
  CHECK(d1 == 2);
  CHECK(d2 == 2);
  CHECK(d4 == 12);
  int in_f4 = 0;
  for (elem a = 0; a < 16; ++a)
    if (F16.in_subfield(a, F4)) ++in_f4;
  CHECK(in_f4 == 4);
  // frobenius over F_4 fixes exactly the embedded F_4
  for (elem a = 0; a < 16; ++a) {
    bool fixed = F16.frobenius_over(a, F4) == a;
    CHECK(fixed == F16.in_subfield(a, F4));
  }
}

TEST_CASE("subfield embeddings are ring homomorphisms") {
  struct Tow {
    u32 p, k, r;
  };
  for (auto t : {Tow{2, 1, 4}, Tow{2, 2, 2}, Tow{2, 2, 3}, Tow{3, 1, 2}, Tow{3, 2, 2}, Tow{5, 1, 2}}) {
    const FieldCtx& S = make_field(t.p, t.k);
    const FieldCtx& B = ext_field(S, t.r);
    CAPTURE(t.p);
    CAPTURE(t.k);
    CAPTURE(t.r);
    CHECK(B.size() == [&] {
      u32 s = 1;
      for (u32 i = 0; i < t.r; ++i) s *= S.size();
      return s;
    }());
    std::set<elem> image;
    for (elem a = 0; a < S.size(); ++a) {
      elem ea = B.embed_from(S, a);
      image.insert(ea);
      CHECK(B.frobenius_over(ea, S) == ea);  // image lies in the subfield
      for (elem b = 0; b < S.size(); ++b) {
        CHECK(B.embed_from(S, S.add(a, b)) == B.add(ea, B.embed_from(S, b)));
        CHECK(B.embed_from(S, S.mul(a, b)) == B.mul(ea, B.embed_from(S, b)));
      }
    }
    CHECK(image.size() == S.size());  // injective
    CHECK(B.embed_from(S, S.one()) == B.one());
    // the polynomial generator maps to the norm-compatible power
    if (S.k() >= 2)
      CHECK(B.embed_from(S, S.p()) ==
            B.pow(B.gen(), static_cast<i64>((B.size() - 1) / (S.size() - 1))));
  }
}

TEST_CASE("towers of default fields embed compatibly") {
  const FieldCtx& F4 = make_field(2, 2);
  const FieldCtx& F16 = make_field(2, 4);
  const FieldCtx& F256 = make_field(2, 8);
  for (elem a = 0; a < 4; ++a)
    CHECK(F256.embed_from(F16, F16.embed_from(F4, a)) == F256.embed_from(F4, a));
  const FieldCtx& F3 = make_field(3, 1);
  const FieldCtx& F9 = make_field(3, 2);
  const FieldCtx& F81 = make_field(3, 4);
  for (elem a = 0; a < 3; ++a)
    CHECK(F81.embed_from(F9, F9.embed_from(F3, a)) == F81.embed_from(F3, a));
}

TEST_CASE("incompatible embeddings are rejected") {
  const FieldCtx& F4 = make_field(2, 2);
  const FieldCtx& F8 = make_field(2, 3);
  const FieldCtx& F9 = make_field(3, 2);
  CHECK_THROWS_AS(F8.embed_from(F4, 1), error);
  CHECK_THROWS_AS(F9.embed_from(F4, 1), error);
  CHECK_THROWS_AS(F8.frobenius_over(1, F4), error);
}

TEST_CASE("printing and parsing round-trip") {
  const FieldCtx& F8 = make_field(2, 3);
  CHECK(F8.symbol() == 't');
  CHECK(F8.to_string(0) == "0");
  CHECK(F8.to_string(1) == "1");
  CHECK(F8.to_string(2) == "t");
  CHECK(F8.to_string(6) == "t^2+t");
  CHECK(F8.to_string(7) == "t^2+t+1");
  for (elem a = 0; a < 8; ++a) CHECK(F8.parse(F8.to_string(a)) == a);

  const FieldCtx& F16 = make_field(2, 4);
  CHECK(F16.symbol() == 's');  // conventional letter for this field
  CHECK(F16.to_string(5) == "s^2+1");
  for (elem a = 0; a < 16; ++a) CHECK(F16.parse(F16.to_string(a)) == a);

  const FieldCtx& F9 = make_field(3, 2);
  CHECK(F9.to_string(7) == "2*t+1");
  for (elem a = 0; a < 9; ++a) CHECK(F9.parse(F9.to_string(a)) == a);
  CHECK(F9.parse("t^2") == F9.mul(3, 3));
  CHECK(F9.parse("-1") == F9.neg(F9.one()));
  CHECK(F9.parse(" 2 * t + 1 ") == 7);

  const FieldCtx& F7 = make_field(7, 1);
  CHECK(F7.to_string(5) == "5");
  CHECK(F7.parse("12") == 5);
  CHECK(F7.parse("-2") == 5);
  CHECK_THROWS_AS(F7.parse("t"), error);
  CHECK_THROWS_AS(F8.parse(""), error);
  CHECK_THROWS_AS(F8.parse("t^"), error);
  CHECK_THROWS_AS(F8.parse("1++1"), error);
}

TEST_CASE("field specifier parsing") {
  CHECK(parse_field("2^3").size() == 8);
  CHECK(parse_field("8").size() == 8);
  CHECK(parse_field("9").p() == 3);
  CHECK(parse_field("9").k() == 2);
  CHECK(parse_field("17").k() == 1);
  CHECK_THROWS_AS(parse_field("6"), error);
  CHECK_THROWS_AS(parse_field("banana"), error);
  CHECK_THROWS_AS(parse_field("4^2"), error);  // base must be prime
}

TEST_CASE("digit access") {
  const FieldCtx& F27 = make_field(3, 3);
  elem a = F27.from_digits({2, 0, 1});
  CHECK(a == 2 + 9);
  CHECK(F27.digit(a, 0) == 2);
  CHECK(F27.digit(a, 1) == 0);
  CHECK(F27.digit(a, 2) == 1);
  CHECK(F27.digits(a) == std::vector<u32>{2, 0, 1});
  CHECK(F27.scalar(5) == 2);
  CHECK(F27.scalar(-1) == 2);
  CHECK(F27.scalar(3) == 0);
}
