#include <cstdint>
#include <vector>

#include "doctest.h"

#include "fptlab/elliptic.hpp"
#include "fptlab/errors.hpp"
#include "fptlab/field.hpp"
#include "support/oracles.hpp"

using namespace fptlab;

TEST_CASE("curve construction expands the Legendre product") {
  Field f3 = Field::prime(3);
  LegendreCurve c = make_curve(f3.element(2));
  // y^2 z - x^3 + (1+2) x^2 z - 2 x z^2; the x^2 z term dies mod 3
  CHECK(c.cubic.term_count() == 3);
  CHECK(c.cubic.coefficient_of(ExpVec(0, 2, 1)) == f3.one());
  CHECK(c.cubic.coefficient_of(ExpVec(3, 0, 0)) == f3.element(2));
  CHECK(c.cubic.coefficient_of(ExpVec(2, 0, 1)).is_zero());
  CHECK(c.cubic.coefficient_of(ExpVec(1, 0, 2)) == f3.one());
  CHECK(c.cubic.homogeneous_degree() == 3);

  Field f4 = Field::gf4();
  FieldElement t = f4.element(0, 1);
  LegendreCurve c2 = make_curve(t);
  CHECK(c2.cubic.term_count() == 4);
  CHECK(c2.cubic.coefficient_of(ExpVec(0, 2, 1)) == f4.one());
  CHECK(c2.cubic.coefficient_of(ExpVec(3, 0, 0)) == f4.one());  // -1 = 1
  CHECK(c2.cubic.coefficient_of(ExpVec(2, 0, 1)) == f4.one() + t);
  CHECK(c2.cubic.coefficient_of(ExpVec(1, 0, 2)) == t);

  // the polynomial really is y^2 z - x (x - z) (x - a z): spot-check by
  // evaluating both forms over all of F_7^3 for a = 3
  Field f7 = Field::prime(7);
  FieldElement a = f7.element(3);
  LegendreCurve c3 = make_curve(a);
  for (const FieldElement& x : f7.elements())
    for (const FieldElement& y : f7.elements())
      for (const FieldElement& z : f7.elements()) {
        FieldElement direct = y * y * z - x * (x - z) * (x - a * z);
        FieldElement expanded = f7.zero();
        for (const auto& [key, coef] : c3.cubic.terms()) {
          ExpVec k = ExpVec::unpack(key);
          expanded += coef * x.pow(k.kx) * y.pow(k.ky) * z.pow(k.kz);
        }
        REQUIRE(direct == expanded);
      }
}

TEST_CASE("degenerate parameters are rejected") {
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(make_curve(f5.element(0)), DegenerateParameter);
  CHECK_THROWS_AS(make_curve(f5.element(1)), DegenerateParameter);
  CHECK_THROWS_AS(make_curve(Field::gf4().element(1, 0)), DegenerateParameter);
  CHECK_THROWS_AS(make_curve(FieldElement()), Error);  // default element has no field
}

TEST_CASE("classification by the Hasse value") {
  Field f7 = Field::prime(7);
  Classification super = classify(make_curve(f7.element(6)));
  CHECK(super.kind == CurveClass::Supersingular);
  CHECK(super.hasse_value.is_zero());

  Field f5 = Field::prime(5);
  Classification ord = classify(make_curve(f5.element(2)));
  CHECK(ord.kind == CurveClass::Ordinary);
  CHECK(ord.hasse_value == f5.element(3));  // H_2(2) = 13

  CHECK_THROWS_AS(classify(make_curve(Field::gf4().element(0, 1))), CharTwoUnsupported);
}

TEST_CASE("supersingular parameter lists") {
  Field f3 = Field::prime(3);
  std::vector<FieldElement> s3 = supersingular_values(f3);
  REQUIRE(s3.size() == 1);
  CHECK(s3[0] == f3.element(2));

  Field f7 = Field::prime(7);
  std::vector<FieldElement> s7 = supersingular_values(f7);
  REQUIRE(s7.size() == 3);
  CHECK(s7[0] == f7.element(2));
  CHECK(s7[1] == f7.element(4));
  CHECK(s7[2] == f7.element(6));

  CHECK(supersingular_values(Field::prime(5)).empty());  // H_2 has no roots in F_5
  CHECK_THROWS_AS(supersingular_values(Field::prime(2)), CharTwoUnsupported);
}

TEST_CASE("quadratic extensions split the Hasse polynomial") {
  for (uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    Field k = Field::quadratic(p);
    std::vector<FieldElement> values = supersingular_values(k);
    CHECK(values.size() == (p - 1) / 2);
    for (const FieldElement& a : values) {
      CHECK(!a.is_zero());
      CHECK(!a.is_one());
      CHECK(classify(make_curve(a)).kind == CurveClass::Supersingular);
    }
  }
}

TEST_CASE("critical coefficient matches a hand expansion") {
  Field f5 = Field::prime(5);
  FieldElement a = f5.element(2);
  // coefficient of x^4 z^2 in f_2^2: (3 x^2 z)^2 + 2 (-x^3)(-2 x z^2) = 4 + 4 = 3
  CHECK(critical_coefficient(2, 0, 2, a) == f5.element(3));

  oracle::TermMap sq = oracle::naive_pow(oracle::to_map(make_curve(a).cubic), 2, f5.one());
  CHECK(sq.at({4, 0, 2}) == f5.element(3));

  // the x^{2m} y^{2n} z^{n+m} coefficients of naive powers, all splits
  for (uint64_t big_n = 1; big_n <= 5; ++big_n) {
    oracle::TermMap pw = oracle::naive_pow(oracle::to_map(make_curve(a).cubic), big_n, f5.one());
    for (uint64_t n = 0; n <= big_n; ++n) {
      uint64_t m = big_n - n;
      auto it = pw.find({static_cast<uint32_t>(2 * m), static_cast<uint32_t>(2 * n),
                         static_cast<uint32_t>(n + m)});
      FieldElement got = it == pw.end() ? f5.zero() : it->second;
      REQUIRE(critical_coefficient(big_n, n, m, a) == got);
    }
  }

  CHECK_THROWS_AS(critical_coefficient(4, 1, 2, a), BadPartition);
}

TEST_CASE("critical coefficient embeds into quadratic fields") {
  Field f9 = Field::quadratic(3);
  FieldElement a = f9.element(1, 1);
  oracle::TermMap sq = oracle::naive_pow(oracle::to_map(make_curve(a).cubic), 3, f9.one());
  for (uint64_t n = 0; n <= 3; ++n) {
    uint64_t m = 3 - n;
    auto it = sq.find({static_cast<uint32_t>(2 * m), static_cast<uint32_t>(2 * n),
                       static_cast<uint32_t>(n + m)});
    FieldElement got = it == sq.end() ? f9.zero() : it->second;
    CHECK(critical_coefficient(3, n, m, a) == got);
  }
}

TEST_CASE("symbolic expansion confirms the coefficient formula") {
  for (uint64_t p : {3ULL, 5ULL, 7ULL}) CHECK(verify_technical_lemma(Field::prime(p), 6));
  CHECK(verify_technical_lemma(Field::prime(2), 6));  // signs collapse but the identity survives
  CHECK_THROWS_AS(verify_technical_lemma(Field::quadratic(3), 3), FieldMismatch);
}

TEST_CASE("curve class names") {
  CHECK(curve_class_name(CurveClass::Ordinary) == "ordinary");
  CHECK(curve_class_name(CurveClass::Supersingular) == "supersingular");
  CHECK(curve_class_name(CurveClass::Char2) == "char2");
}
