#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"

#include "fptlab/errors.hpp"
#include "fptlab/field.hpp"

using namespace fptlab;

TEST_CASE("prime field arithmetic") {
  Field f7 = Field::prime(7);
  CHECK(f7.element(3) * f7.element(5) == f7.one());
  CHECK(f7.element(4) + f7.element(5) == f7.element(2));
  CHECK(f7.element(2) - f7.element(5) == f7.element(4));
  CHECK(-f7.element(3) == f7.element(4));
  CHECK(f7.element(9) == f7.element(2));  // constructor reduces
  CHECK(f7.from_int(-1) == f7.element(6));
  CHECK(f7.from_int(-15) == f7.element(6));
  CHECK(f7.element(3).pow(0) == f7.one());
  CHECK(f7.element(3).pow(6) == f7.one());
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(Field::prime(4), CompositeModulus);
  CHECK_THROWS_AS(Field::prime(1), CompositeModulus);
  CHECK_THROWS_AS(Field::prime(91), CompositeModulus);  // 7 * 13
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_THROWS_AS(Field::quadratic(2), UnsupportedCharacteristic);
  CHECK_THROWS_AS(Field::quadratic(6), CompositeModulus);
}

TEST_CASE("quadratic extension moduli pick the least non-residue") {
  CHECK(Field::quadratic(3).nonresidue() == 2);
  CHECK(Field::quadratic(5).nonresidue() == 2);
  CHECK(Field::quadratic(7).nonresidue() == 3);
  CHECK(Field::quadratic(11).nonresidue() == 2);
  CHECK(Field::quadratic(13).nonresidue() == 2);

  Field f9 = Field::quadratic(3);
  FieldElement t = f9.element(0, 1);
  CHECK(t * t == f9.element(2));  // t^2 = 2
  CHECK((f9.element(1, 1) * f9.element(1, 2)) == f9.element(1 + 2 * 2, 0));  // (1+t)(1+2t) = 5 + 3t + 2t^2
}

TEST_CASE("gf4 multiplies modulo t^2 + t + 1") {
  Field f4 = Field::gf4();
  FieldElement t = f4.element(0, 1);
  CHECK(t * t == f4.element(1, 1));
  CHECK(t.inverse() == f4.element(1, 1));
  CHECK(t * f4.element(1, 1) == f4.one());
  CHECK(f4.element(1, 1) + f4.element(0, 1) == f4.one());  // char 2 addition
}

TEST_CASE("element enumeration is c0-major and capped") {
  Field f5 = Field::prime(5);
  std::vector<FieldElement> e5 = f5.elements();
  REQUIRE(e5.size() == 5);
  for (uint64_t i = 0; i < 5; ++i) CHECK(e5[i] == f5.element(i));

  Field f9 = Field::quadratic(3);
  std::vector<FieldElement> e9 = f9.elements();
  REQUIRE(e9.size() == 9);
  CHECK(e9[0] == f9.element(0, 0));
  CHECK(e9[1] == f9.element(0, 1));
  CHECK(e9[2] == f9.element(0, 2));
  CHECK(e9[3] == f9.element(1, 0));
  CHECK(e9[8] == f9.element(2, 2));

  CHECK_THROWS_AS(Field::prime(11).elements(10), FieldTooLarge);
  CHECK_THROWS_AS(Field::quadratic(65537).elements(), FieldTooLarge);  // q = 65537^2 > 2^32
}

TEST_CASE("Fermat: x^{q-1} = 1 across whole small fields") {
  for (const Field& k : {Field::prime(3), Field::prime(97), Field::quadratic(3),
                         Field::quadratic(7), Field::gf4()}) {
    uint64_t q = 1;
    for (int i = 0; i < k.degree(); ++i) q *= k.characteristic();
    for (const FieldElement& x : k.elements()) {
      if (x.is_zero()) continue;
      CHECK(x.pow(q - 1) == k.one());
      CHECK(x * x.inverse() == k.one());
    }
  }
}

TEST_CASE("frobenius fixes exactly the prime subfield") {
  for (const Field& k : {Field::quadratic(3), Field::quadratic(5), Field::gf4()}) {
    size_t fixed = 0;
    for (const FieldElement& x : k.elements())
      if (x.frobenius() == x) ++fixed;
    CHECK(fixed == k.characteristic());
  }
}

TEST_CASE("freshman's dream in the extension fields") {
  for (const Field& k : {Field::quadratic(3), Field::quadratic(7), Field::gf4()}) {
    uint64_t p = k.characteristic();
    for (const FieldElement& x : k.elements())
      for (const FieldElement& y : k.elements())
        CHECK((x + y).pow(p) == x.pow(p) + y.pow(p));
  }
}

TEST_CASE("division by zero and field mixing are rejected") {
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(f5.zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(f5.one() / f5.zero(), DivisionByZero);
  CHECK_THROWS_AS(Field::gf4().zero().inverse(), DivisionByZero);

  Field f7 = Field::prime(7);
  CHECK_THROWS_AS(f5.one() + f7.one(), FieldMismatch);
  CHECK_THROWS_AS(f5.element(2) * Field::quadratic(5).element(2), FieldMismatch);
  CHECK_THROWS_AS(f5.element(1, 1), FieldMismatch);  // c1 in a prime field
}

TEST_CASE("embed and contains") {
  Field f3 = Field::prime(3);
  Field f9 = Field::quadratic(3);
  FieldElement two = f3.element(2);
  FieldElement lifted = f9.embed(two);
  CHECK(lifted == f9.element(2, 0));
  CHECK(f9.contains(lifted));
  CHECK(!f9.contains(two));
  CHECK(!f3.contains(lifted));
  CHECK(f9.embed(two) * f9.embed(two) == f9.embed(two * two));
  CHECK_THROWS_AS(f3.embed(f9.element(0, 1)), FieldMismatch);
}

TEST_CASE("element text round-trips") {
  for (const Field& k : {Field::prime(7), Field::quadratic(3), Field::gf4()}) {
    for (const FieldElement& x : k.elements()) {
      CHECK(parse_element(element_to_string(x), k) == x);
    }
  }
  CHECK(element_to_string(Field::prime(7).element(3)) == "3");
  CHECK(element_to_string(Field::quadratic(3).element(1, 2)) == "1+2t");
  CHECK(element_to_string(Field::gf4().element(0, 1)) == "0+1t");
}

TEST_CASE("element parsing is strict") {
  Field f7 = Field::prime(7);
  Field f9 = Field::quadratic(3);
  CHECK(parse_element("6", f7) == f7.element(6));
  CHECK(parse_element("2", f9) == f9.element(2, 0));  // plain c0 allowed in extensions
  CHECK(parse_element("1+2t", f9) == f9.element(1, 2));
  CHECK_THROWS_AS(parse_element("7", f7), UsageError);   // not reduced
  CHECK_THROWS_AS(parse_element("9", f7), UsageError);
  CHECK_THROWS_AS(parse_element("-1", f7), UsageError);
  CHECK_THROWS_AS(parse_element("", f7), UsageError);
  CHECK_THROWS_AS(parse_element("x", f7), UsageError);
  CHECK_THROWS_AS(parse_element("1+2t", f7), UsageError);  // needs a quadratic field
  CHECK_THROWS_AS(parse_element("1+t", f9), UsageError);   // c1 digit required
  CHECK_THROWS_AS(parse_element("1+3t", f9), UsageError);  // c1 not reduced
  CHECK_THROWS_AS(parse_element("t", f9), UsageError);
  CHECK_THROWS_AS(parse_element("1 + 2t", f9), UsageError);
}
