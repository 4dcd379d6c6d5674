#include <utility>
#include <vector>

#include "doctest.h"

#include "fptlab/errors.hpp"
#include "fptlab/field.hpp"
#include "fptlab/ring.hpp"
#include "fptlab/unipoly.hpp"

using namespace fptlab;

namespace {

UniPoly<FieldElement> make(const Field& k, std::vector<long long> cs) {
  std::vector<FieldElement> v;
  for (long long c : cs) v.push_back(k.from_int(c));
  return UniPoly<FieldElement>(std::move(v), k.zero());
}

}  // namespace

TEST_CASE("normalization and degree") {
  Field f5 = Field::prime(5);
  CHECK(make(f5, {}).is_zero());
  CHECK(make(f5, {0, 0, 0}).is_zero());
  CHECK(make(f5, {1, 2, 0}).degree() == 1);
  CHECK(make(f5, {}).degree() == -1);
  CHECK(UniPoly<FieldElement>::constant(f5.one()).is_one());
  CHECK(UniPoly<FieldElement>::monomial(f5.element(2), 3).degree() == 3);
  CHECK_THROWS_AS(make(f5, {}).leading_coefficient(), ZeroPolynomial);
  CHECK(make(f5, {1, 2, 3}).leading_coefficient() == f5.element(3));
}

TEST_CASE("arithmetic and evaluation") {
  Field f7 = Field::prime(7);
  UniPoly<FieldElement> a = make(f7, {1, 2, 1});   // (1+x)^2
  UniPoly<FieldElement> b = make(f7, {6, 1});      // x - 1
  CHECK(a * b == make(f7, {6, 6, 1, 1}));
  CHECK(a + b == make(f7, {0, 3, 1}));
  CHECK(a - a == make(f7, {}));
  CHECK(-b == make(f7, {1, 6}));
  CHECK(a.eval(f7.element(2)) == f7.element(2));   // 9 = 2 mod 7
  CHECK(make(f7, {1, 1}).pow(2) == a);
  CHECK(make(f7, {1, 1}).pow(7) == make(f7, {1, 0, 0, 0, 0, 0, 0, 1}));  // freshman's dream
  CHECK(a.pow(0).is_one());
  CHECK(a.scale(f7.element(3)) == make(f7, {3, 6, 3}));
}

TEST_CASE("derivative and antiderivative") {
  Field f7 = Field::prime(7);
  UniPoly<FieldElement> f = make(f7, {4, 0, 2, 5});
  CHECK(f.derivative() == make(f7, {0, 4, 15}));
  CHECK(make(f7, {3}).derivative().is_zero());

  // round trip up to the lost constant term
  UniPoly<FieldElement> g = make(f7, {0, 4, 1, 2});  // no constant term
  CHECK(g.derivative().antiderivative() == g);

  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(UniPoly<FieldElement>::monomial(f5.one(), 4).antiderivative(),
                  NonInvertibleIndex);  // needs 1/5

  UniPoly<BigRational> q({BigRational(1), BigRational(1, 2)}, BigRational(0));
  UniPoly<BigRational> integral = q.antiderivative();
  CHECK(integral.coeff(1) == BigRational(1));
  CHECK(integral.coeff(2) == BigRational(1, 4));
  CHECK(integral.derivative() == q);
}

TEST_CASE("division with remainder") {
  Field f7 = Field::prime(7);
  UniPoly<FieldElement> a = make(f7, {3, 1, 4, 1, 5});
  UniPoly<FieldElement> b = make(f7, {2, 0, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK_THROWS_AS(divmod(a, make(f7, {})), DivisionByZero);

  auto [q2, r2] = divmod(b, a);  // lower degree by higher
  CHECK(q2.is_zero());
  CHECK(r2 == b);
}

TEST_CASE("monic gcd") {
  Field f7 = Field::prime(7);
  CHECK(gcd_monic(make(f7, {}), make(f7, {})).is_zero());
  CHECK(gcd_monic(make(f7, {3}), make(f7, {})).is_one());  // unit

  UniPoly<FieldElement> common = make(f7, {1, 1});  // x + 1
  UniPoly<FieldElement> a = common * make(f7, {2, 0, 1});
  UniPoly<FieldElement> b = common * make(f7, {3, 1});
  UniPoly<FieldElement> g = gcd_monic(a, b);
  CHECK(g == common);  // already monic

  // scaled inputs still give a monic answer
  CHECK(gcd_monic(a.scale(f7.element(4)), b.scale(f7.element(5))) == common);
  // coprime inputs
  CHECK(gcd_monic(make(f7, {1, 1}), make(f7, {2, 1})).is_one());
}

TEST_CASE("exhaustive roots with multiplicity") {
  Field f7 = Field::prime(7);
  // (x - 1)^2 (x - 3) = x^3 - 5x^2 + 7x - 3 = x^3 + 2x^2 + 0x + 4 mod 7
  UniPoly<FieldElement> f = make(f7, {6, 1}).pow(2) * make(f7, {4, 1});
  auto roots = roots_exhaustive(f, f7.elements());
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == f7.element(1));
  CHECK(roots[0].second == 2);
  CHECK(roots[1].first == f7.element(3));
  CHECK(roots[1].second == 1);

  // x^2 + 1 has no roots mod 7: the squares are {0,1,2,4} and -1 = 6
  CHECK(roots_exhaustive(make(f7, {1, 0, 1}), f7.elements()).empty());
  CHECK_THROWS_AS(roots_exhaustive(make(f7, {}), f7.elements()), ZeroPolynomial);
}

TEST_CASE("UniPoly of UniPoly satisfies the ring protocol") {
  Field f3 = Field::prime(3);
  using Inner = UniPoly<FieldElement>;
  using Outer = UniPoly<Inner>;
  Inner iz(f3.zero());
  Outer a({Inner::constant(f3.one()), Inner({f3.zero(), f3.one()}, f3.zero())}, iz);
  Outer sq = a * a;  // (1 + l y)^2 = 1 + 2 l y + l^2 y^2 over F_3[l][y]
  CHECK(sq.coeff(0).is_one());
  CHECK(sq.coeff(1) == Inner({f3.zero(), f3.element(2)}, f3.zero()));
  CHECK(sq.coeff(2) == Inner({f3.zero(), f3.zero(), f3.one()}, f3.zero()));
}
