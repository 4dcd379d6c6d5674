#include "fptlab/elliptic.hpp"

#include "fptlab/lucas.hpp"
#include "fptlab/unipoly.hpp"

namespace fptlab {

std::string curve_class_name(CurveClass c) {
  switch (c) {
    case CurveClass::Ordinary:
      return "ordinary";
    case CurveClass::Supersingular:
      return "supersingular";
    case CurveClass::Char2:
      return "char2";
  }
  throw Error("unreachable curve class");
}

LegendreCurve make_curve(const FieldElement& a) {
  if (a.p() == 0) throw Error("curve parameter must belong to a field");
  if (a.is_zero() || a.is_one())
    throw DegenerateParameter("parameter " + element_to_string(a) + " gives a singular cubic");
  FieldElement one = a.one_like();
  std::vector<std::pair<ExpVec, FieldElement>> terms = {
      {ExpVec(0, 2, 1), one},
      {ExpVec(3, 0, 0), -one},
      {ExpVec(2, 0, 1), one + a},
      {ExpVec(1, 0, 2), -a},
  };
  return LegendreCurve{a, MultiPoly<FieldElement>(std::move(terms), a.zero_like())};
}

Classification classify(const LegendreCurve& curve) {
  uint64_t p = curve.a.p();
  if (p == 2)
    throw CharTwoUnsupported("the Hasse criterion needs odd characteristic; p = 2 has its own closed form");
  Field fp = Field::prime(p);
  UniPoly<FieldElement> h = hasse_polynomial(fp);
  if (curve.a.degree() == 2) h = embed_poly(h, curve.a.field());
  FieldElement value = h.eval(curve.a);
  return {value.is_zero() ? CurveClass::Supersingular : CurveClass::Ordinary, value};
}

std::vector<FieldElement> supersingular_values(const Field& search_field, uint64_t cap) {
  uint64_t p = search_field.characteristic();
  if (p == 2) throw CharTwoUnsupported("supersingular parameters via the Hasse polynomial need odd p");
  UniPoly<FieldElement> h = hasse_polynomial(Field::prime(p));
  if (search_field.degree() == 2) h = embed_poly(h, search_field);
  std::vector<FieldElement> out;
  for (auto& [root, mult] : roots_exhaustive(h, search_field.elements(cap))) {
    (void)mult;
    out.push_back(root);
  }
  return out;
}

FieldElement critical_coefficient(uint64_t big_n, uint64_t n, uint64_t m, const FieldElement& a) {
  if (n + m != big_n) throw BadPartition("critical coefficient needs n + m = N");
  if (a.p() == 0) throw Error("parameter must belong to a field");
  Field fp = Field::prime(a.p());
  FieldElement binom = binomial_mod_p(big_n, n, fp);
  UniPoly<FieldElement> h_m = deuring_poly_fp(static_cast<uint32_t>(m), fp);
  if (a.degree() == 2) {
    Field ext = a.field();
    return ext.embed(binom) * embed_poly(h_m, ext).eval(a);
  }
  return binom * h_m.eval(a);
}

bool verify_technical_lemma(const Field& fp, uint32_t n_max) {
  if (fp.degree() != 1) throw FieldMismatch("the symbolic expansion runs over a prime field");
  using Sym = UniPoly<FieldElement>;  // F_p[lambda]
  Sym zero(fp.zero());
  Sym one = Sym::constant(fp.one());
  Sym lambda({fp.zero(), fp.one()}, fp.zero());

  std::vector<std::pair<ExpVec, Sym>> terms = {
      {ExpVec(0, 2, 1), one},
      {ExpVec(3, 0, 0), -one},
      {ExpVec(2, 0, 1), one + lambda},
      {ExpVec(1, 0, 2), -lambda},
  };
  MultiPoly<Sym> f(std::move(terms), zero);

  MultiPoly<Sym> power = MultiPoly<Sym>::one_like(zero);
  for (uint32_t big_n = 1; big_n <= n_max; ++big_n) {
    power = multi_mul_truncated(power, f, nullptr);
    for (uint32_t n = 0; n <= big_n; ++n) {
      uint32_t m = big_n - n;
      const Sym& got = power.coefficient_of(ExpVec(2 * m, 2 * n, big_n));
      Sym expect = deuring_poly_fp(m, fp).scale(binomial_mod_p(big_n, n, fp));
      if (got != expect) return false;
    }
  }
  return true;
}

}  // namespace fptlab
