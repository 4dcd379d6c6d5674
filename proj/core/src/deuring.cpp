#include "fptlab/deuring.hpp"

namespace fptlab {

UniPoly<BigInt> deuring_poly_z(uint32_t n) {
  std::vector<BigInt> coeffs(size_t(n) + 1);
  BigInt c(1);  // C(n, i), updated incrementally
  for (uint32_t i = 0;; ++i) {
    coeffs[i] = c * c;
    if (i == n) break;
    c *= (n - i);
    c /= (i + 1);
  }
  return UniPoly<BigInt>(std::move(coeffs), BigInt(0));
}

UniPoly<BigRational> deuring_poly_q(uint32_t n) {
  UniPoly<BigInt> z = deuring_poly_z(n);
  std::vector<BigRational> coeffs;
  coeffs.reserve(size_t(n) + 1);
  for (const BigInt& c : z.coeffs()) coeffs.emplace_back(c);
  return UniPoly<BigRational>(std::move(coeffs), BigRational(0));
}

UniPoly<FieldElement> deuring_poly_fp(uint32_t n, const Field& fp) {
  if (fp.degree() != 1) throw FieldMismatch("Deuring polynomials live over prime fields");
  std::vector<FieldElement> coeffs;
  coeffs.reserve(size_t(n) + 1);
  for (uint32_t i = 0; i <= n; ++i) {
    FieldElement b = binomial_mod_p(n, i, fp);
    coeffs.push_back(b * b);
  }
  return UniPoly<FieldElement>(std::move(coeffs), fp.zero());
}

UniPoly<FieldElement> hasse_polynomial(const Field& fp) {
  uint64_t p = fp.characteristic();
  if (p == 2) throw CharTwoUnsupported("the Hasse polynomial needs odd characteristic");
  return deuring_poly_fp(static_cast<uint32_t>((p - 1) / 2), fp);
}

UniPoly<FieldElement> embed_poly(const UniPoly<FieldElement>& f, const Field& ext) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (const FieldElement& c : f.coeffs()) coeffs.push_back(ext.embed(c));
  return UniPoly<FieldElement>(std::move(coeffs), ext.zero());
}

namespace {

// g(l) -> g(l^q); equals g^q over F_p when q is a power of p, because the
// coefficients are Frobenius-fixed
UniPoly<FieldElement> dilate(const UniPoly<FieldElement>& g, uint64_t q) {
  if (g.is_zero()) return g;
  std::vector<FieldElement> out(size_t(g.degree()) * q + 1, g.sample());
  for (size_t i = 0; i < g.coeffs().size(); ++i) out[i * q] = g.coeffs()[i];
  return UniPoly<FieldElement>(std::move(out), g.sample());
}

}  // namespace

std::vector<DeuringFactor> deuring_lucas_factorization(uint32_t n, const Field& fp) {
  uint64_t p = fp.characteristic();
  std::vector<uint64_t> digits = base_p_digits(n, p);
  std::vector<DeuringFactor> factors;
  factors.reserve(digits.size());
  UniPoly<FieldElement> product = UniPoly<FieldElement>::constant(fp.one());
  uint64_t pj = 1;
  for (uint64_t b : digits) {
    factors.push_back({static_cast<uint32_t>(b), pj});
    product = product * dilate(deuring_poly_fp(static_cast<uint32_t>(b), fp), pj);
    pj *= p;
  }
  if (product != deuring_poly_fp(n, fp))
    throw FactorizationMismatch("digit factorization of H_" + std::to_string(n) +
                                " mod " + std::to_string(p) + " does not multiply back");
  return factors;
}

bool check_p_minus_one(uint64_t p) {
  Field fp = Field::prime(p);
  UniPoly<FieldElement> lhs = deuring_poly_fp(static_cast<uint32_t>(p - 1), fp);
  UniPoly<FieldElement> l_minus_1({-fp.one(), fp.one()}, fp.zero());
  return lhs == l_minus_1.pow(p - 1);
}

bool check_pascal_connection(uint32_t n) {
  if (n < 1) throw Error("the Pascal connection needs n >= 1");
  UniPoly<BigRational> h_n = deuring_poly_q(n);
  UniPoly<BigRational> h_prev = deuring_poly_q(n - 1);
  UniPoly<BigRational> f = h_prev.antiderivative();
  UniPoly<BigRational> one_minus_l({BigRational(1), BigRational(-1)}, BigRational(0));
  return one_minus_l * h_prev + f.scale(BigRational(2 * int64_t(n))) == h_n;
}

bool check_ode(uint64_t p) {
  if (p == 2) throw CharTwoUnsupported("the F-series identity needs odd characteristic");
  Field fp = Field::prime(p);
  uint32_t n1 = static_cast<uint32_t>((p - 1) / 2);
  UniPoly<FieldElement> f = deuring_poly_fp(n1 - 1, fp).antiderivative();
  UniPoly<FieldElement> l({fp.zero(), fp.one()}, fp.zero());
  UniPoly<FieldElement> l2_minus_l({fp.zero(), -fp.one(), fp.one()}, fp.zero());
  UniPoly<FieldElement> lhs = (l2_minus_l * f.derivative().derivative()).scale(fp.from_int(4)) +
                              (l * f.derivative()).scale(fp.from_int(8)) + f;
  return lhs.is_zero();
}

SquarefreeReport check_no_repeated_roots(uint64_t p) {
  if (p == 2) throw CharTwoUnsupported("root counting needs odd characteristic");
  Field fp = Field::prime(p);
  uint32_t n1 = static_cast<uint32_t>((p - 1) / 2);
  UniPoly<FieldElement> h = deuring_poly_fp(n1, fp);
  UniPoly<FieldElement> h_prev = deuring_poly_fp(n1 - 1, fp);
  UniPoly<FieldElement> f = h_prev.antiderivative();

  SquarefreeReport rep;
  rep.f_squarefree = gcd_monic(f, f.derivative()).is_one();
  rep.hasse_squarefree = gcd_monic(h, h.derivative()).is_one();

  FieldElement h_at_1 = h.eval(fp.one());
  FieldElement hp_at_1 = h_prev.eval(fp.one());
  rep.endpoints_ok = h.eval(fp.zero()) == fp.one() &&
                     h_at_1 == binomial_mod_p(2 * uint64_t(n1), n1, fp) && !h_at_1.is_zero() &&
                     hp_at_1 == binomial_mod_p(p - 3, n1 - 1, fp) && !hp_at_1.is_zero();

  UniPoly<FieldElement> l_minus_l2({fp.zero(), fp.one(), -fp.one()}, fp.zero());
  UniPoly<FieldElement> one_minus_2l({fp.one(), fp.from_int(-2)}, fp.zero());
  UniPoly<FieldElement> pf = (l_minus_l2 * h.derivative().derivative()).scale(fp.from_int(4)) +
                             (one_minus_2l * h.derivative()).scale(fp.from_int(4)) - h;
  rep.picard_fuchs_ok = pf.is_zero();
  return rep;
}

bool check_shared_roots(uint64_t p) {
  if (p == 2) throw CharTwoUnsupported("root separation needs odd characteristic");
  Field fp = Field::prime(p);
  uint32_t n1 = static_cast<uint32_t>((p - 1) / 2);
  UniPoly<FieldElement> h = deuring_poly_fp(n1, fp);
  UniPoly<FieldElement> h_prev = deuring_poly_fp(n1 - 1, fp);
  UniPoly<FieldElement> f = h_prev.antiderivative();
  UniPoly<FieldElement> direct = gcd_monic(h, h_prev);
  UniPoly<FieldElement> via_f = gcd_monic(f, f.derivative());
  return direct == via_f && direct.is_one();
}

}  // namespace fptlab
