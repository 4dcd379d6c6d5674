#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fptlab/deuring.hpp"
#include "fptlab/field.hpp"
#include "fptlab/multipoly.hpp"

namespace fptlab {

enum class CurveClass { Ordinary, Supersingular, Char2 };

/// "ordinary" | "supersingular" | "char2"
std::string curve_class_name(CurveClass c);

/// The projective cubic y^2 z - x (x - z) (x - a z) expanded as
/// y^2 z - x^3 + (1+a) x^2 z - a x z^2, over the field of a. In
/// characteristic 2 the signs collapse and this is the Discussion's curve.
struct LegendreCurve {
  FieldElement a;
  MultiPoly<FieldElement> cubic;
};

/// Throws DegenerateParameter for a in {0, 1}, where the cubic is singular.
LegendreCurve make_curve(const FieldElement& a);

struct Classification {
  CurveClass kind;
  FieldElement hasse_value;  // H_{(p-1)/2}(a), evaluated in the field of a
};

/// Supersingular iff the Hasse polynomial vanishes at a. Throws
/// CharTwoUnsupported for p = 2, where the Hasse criterion has no odd-p
/// analogue (every F_4 parameter is handled by the closed form directly).
Classification classify(const LegendreCurve& curve);

/// All supersingular parameters inside the given field (F_p or F_{p^2}),
/// in enumeration order. The list is exactly the root set of the Hasse
/// polynomial there; no root can be 0 or 1.
std::vector<FieldElement> supersingular_values(const Field& search_field,
                                               uint64_t cap = Field::kDefaultEnumerationCap);

/// C(big_n, n) * H_m(a): the coefficient of x^{2m} y^{2n} z^{n+m} in
/// f_a^{big_n}. Requires n + m == big_n (BadPartition otherwise).
FieldElement critical_coefficient(uint64_t big_n, uint64_t n, uint64_t m, const FieldElement& a);

/// Expands f_lambda^N for N <= n_max with a symbolic parameter lambda and
/// checks that the coefficient of x^{2m} y^{2n} z^{n+m} equals
/// C(N, n) H_m(lambda) for every split N = n + m. The sign is +1: the two
/// minus signs contributed by (-x^3)^j and (-lambda x z^2)^l always pair up
/// to an even power in these monomials.
bool verify_technical_lemma(const Field& fp, uint32_t n_max);

}  // namespace fptlab
