#pragma once

#include <cstdint>
#include <vector>

#include "fptlab/field.hpp"
#include "fptlab/lucas.hpp"
#include "fptlab/ring.hpp"
#include "fptlab/unipoly.hpp"

namespace fptlab {

/// H_n(l) = sum_{i<=n} C(n,i)^2 l^i with exact integer coefficients.
UniPoly<BigInt> deuring_poly_z(uint32_t n);

/// Same polynomial with rational coefficients (for characteristic-zero
/// identities).
UniPoly<BigRational> deuring_poly_q(uint32_t n);

/// H_n(l) mod p; coefficients come from the digit decomposition of C(n,i),
/// not from reducing the exact integers.
UniPoly<FieldElement> deuring_poly_fp(uint32_t n, const Field& fp);

/// H_{(p-1)/2} mod p, the polynomial whose roots are the supersingular
/// Legendre parameters. p must be odd.
UniPoly<FieldElement> hasse_polynomial(const Field& fp);

/// Coefficient-wise image of a prime-field polynomial in an extension.
UniPoly<FieldElement> embed_poly(const UniPoly<FieldElement>& f, const Field& ext);

/// One factor H_{digit}^{p^j} of the digit factorization of H_n mod p.
struct DeuringFactor {
  uint32_t digit;   // base-p digit b_j of n
  uint64_t power;   // p^j
  bool operator==(const DeuringFactor&) const = default;
};

/// Digit factorization H_n = prod_j H_{b_j}^{p^j} mod p, one factor per
/// base-p digit of n (including zero digits, whose factor is 1). The product
/// is multiplied back out and compared with deuring_poly_fp before
/// returning; FactorizationMismatch if they differ.
std::vector<DeuringFactor> deuring_lucas_factorization(uint32_t n, const Field& fp);

/// H_{p-1} == (l - 1)^{p-1} mod p.
bool check_p_minus_one(uint64_t p);

/// Over Q: (1 - l) H_{n-1} + 2n F == H_n where F' = H_{n-1}, F(0) = 0.
bool check_pascal_connection(uint32_t n);

/// Over F_p with F the antiderivative of H_{n1-1}, n1 = (p-1)/2:
/// 4 l (l - 1) F'' + 8 l F' + F == 0.
bool check_ode(uint64_t p);

struct SquarefreeReport {
  bool f_squarefree = false;       // gcd(F, F') == 1
  bool hasse_squarefree = false;   // gcd(H_{n1}, H_{n1}') == 1
  bool endpoints_ok = false;       // H_{n1}(0) = 1, H_{n1}(1), H_{n1-1}(1) as binomials, nonzero
  bool picard_fuchs_ok = false;    // 4 l (1 - l) H'' + 4 (1 - 2 l) H' - H == 0 for H = H_{n1}
  bool all() const { return f_squarefree && hasse_squarefree && endpoints_ok && picard_fuchs_ok; }
};

/// Squarefreeness of F and of the Hasse polynomial over F_p, plus the value
/// and differential-equation facts the root-counting argument leans on.
SquarefreeReport check_no_repeated_roots(uint64_t p);

/// gcd(H_{n1}, H_{n1-1}) == 1, computed twice: directly, and as gcd(F, F')
/// through the antiderivative route. Both must agree.
bool check_shared_roots(uint64_t p);

}  // namespace fptlab
