#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fptlab/field.hpp"
#include "fptlab/ring.hpp"

namespace fptlab {

/// Base-p digits of n, least significant first. digits(0) = {0}.
std::vector<uint64_t> base_p_digits(uint64_t n, uint64_t p);

/// True iff adding the parts in base p never carries: at every digit
/// position the plain digit sum stays below p.
bool no_carry(std::span<const uint64_t> parts, uint64_t p);

/// Exact C(n, k); zero whenever k < 0 or k > n.
BigInt binomial_exact(long long n, long long k);

/// Exact multinomial n! / (parts[0]! ... parts[r-1]!).
/// Throws BadPartition unless the parts sum to n.
BigInt multinomial_exact(uint64_t n, std::span<const uint64_t> parts);

/// Multinomial (n; parts) mod p, computed digit by digit: the result is a
/// product of digit multinomials and vanishes exactly when some digit sum
/// of the parts disagrees with the corresponding digit of n. fp must be a
/// prime field. Throws BadPartition unless the parts sum to n.
FieldElement multinomial_mod_p(uint64_t n, std::span<const uint64_t> parts, const Field& fp);

/// C(n, k) mod p via the digit decomposition; zero when k > n.
FieldElement binomial_mod_p(uint64_t n, uint64_t k, const Field& fp);

}  // namespace fptlab
