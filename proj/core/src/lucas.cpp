#include "fptlab/lucas.hpp"

#include <algorithm>
#include <numeric>

namespace fptlab {

std::vector<uint64_t> base_p_digits(uint64_t n, uint64_t p) {
  if (p < 2) throw Error("digit base must be at least 2");
  std::vector<uint64_t> d;
  do {
    d.push_back(n % p);
    n /= p;
  } while (n > 0);
  return d;
}

bool no_carry(std::span<const uint64_t> parts, uint64_t p) {
  if (p < 2) throw Error("digit base must be at least 2");
  std::vector<uint64_t> rest(parts.begin(), parts.end());
  for (;;) {
    uint64_t digit_sum = 0;
    bool any = false;
    for (uint64_t& v : rest) {
      digit_sum += v % p;
      v /= p;
      any = any || v != 0;
    }
    if (digit_sum >= p) return false;
    if (!any) return true;
  }
}

BigInt binomial_exact(long long n, long long k) {
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

BigInt multinomial_exact(uint64_t n, std::span<const uint64_t> parts) {
  uint64_t sum = 0;
  for (uint64_t k : parts) sum += k;
  if (sum != n) throw BadPartition("multinomial parts do not sum to the top index");
  BigInt r(1);
  uint64_t rem = n;
  for (uint64_t k : parts) {
    r *= binomial_exact(static_cast<long long>(rem), static_cast<long long>(k));
    rem -= k;
  }
  return r;
}

namespace {

// C(n, k) mod p for 0 <= k <= n < p
uint64_t small_binomial_mod(uint64_t n, uint64_t k, uint64_t p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t num = 1, den = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    num = detail::mulmod_u64(num, (n - k + i) % p, p);
    den = detail::mulmod_u64(den, i % p, p);
  }
  return detail::mulmod_u64(num, detail::invmod_u64(den, p), p);
}

}  // namespace

FieldElement multinomial_mod_p(uint64_t n, std::span<const uint64_t> parts, const Field& fp) {
  if (fp.degree() != 1) throw FieldMismatch("multinomial reduction needs a prime field");
  uint64_t p = fp.characteristic();
  uint64_t sum = 0;
  for (uint64_t k : parts) sum += k;
  if (sum != n) throw BadPartition("multinomial parts do not sum to the top index");

  std::vector<uint64_t> rest(parts.begin(), parts.end());
  uint64_t acc = 1;
  uint64_t top = n;
  for (;;) {
    uint64_t b = top % p;
    uint64_t digit_sum = 0;
    for (uint64_t v : rest) digit_sum += v % p;
    // a carry in the digit sums (here or below) kills the whole product
    if (digit_sum != b) return fp.zero();
    uint64_t rem = b;
    for (uint64_t& v : rest) {
      uint64_t a = v % p;
      acc = detail::mulmod_u64(acc, small_binomial_mod(rem, a, p), p);
      rem -= a;
      v /= p;
    }
    top /= p;
    if (top == 0 && std::all_of(rest.begin(), rest.end(), [](uint64_t v) { return v == 0; }))
      return fp.element(acc);
  }
}

FieldElement binomial_mod_p(uint64_t n, uint64_t k, const Field& fp) {
  if (k > n) return fp.zero();
  uint64_t parts[2] = {k, n - k};
  return multinomial_mod_p(n, parts, fp);
}

}  // namespace fptlab
