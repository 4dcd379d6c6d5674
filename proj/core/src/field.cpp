#include "fptlab/field.hpp"

#include <array>
#include <charconv>

namespace fptlab {
namespace detail {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
  // extended Euclid on (a, p); p prime so gcd is 1
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for all 64-bit integers
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

void FieldElement::check_same(const FieldElement& o) const {
  if (p_ != o.p_ || deg_ != o.deg_ || m0_ != o.m0_ || m1_ != o.m1_)
    throw FieldMismatch("elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement r = *this;
  r.c0_ = c0_ + o.c0_;
  if (r.c0_ >= p_) r.c0_ -= p_;
  r.c1_ = c1_ + o.c1_;
  if (r.c1_ >= p_) r.c1_ -= p_;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  FieldElement r = *this;
  r.c0_ = c0_ >= o.c0_ ? c0_ - o.c0_ : c0_ + p_ - o.c0_;
  r.c1_ = c1_ >= o.c1_ ? c1_ - o.c1_ : c1_ + p_ - o.c1_;
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.c0_ = c0_ == 0 ? 0 : p_ - c0_;
  r.c1_ = c1_ == 0 ? 0 : p_ - c1_;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  using detail::mulmod_u64;
  FieldElement r = *this;
  if (deg_ == 1) {
    r.c0_ = mulmod_u64(c0_, o.c0_, p_);
    return r;
  }
  // (a0 + a1 t)(b0 + b1 t) with t^2 = m1 t + m0
  uint64_t cross = (mulmod_u64(c0_, o.c1_, p_) + mulmod_u64(c1_, o.c0_, p_)) % p_;
  uint64_t a1b1 = mulmod_u64(c1_, o.c1_, p_);
  r.c0_ = (mulmod_u64(c0_, o.c0_, p_) + mulmod_u64(a1b1, m0_, p_)) % p_;
  r.c1_ = (cross + mulmod_u64(a1b1, m1_, p_)) % p_;
  return r;
}

FieldElement FieldElement::inverse() const {
  using detail::mulmod_u64;
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  FieldElement r = *this;
  if (deg_ == 1 || c1_ == 0) {
    r.c0_ = detail::invmod_u64(c0_, p_);
    r.c1_ = 0;
    return r;
  }
  // conjugate of c0 + c1 t is (c0 + c1 m1) - c1 t; their product is the
  // norm c0^2 + c0 c1 m1 - c1^2 m0, a nonzero scalar
  uint64_t norm = (mulmod_u64(c0_, c0_, p_) + mulmod_u64(mulmod_u64(c0_, c1_, p_), m1_, p_)) % p_;
  uint64_t sub = mulmod_u64(mulmod_u64(c1_, c1_, p_), m0_, p_);
  norm = norm >= sub ? norm - sub : norm + p_ - sub;
  uint64_t ninv = detail::invmod_u64(norm, p_);
  uint64_t conj0 = (c0_ + mulmod_u64(c1_, m1_, p_)) % p_;
  uint64_t conj1 = c1_ == 0 ? 0 : p_ - c1_;
  r.c0_ = mulmod_u64(conj0, ninv, p_);
  r.c1_ = mulmod_u64(conj1, ninv, p_);
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(uint64_t e) const {
  FieldElement base = *this;
  FieldElement r = one_like();
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FieldElement FieldElement::zero_like() const { return FieldElement(p_, deg_, m0_, m1_, 0, 0); }

FieldElement FieldElement::one_like() const { return FieldElement(p_, deg_, m0_, m1_, 1 % p_, 0); }

FieldElement FieldElement::scalar_like(long long n) const {
  long long m = n % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return FieldElement(p_, deg_, m0_, m1_, static_cast<uint64_t>(m), 0);
}

Field FieldElement::field() const {
  if (p_ == 0) throw Error("field() on a default-constructed element");
  return deg_ == 1 ? Field::prime(p_) : (p_ == 2 ? Field::gf4() : Field::quadratic(p_));
}

Field Field::prime(uint64_t p) {
  if (!detail::is_prime_u64(p))
    throw CompositeModulus("modulus " + std::to_string(p) + " is not prime");
  return Field(p, 1, 0, 0);
}

Field Field::quadratic(uint64_t p) {
  if (p == 2)
    throw UnsupportedCharacteristic("no quadratic non-residue mod 2; use gf4() for F_4");
  if (!detail::is_prime_u64(p))
    throw CompositeModulus("modulus " + std::to_string(p) + " is not prime");
  uint64_t d = 2;
  while (detail::powmod_u64(d, (p - 1) / 2, p) == 1) ++d;  // least non-residue
  return Field(p, 2, d, 0);
}

Field Field::gf4() { return Field(2, 2, 1, 1); }

FieldElement Field::element(uint64_t c0, uint64_t c1) const {
  c0 %= p_;
  c1 %= p_;
  if (deg_ == 1 && c1 != 0)
    throw FieldMismatch("t-component in a prime field element");
  return FieldElement(p_, deg_, m0_, m1_, c0, c1);
}

FieldElement Field::from_int(long long n) const {
  long long m = n % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return FieldElement(p_, deg_, m0_, m1_, static_cast<uint64_t>(m), 0);
}

FieldElement Field::embed(const FieldElement& sub) const {
  if (sub.p() != p_ || sub.degree() != 1)
    throw FieldMismatch("embed expects an element of the prime subfield");
  return FieldElement(p_, deg_, m0_, m1_, sub.c0(), 0);
}

bool Field::contains(const FieldElement& el) const {
  return el.p_ == p_ && el.deg_ == deg_ && el.m0_ == m0_ && el.m1_ == m1_;
}

std::vector<FieldElement> Field::elements(uint64_t cap) const {
  __uint128_t q = p_;
  if (deg_ == 2) q *= p_;
  if (q > cap)
    throw FieldTooLarge("field has more than cap = " + std::to_string(cap) + " elements");
  std::vector<FieldElement> out;
  out.reserve(static_cast<size_t>(q));
  if (deg_ == 1) {
    for (uint64_t c0 = 0; c0 < p_; ++c0) out.push_back(element(c0));
  } else {
    for (uint64_t c0 = 0; c0 < p_; ++c0)
      for (uint64_t c1 = 0; c1 < p_; ++c1) out.push_back(element(c0, c1));
  }
  return out;
}

std::string element_to_string(const FieldElement& el) {
  if (el.degree() == 1) return std::to_string(el.c0());
  return std::to_string(el.c0()) + "+" + std::to_string(el.c1()) + "t";
}

namespace {

bool parse_u64(std::string_view s, uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

FieldElement parse_element(const std::string& text, const Field& field) {
  uint64_t c0 = 0, c1 = 0;
  auto plus = text.find('+');
  if (plus == std::string::npos) {
    if (!parse_u64(text, c0))
      throw UsageError("bad element '" + text + "', expected c0 or c0+c1t");
  } else {
    std::string_view tail(text.c_str() + plus + 1);
    if (field.degree() != 2)
      throw UsageError("element '" + text + "' needs a quadratic field (--ext)");
    if (tail.empty() || tail.back() != 't' || !parse_u64(text.substr(0, plus), c0) ||
        !parse_u64(tail.substr(0, tail.size() - 1), c1))
      throw UsageError("bad element '" + text + "', expected c0 or c0+c1t");
  }
  uint64_t p = field.characteristic();
  if (c0 >= p || c1 >= p)
    throw UsageError("element '" + text + "' has components outside [0, " + std::to_string(p) + ")");
  return field.element(c0, c1);
}

}  // namespace fptlab
