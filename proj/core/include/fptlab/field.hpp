#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fptlab/errors.hpp"

namespace fptlab {

namespace detail {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p);
uint64_t invmod_u64(uint64_t a, uint64_t p);
bool is_prime_u64(uint64_t n);

}  // namespace detail

class Field;

/// Element of F_p or of a quadratic extension F_p[t]/(t^2 - m1 t - m0),
/// stored as c0 + c1 t with residues in [0, p). Elements remember enough of
/// their field to do arithmetic; mixing fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement() = default;  // invalid placeholder, p() == 0

  uint64_t p() const { return p_; }
  int degree() const { return deg_; }
  uint64_t c0() const { return c0_; }
  uint64_t c1() const { return c1_; }

  bool is_zero() const { return c0_ == 0 && c1_ == 0; }
  bool is_one() const { return c0_ == 1 && c1_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const {
    return p_ == o.p_ && deg_ == o.deg_ && c0_ == o.c0_ && c1_ == o.c1_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inverse() const;
  FieldElement pow(uint64_t e) const;
  FieldElement frobenius() const { return pow(p_); }

  FieldElement zero_like() const;
  FieldElement one_like() const;
  FieldElement scalar_like(long long n) const;

  Field field() const;

 private:
  friend class Field;
  FieldElement(uint64_t p, int deg, uint64_t m0, uint64_t m1, uint64_t c0, uint64_t c1)
      : p_(p), deg_(deg), m0_(m0), m1_(m1), c0_(c0), c1_(c1) {}

  void check_same(const FieldElement& o) const;

  uint64_t p_ = 0;
  int deg_ = 0;
  uint64_t m0_ = 0;  // t^2 = m1 t + m0 when deg_ == 2
  uint64_t m1_ = 0;
  uint64_t c0_ = 0;
  uint64_t c1_ = 0;
};

/// Descriptor of F_p or F_{p^2} with a deterministic modulus choice:
/// for odd p the extension is F_p(t) with t^2 = d, d the least quadratic
/// non-residue; for p = 2 the only quadratic option is F_4 = F_2[t]/(t^2+t+1).
class Field {
 public:
  static constexpr uint64_t kDefaultEnumerationCap = uint64_t(1) << 32;

  /// F_p. Throws CompositeModulus unless p is prime.
  static Field prime(uint64_t p);

  /// F_{p^2} for odd prime p. Throws UnsupportedCharacteristic for p = 2
  /// (no quadratic non-residue exists; use gf4() for that field).
  static Field quadratic(uint64_t p);

  /// F_4 with t^2 + t + 1 = 0.
  static Field gf4();

  uint64_t characteristic() const { return p_; }
  int degree() const { return deg_; }
  /// d with t^2 = d, only meaningful for odd-p quadratic fields.
  uint64_t nonresidue() const { return m0_; }

  FieldElement zero() const { return FieldElement(p_, deg_, m0_, m1_, 0, 0); }
  FieldElement one() const { return FieldElement(p_, deg_, m0_, m1_, 1, 0); }
  FieldElement element(uint64_t c0, uint64_t c1 = 0) const;
  FieldElement from_int(long long n) const;
  /// Image of a prime-field element in this quadratic extension.
  FieldElement embed(const FieldElement& sub) const;
  bool contains(const FieldElement& el) const;

  /// All q elements in lexicographic order (c0 major, then c1).
  /// Throws FieldTooLarge if q would exceed cap.
  std::vector<FieldElement> elements(uint64_t cap = kDefaultEnumerationCap) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && deg_ == o.deg_ && m0_ == o.m0_ && m1_ == o.m1_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  Field(uint64_t p, int deg, uint64_t m0, uint64_t m1) : p_(p), deg_(deg), m0_(m0), m1_(m1) {}

  uint64_t p_;
  int deg_;
  uint64_t m0_;
  uint64_t m1_;
};

/// "c0" for prime fields, "c0+c1t" for quadratic ones.
std::string element_to_string(const FieldElement& el);

/// Inverse of element_to_string; accepts "c0" in either field kind and
/// "c0+c1t" only in quadratic ones. Components must already be reduced,
/// i.e. lie in [0, p). Throws UsageError on anything else.
FieldElement parse_element(const std::string& text, const Field& field);

inline FieldElement ring_zero(const FieldElement& a) { return a.zero_like(); }
inline FieldElement ring_one(const FieldElement& a) { return a.one_like(); }
inline FieldElement ring_from_int(const FieldElement& a, long long n) { return a.scalar_like(n); }
inline bool is_zero(const FieldElement& a) { return a.is_zero(); }
inline bool is_one(const FieldElement& a) { return a.is_one(); }
inline FieldElement ring_inv(const FieldElement& a) { return a.inverse(); }

}  // namespace fptlab
