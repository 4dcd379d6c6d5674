#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fptlab/errors.hpp"
#include "fptlab/ring.hpp"

namespace fptlab {

template <Ring R>
class UniPoly;

// Ring protocol declarations must precede the class body: its member
// templates call them through qualified names, which bind at definition.
template <Ring R>
UniPoly<R> ring_zero(const UniPoly<R>& s);
template <Ring R>
UniPoly<R> ring_one(const UniPoly<R>& s);
template <Ring R>
UniPoly<R> ring_from_int(const UniPoly<R>& s, long long n);
template <Ring R>
bool is_zero(const UniPoly<R>& a);
template <Ring R>
bool is_one(const UniPoly<R>& a);

/// Dense univariate polynomial over a commutative ring R. Coefficients are
/// stored ascending by exponent and kept normalized (no trailing zeros, the
/// zero polynomial has an empty vector). Every instance carries a zero
/// sample of R so it can mint constants in rings with runtime structure.
template <Ring R>
class UniPoly {
 public:
  explicit UniPoly(R zero_sample) : zero_(std::move(zero_sample)) {}

  UniPoly(std::vector<R> coeffs, R zero_sample)
      : coeffs_(std::move(coeffs)), zero_(std::move(zero_sample)) {
    normalize();
  }

  static UniPoly constant(R c) {
    R z = ring_zero(c);
    std::vector<R> v;
    v.push_back(std::move(c));
    return UniPoly(std::move(v), std::move(z));
  }

  static UniPoly monomial(R c, size_t k) {
    R z = ring_zero(c);
    std::vector<R> v(k + 1, z);
    v[k] = std::move(c);
    return UniPoly(std::move(v), std::move(z));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && fptlab::is_one(coeffs_[0]); }

  /// Degree; -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

  const R& coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : zero_; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& sample() const { return zero_; }

  const R& leading_coefficient() const {
    if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  R eval(const R& x) const {
    R acc = zero_;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<R> out(std::max(coeffs_.size(), o.coeffs_.size()), zero_);
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return UniPoly(std::move(out), zero_);
  }

  UniPoly operator-(const UniPoly& o) const {
    std::vector<R> out(std::max(coeffs_.size(), o.coeffs_.size()), zero_);
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return UniPoly(std::move(out), zero_);
  }

  UniPoly operator-() const {
    std::vector<R> out(coeffs_.size(), zero_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return UniPoly(std::move(out), zero_);
  }

  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(zero_);
    // skip zero coefficients of the sparser factor in the outer loop
    const UniPoly& a = nonzero_count() <= o.nonzero_count() ? *this : o;
    const UniPoly& b = &a == this ? o : *this;
    std::vector<R> out(coeffs_.size() + o.coeffs_.size() - 1, zero_);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (fptlab::is_zero(a.coeffs_[i])) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (fptlab::is_zero(b.coeffs_[j])) continue;
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return UniPoly(std::move(out), zero_);
  }

  UniPoly scale(const R& c) const {
    std::vector<R> out(coeffs_.size(), zero_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return UniPoly(std::move(out), zero_);
  }

  UniPoly pow(uint64_t e) const {
    UniPoly base = *this;
    UniPoly r = constant(ring_one(zero_));
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(zero_);
    std::vector<R> out(coeffs_.size() - 1, zero_);
    for (size_t i = 1; i < coeffs_.size(); ++i)
      out[i - 1] = coeffs_[i] * ring_from_int(zero_, static_cast<long long>(i));
    return UniPoly(std::move(out), zero_);
  }

  /// Term-wise antiderivative with zero constant term. Requires every index
  /// i+1 up to the degree to be invertible; over F_p that fails as soon as
  /// p divides i+1, hence NonInvertibleIndex.
  UniPoly antiderivative() const
    requires FieldRing<R>
  {
    if (is_zero()) return UniPoly(zero_);
    std::vector<R> out(coeffs_.size() + 1, zero_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (fptlab::is_zero(coeffs_[i])) continue;
      R idx = ring_from_int(zero_, static_cast<long long>(i + 1));
      if (fptlab::is_zero(idx))
        throw NonInvertibleIndex("antiderivative needs 1/" + std::to_string(i + 1));
      out[i + 1] = coeffs_[i] * ring_inv(idx);
    }
    return UniPoly(std::move(out), zero_);
  }

  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

 private:
  size_t nonzero_count() const {
    size_t n = 0;
    for (const R& c : coeffs_)
      if (!fptlab::is_zero(c)) ++n;
    return n;
  }

  void normalize() {
    while (!coeffs_.empty() && fptlab::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
  R zero_;
};

/// Quotient and remainder with deg r < deg b. Requires b nonzero.
template <FieldRing R>
std::pair<UniPoly<R>, UniPoly<R>> divmod(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<R>(a.sample()), a};
  R lead_inv = ring_inv(b.leading_coefficient());
  std::vector<R> rem(a.coeffs());
  std::vector<R> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, a.sample());
  for (long long k = a.degree() - b.degree(); k >= 0; --k) {
    R q = rem[static_cast<size_t>(k + b.degree())] * lead_inv;
    quot[static_cast<size_t>(k)] = q;
    if (fptlab::is_zero(q)) continue;
    for (long long j = 0; j <= b.degree(); ++j)
      rem[static_cast<size_t>(k + j)] = rem[static_cast<size_t>(k + j)] - q * b.coeff(static_cast<size_t>(j));
  }
  return {UniPoly<R>(std::move(quot), a.sample()), UniPoly<R>(std::move(rem), a.sample())};
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <FieldRing R>
UniPoly<R> gcd_monic(UniPoly<R> a, UniPoly<R> b) {
  while (!b.is_zero()) {
    UniPoly<R> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scale(ring_inv(a.leading_coefficient()));
}

/// Roots found by scanning the given domain, with multiplicities peeled off
/// by repeated synthetic division. Domain order is preserved in the output.
template <FieldRing R>
std::vector<std::pair<R, uint32_t>> roots_exhaustive(const UniPoly<R>& f, const std::vector<R>& domain) {
  if (f.is_zero()) throw ZeroPolynomial("every point is a root of the zero polynomial");
  std::vector<std::pair<R, uint32_t>> out;
  for (const R& x : domain) {
    if (!fptlab::is_zero(f.eval(x))) continue;
    uint32_t mult = 0;
    UniPoly<R> g = f;
    while (!g.is_zero() && fptlab::is_zero(g.eval(x))) {
      // divide by (X - x): synthetic division, exact because x is a root
      std::vector<R> q(static_cast<size_t>(g.degree()), g.sample());
      R carry = g.sample();
      for (long long i = g.degree(); i >= 1; --i) {
        carry = g.coeff(static_cast<size_t>(i)) + carry * x;
        q[static_cast<size_t>(i - 1)] = carry;
      }
      g = UniPoly<R>(std::move(q), g.sample());
      ++mult;
    }
    out.emplace_back(x, mult);
  }
  return out;
}

template <Ring R>
UniPoly<R> ring_zero(const UniPoly<R>& s) {
  return UniPoly<R>(s.sample());
}

template <Ring R>
UniPoly<R> ring_one(const UniPoly<R>& s) {
  return UniPoly<R>::constant(ring_one(s.sample()));
}

template <Ring R>
UniPoly<R> ring_from_int(const UniPoly<R>& s, long long n) {
  return UniPoly<R>::constant(ring_from_int(s.sample(), n));
}

template <Ring R>
bool is_zero(const UniPoly<R>& a) {
  return a.is_zero();
}

template <Ring R>
bool is_one(const UniPoly<R>& a) {
  return a.is_one();
}

}  // namespace fptlab
