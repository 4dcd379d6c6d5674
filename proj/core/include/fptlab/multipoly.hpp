#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "fptlab/errors.hpp"
#include "fptlab/field.hpp"
#include "fptlab/ring.hpp"

namespace fptlab {

inline constexpr unsigned kExpBits = 21;
inline constexpr uint32_t kExpMax = (uint32_t(1) << kExpBits) - 1;
inline constexpr size_t kDefaultTermBudget = 20'000'000;

/// Exponent vector of a monomial x^kx y^ky z^kz. Packs into one 64-bit key
/// whose numeric order equals lexicographic order on (kx, ky, kz).
struct ExpVec {
  uint32_t kx = 0, ky = 0, kz = 0;

  ExpVec() = default;
  ExpVec(uint32_t x, uint32_t y, uint32_t z) : kx(x), ky(y), kz(z) {
    if (kx > kExpMax || ky > kExpMax || kz > kExpMax)
      throw ResourceCap("monomial exponent exceeds 2^21 - 1");
  }

  uint64_t packed() const {
    return (uint64_t(kx) << (2 * kExpBits)) | (uint64_t(ky) << kExpBits) | uint64_t(kz);
  }
  static ExpVec unpack(uint64_t key) {
    ExpVec v;
    v.kx = static_cast<uint32_t>(key >> (2 * kExpBits)) & kExpMax;
    v.ky = static_cast<uint32_t>(key >> kExpBits) & kExpMax;
    v.kz = static_cast<uint32_t>(key) & kExpMax;
    return v;
  }

  uint32_t max() const { return std::max(kx, std::max(ky, kz)); }
  uint64_t total() const { return uint64_t(kx) + ky + kz; }

  ExpVec operator+(const ExpVec& o) const { return ExpVec(kx + o.kx, ky + o.ky, kz + o.kz); }

  bool operator==(const ExpVec& o) const { return kx == o.kx && ky == o.ky && kz == o.kz; }
  bool operator<(const ExpVec& o) const { return packed() < o.packed(); }
};

/// The ideal (x^q, y^q, z^q) with q = p^e. A monomial lies in it iff some
/// exponent reaches q, so reduction just drops those terms.
struct FrobeniusIdeal {
  uint64_t p;
  uint32_t e;
  uint64_t q;

  FrobeniusIdeal(uint64_t p_, uint32_t e_) : p(p_), e(e_) {
    if (p < 2) throw Error("Frobenius ideal needs p >= 2");
    if (e < 1) throw Error("Frobenius ideal needs level e >= 1");
    q = 1;
    for (uint32_t i = 0; i < e; ++i) {
      if (q > kExpMax / p) throw ResourceCap("p^e exceeds the exponent packing range");
      q *= p;
    }
  }

  bool contains_term(const ExpVec& k) const { return k.max() >= q; }
};

/// Sparse trivariate polynomial over R: sorted vector of (packed key,
/// coefficient) with no zero coefficients. Carries a zero sample like
/// UniPoly. Designed for reduction mod Frobenius ideals: multiplication can
/// drop every product term the ideal absorbs as it goes.
template <Ring R>
class MultiPoly {
 public:
  using Term = std::pair<uint64_t, R>;

  explicit MultiPoly(R zero_sample) : zero_(std::move(zero_sample)) {}

  MultiPoly(std::vector<std::pair<ExpVec, R>> terms, R zero_sample) : zero_(std::move(zero_sample)) {
    std::map<uint64_t, R> acc;
    for (auto& [k, c] : terms) {
      auto it = acc.find(k.packed());
      if (it == acc.end())
        acc.emplace(k.packed(), std::move(c));
      else
        it->second = it->second + c;
    }
    terms_.reserve(acc.size());
    for (auto& [key, c] : acc)
      if (!fptlab::is_zero(c)) terms_.emplace_back(key, std::move(c));
  }

  static MultiPoly one_like(const R& sample) {
    MultiPoly f(ring_zero(sample));
    f.terms_.emplace_back(0, ring_one(sample));
    return f;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const R& sample() const { return zero_; }

  const R& coefficient_of(const ExpVec& k) const {
    uint64_t key = k.packed();
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, uint64_t v) { return t.first < v; });
    return it != terms_.end() && it->first == key ? it->second : zero_;
  }

  /// Total degree if every term has the same one; nullopt otherwise.
  /// The zero polynomial reports degree 0.
  std::optional<uint64_t> homogeneous_degree() const {
    if (terms_.empty()) return 0;
    uint64_t d = ExpVec::unpack(terms_[0].first).total();
    for (const Term& t : terms_)
      if (ExpVec::unpack(t.first).total() != d) return std::nullopt;
    return d;
  }

  MultiPoly operator+(const MultiPoly& o) const { return merged(o, false); }
  MultiPoly operator-(const MultiPoly& o) const { return merged(o, true); }

  MultiPoly operator-() const {
    MultiPoly out(zero_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.emplace_back(t.first, -t.second);
    return out;
  }

  MultiPoly scale(const R& c) const {
    MultiPoly out(zero_);
    if (fptlab::is_zero(c)) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      R v = t.second * c;
      if (!fptlab::is_zero(v)) out.terms_.emplace_back(t.first, std::move(v));
    }
    return out;
  }

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Drops every term the ideal absorbs.
  MultiPoly reduced(const FrobeniusIdeal& ideal) const {
    MultiPoly out(zero_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
      if (!ideal.contains_term(ExpVec::unpack(t.first))) out.terms_.push_back(t);
    return out;
  }

 private:
  template <Ring S>
  friend MultiPoly<S> multi_mul_truncated(const MultiPoly<S>&, const MultiPoly<S>&,
                                          const FrobeniusIdeal*, size_t);

  MultiPoly merged(const MultiPoly& o, bool subtract) const {
    MultiPoly out(zero_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        const Term& t = o.terms_[j++];
        out.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
      } else {
        R c = subtract ? terms_[i].second - o.terms_[j].second : terms_[i].second + o.terms_[j].second;
        if (!fptlab::is_zero(c)) out.terms_.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
  R zero_;
};

struct MembershipResult {
  bool member = false;
  std::optional<ExpVec> witness;  // lex-smallest term outside the ideal
};

/// f lies in (x^q, y^q, z^q) iff every term does. Accepts reduced or
/// unreduced input; the zero polynomial is a member.
template <Ring R>
MembershipResult is_in_frobenius_power(const MultiPoly<R>& f, const FrobeniusIdeal& ideal) {
  for (const auto& t : f.terms()) {
    ExpVec k = ExpVec::unpack(t.first);
    if (!ideal.contains_term(k)) return {false, k};
  }
  return {true, std::nullopt};
}

namespace detail {

// Dense delayed-mod product for field coefficients. Both inputs must be
// homogeneous, so kz is implied by (kx, ky) and the accumulator is a 2-D
// grid. Residues stay below p <= 1024, which keeps every slot far from
// 64-bit overflow without per-step reduction.
template <int DEG>
void dense_accumulate(const std::vector<uint32_t>& axy, const std::vector<uint64_t>& ac0,
                      const std::vector<uint64_t>& ac1, const std::vector<uint32_t>& bxy,
                      const std::vector<uint64_t>& bc0, const std::vector<uint64_t>& bc1,
                      uint32_t bx_cap, uint32_t by_cap, uint64_t lo_cap, uint32_t width,
                      uint64_t m0, uint64_t m1, std::vector<uint64_t>& r0,
                      std::vector<uint64_t>& r1) {
  for (size_t i = 0; i < axy.size(); ++i) {
    uint32_t axi = axy[i] >> 16, ayi = axy[i] & 0xffff;
    uint64_t a0 = ac0[i], a1 = DEG == 2 ? ac1[i] : 0;
    for (size_t j = 0; j < bxy.size(); ++j) {
      uint32_t kx = axi + (bxy[j] >> 16);
      if (kx > bx_cap) continue;
      uint32_t ky = ayi + (bxy[j] & 0xffff);
      if (ky > by_cap || kx + ky < lo_cap) continue;
      size_t idx = size_t(kx) * width + ky;
      if constexpr (DEG == 1) {
        r0[idx] += a0 * bc0[j];
      } else {
        uint64_t b0 = bc0[j], b1 = bc1[j];
        uint64_t a1b1 = a1 * b1;
        r0[idx] += a0 * b0 + a1b1 * m0;
        r1[idx] += a0 * b1 + a1 * b0 + a1b1 * m1;
      }
    }
  }
}

}  // namespace detail

/// Product of f and g with every term absorbed by the ideal discarded on
/// the fly; pass ideal = nullptr for the full product. Every surviving term
/// carries exactly the coefficient it has in the full product, because
/// exponents only grow: a dropped factor term cannot contribute to a kept
/// product term. Throws ResourceCap when the result would exceed budget
/// terms.
template <Ring R>
MultiPoly<R> multi_mul_truncated(const MultiPoly<R>& f, const MultiPoly<R>& g,
                                 const FrobeniusIdeal* ideal, size_t budget = kDefaultTermBudget) {
  MultiPoly<R> out(f.sample());
  if (f.is_zero() || g.is_zero()) return out;

  const uint64_t bound = ideal ? ideal->q : uint64_t(kExpMax) + 1;

  if constexpr (std::is_same_v<R, FieldElement>) {
    auto da = f.homogeneous_degree();
    auto db = g.homogeneous_degree();
    uint64_t p = f.sample().p();
    // without an ideal a product degree past the packing range must fall
    // through to the generic path, which reports it as ResourceCap
    if (da && db && p >= 2 && p <= 1024 && (ideal || *da + *db <= kExpMax)) {
      uint64_t d = *da + *db;
      auto axis_cap = [&](auto proj) {
        uint32_t ma = 0, mb = 0;
        for (const auto& t : f.terms()) ma = std::max(ma, proj(ExpVec::unpack(t.first)));
        for (const auto& t : g.terms()) mb = std::max(mb, proj(ExpVec::unpack(t.first)));
        return std::min<uint64_t>(uint64_t(ma) + mb, bound - 1);
      };
      uint64_t bx = axis_cap([](const ExpVec& k) { return k.kx; });
      uint64_t by = axis_cap([](const ExpVec& k) { return k.ky; });
      uint64_t lo = d >= bound ? d - (bound - 1) : 0;  // keeps kz = d-kx-ky below bound
      uint64_t area = (bx + 1) * (by + 1);
      if (bx <= 0xffff && by <= 0xffff && area <= (uint64_t(1) << 22)) {
        int deg = f.sample().degree();
        std::vector<uint32_t> axy, bxy;
        std::vector<uint64_t> ac0, ac1, bc0, bc1;
        auto load = [&](const MultiPoly<R>& src, std::vector<uint32_t>& xy,
                        std::vector<uint64_t>& c0, std::vector<uint64_t>& c1) {
          for (const auto& t : src.terms()) {
            ExpVec k = ExpVec::unpack(t.first);
            if (k.max() >= bound) continue;  // cannot contribute below the bound
            xy.push_back((k.kx << 16) | k.ky);
            c0.push_back(t.second.c0());
            c1.push_back(t.second.c1());
          }
        };
        load(f, axy, ac0, ac1);
        load(g, bxy, bc0, bc1);
        uint32_t width = static_cast<uint32_t>(by + 1);
        std::vector<uint64_t> r0(area, 0), r1;
        uint64_t m0 = 0, m1 = 0;
        if (deg == 2) {
          r1.assign(area, 0);
          FieldElement t_elem = f.sample().field().element(0, 1);
          FieldElement t_sq = t_elem * t_elem;
          m0 = t_sq.c0();
          m1 = t_sq.c1();
          detail::dense_accumulate<2>(axy, ac0, ac1, bxy, bc0, bc1, static_cast<uint32_t>(bx),
                                      static_cast<uint32_t>(by), lo, width, m0, m1, r0, r1);
        } else {
          detail::dense_accumulate<1>(axy, ac0, ac1, bxy, bc0, bc1, static_cast<uint32_t>(bx),
                                      static_cast<uint32_t>(by), lo, width, m0, m1, r0, r1);
        }
        Field fld = f.sample().field();
        std::vector<typename MultiPoly<R>::Term>& terms = out.terms_;
        for (size_t idx = 0; idx < area; ++idx) {
          uint64_t c0 = r0[idx] % p;
          uint64_t c1 = deg == 2 ? r1[idx] % p : 0;
          if (c0 == 0 && c1 == 0) continue;
          uint32_t kx = static_cast<uint32_t>(idx / width);
          uint32_t ky = static_cast<uint32_t>(idx % width);
          uint64_t kz = d - kx - ky;
          if (terms.size() >= budget) throw ResourceCap("product exceeds the term budget");
          terms.emplace_back(ExpVec(kx, ky, static_cast<uint32_t>(kz)).packed(),
                             fld.element(c0, c1));
        }
        return out;
      }
    }
  }

  // generic path: ordered-map accumulation, works for any coefficient ring
  std::map<uint64_t, R> acc;
  for (const auto& [ka, ca] : f.terms()) {
    ExpVec a = ExpVec::unpack(ka);
    if (a.max() >= bound) continue;
    for (const auto& [kb, cb] : g.terms()) {
      ExpVec b = ExpVec::unpack(kb);
      uint64_t kx = uint64_t(a.kx) + b.kx, ky = uint64_t(a.ky) + b.ky, kz = uint64_t(a.kz) + b.kz;
      if (kx >= bound || ky >= bound || kz >= bound) {
        if (ideal) continue;  // absorbed into the ideal
        throw ResourceCap("monomial exponent exceeds 2^21 - 1");
      }
      ExpVec k(static_cast<uint32_t>(kx), static_cast<uint32_t>(ky), static_cast<uint32_t>(kz));
      R prod = ca * cb;
      auto it = acc.find(k.packed());
      if (it == acc.end()) {
        if (acc.size() >= budget) throw ResourceCap("product exceeds the term budget");
        acc.emplace(k.packed(), std::move(prod));
      } else {
        it->second = it->second + prod;
      }
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [key, c] : acc)
    if (!fptlab::is_zero(c)) out.terms_.emplace_back(key, std::move(c));
  return out;
}

/// f^n by binary exponentiation, truncating after every multiplication.
/// Agrees with reducing the full power because reduction mod a monomial
/// ideal is a ring-map on the quotient: dropped terms never feed kept ones.
template <Ring R>
MultiPoly<R> multi_pow_truncated(const MultiPoly<R>& f, uint64_t n, const FrobeniusIdeal* ideal,
                                 size_t budget = kDefaultTermBudget) {
  MultiPoly<R> result = MultiPoly<R>::one_like(f.sample());
  MultiPoly<R> base = ideal ? f.reduced(*ideal) : f;
  while (n) {
    if (n & 1) {
      result = multi_mul_truncated(result, base, ideal, budget);
      if (result.is_zero()) return result;
    }
    n >>= 1;
    if (n) base = multi_mul_truncated(base, base, ideal, budget);
  }
  return result;
}

template <Ring R>
MultiPoly<R> ring_zero(const MultiPoly<R>& s) {
  return MultiPoly<R>(s.sample());
}

template <Ring R>
MultiPoly<R> ring_one(const MultiPoly<R>& s) {
  return MultiPoly<R>::one_like(s.sample());
}

template <Ring R>
bool is_zero(const MultiPoly<R>& a) {
  return a.is_zero();
}

}  // namespace fptlab
