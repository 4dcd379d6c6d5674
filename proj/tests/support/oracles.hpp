// Reference implementations for cross-checking the library: slow, obvious,
// and sharing no code with the fast paths. Full products with no
// truncation, factorial-based coefficients, exhaustive searches.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "fptlab/elliptic.hpp"
#include "fptlab/field.hpp"
#include "fptlab/multipoly.hpp"
#include "fptlab/ring.hpp"

namespace oracle {

using fptlab::BigInt;
using fptlab::ExpVec;
using fptlab::Field;
using fptlab::FieldElement;
using fptlab::MultiPoly;

using TermMap = std::map<std::array<uint32_t, 3>, FieldElement>;

inline TermMap to_map(const MultiPoly<FieldElement>& f) {
  TermMap m;
  for (const auto& [key, c] : f.terms()) {
    ExpVec k = ExpVec::unpack(key);
    m[{k.kx, k.ky, k.kz}] = c;
  }
  return m;
}

inline MultiPoly<FieldElement> from_map(const TermMap& m, const FieldElement& zero) {
  std::vector<std::pair<ExpVec, FieldElement>> terms;
  for (const auto& [k, c] : m)
    if (!c.is_zero()) terms.emplace_back(ExpVec(k[0], k[1], k[2]), c);
  return MultiPoly<FieldElement>(std::move(terms), zero);
}

inline TermMap naive_mul(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::array<uint32_t, 3> k = {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
      FieldElement prod = ca * cb;
      auto it = out.find(k);
      if (it == out.end())
        out.emplace(k, prod);
      else
        it->second += prod;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline TermMap naive_pow(const TermMap& f, uint64_t n, const FieldElement& one) {
  TermMap r = {{{0, 0, 0}, one}};
  for (uint64_t i = 0; i < n; ++i) r = naive_mul(r, f);
  return r;
}

/// Drop every term with some exponent >= q.
inline TermMap filter_below(const TermMap& f, uint64_t q) {
  TermMap out;
  for (const auto& [k, c] : f)
    if (k[0] < q && k[1] < q && k[2] < q) out.emplace(k, c);
  return out;
}

struct NaiveNu {
  uint64_t nu = 0;
  bool monotone = true;  // once a power falls into the ideal it stays there
};

/// Exhaustive scan of every N in [0, q-1], no bracketing assumptions.
inline NaiveNu naive_nu(const MultiPoly<FieldElement>& cubic, uint64_t p, uint32_t e) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) q *= p;
  TermMap f = to_map(cubic);
  FieldElement one = cubic.sample().one_like();
  TermMap power = {{{0, 0, 0}, one}};
  NaiveNu result;
  bool seen_inside = false;
  for (uint64_t n = 0; n < q; ++n) {
    if (n > 0) power = naive_mul(power, f);
    bool outside = !filter_below(power, q).empty();
    if (outside) {
      result.nu = n;
      if (seen_inside) result.monotone = false;
    } else {
      seen_inside = true;
    }
  }
  return result;
}

inline BigInt factorial(uint64_t n) {
  BigInt r = 1;
  for (uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial_factorial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline BigInt multinomial_factorial(uint64_t n, std::span<const uint64_t> parts) {
  BigInt r = factorial(n);
  for (uint64_t part : parts) r /= factorial(part);
  return r;
}

/// Reduce an exact integer into a prime field.
inline FieldElement mod_p(const BigInt& v, const Field& fp) {
  BigInt p = fp.characteristic();
  BigInt r = v % p;
  if (r < 0) r += p;
  return fp.element(r.convert_to<uint64_t>());
}

/// Deterministic homogeneous polynomial of the given total degree with
/// coefficients drawn uniformly (zeros included, so sparsity varies).
inline MultiPoly<FieldElement> random_homogeneous(std::mt19937_64& gen, const Field& k,
                                                  uint32_t degree) {
  std::uniform_int_distribution<uint64_t> c0(0, k.characteristic() - 1);
  std::vector<std::pair<ExpVec, FieldElement>> terms;
  for (uint32_t kx = 0; kx <= degree; ++kx)
    for (uint32_t ky = 0; ky + kx <= degree; ++ky) {
      FieldElement c =
          k.degree() == 2 ? k.element(c0(gen), c0(gen)) : k.element(c0(gen));
      if (!c.is_zero()) terms.emplace_back(ExpVec(kx, ky, degree - kx - ky), c);
    }
  return MultiPoly<FieldElement>(std::move(terms), k.zero());
}

inline MultiPoly<FieldElement> random_poly(std::mt19937_64& gen, const Field& k,
                                           uint32_t max_degree, size_t n_terms) {
  std::uniform_int_distribution<uint64_t> c0(1, k.characteristic() - 1);
  std::uniform_int_distribution<uint32_t> exp(0, max_degree);
  std::vector<std::pair<ExpVec, FieldElement>> terms;
  for (size_t i = 0; i < n_terms; ++i) {
    FieldElement c = k.degree() == 2 ? k.element(c0(gen), c0(gen)) : k.element(c0(gen));
    terms.emplace_back(ExpVec(exp(gen), exp(gen), exp(gen)), c);
  }
  return MultiPoly<FieldElement>(std::move(terms), k.zero());
}

}  // namespace oracle
