#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fptlab/elliptic.hpp"
#include "fptlab/multipoly.hpp"
#include "fptlab/ring.hpp"

namespace fptlab {

struct FptOptions {
  size_t term_budget = kDefaultTermBudget;
};

/// One level of the nu ladder. Construction verifies both sides of the
/// defining property: f^nu lies outside m^[p^e] and f^{nu+1} inside.
struct NuRecord {
  uint32_t e = 1;
  uint64_t nu = 0;
  std::optional<ExpVec> witness;  // lex-smallest term of f^nu outside the ideal; none iff nu = 0
  Rat64 ratio;                    // nu / p^e, reduced
  bool saturated = false;         // nu hit the ceiling p^e - 1
};

struct FtResult {
  CurveClass classification = CurveClass::Ordinary;
  Rat64 ft;                        // exact for closed form; final lower ratio for estimates
  std::vector<NuRecord> table;     // empty for the closed form
  std::string method;              // "closed-form" | "brute-force"
  bool ft_is_lower_bound = false;
  std::optional<Rat64> upper_bound;  // (nu+1)/p^e for estimates
};

enum class LevelStatus { Ok, NuDiffersBoundsHold, BoundsViolated };

struct LevelCheck {
  NuRecord record;
  uint64_t expected_nu = 0;
  bool nu_matches = false;
  bool bracket_ok = false;  // p nu(p^{e-1}) <= nu(p^e) <= p nu(p^{e-1}) + p - 1
  bool witness_ok = false;  // recorded witness exists and the closed-form witness term is nonzero
  LevelStatus status = LevelStatus::Ok;
};

struct CrossCheckReport {
  CurveClass classification = CurveClass::Ordinary;
  Rat64 closed_ft;
  std::vector<LevelCheck> levels;
  bool pass = false;
};

/// Largest N with f^N outside m^[p^e], found by descending from the top of
/// the bracket [p nu(p^{e-1}), p nu(p^{e-1}) + p - 1] (clamped at p^e - 1);
/// every candidate power is its own truncated binary exponentiation.
NuRecord nu(const LegendreCurve& curve, uint32_t e, const FptOptions& opt = {});

/// NuRecords for e = 1..e_max; each level's bracket comes from the previous.
std::vector<NuRecord> nu_table(const LegendreCurve& curve, uint32_t e_max,
                               const FptOptions& opt = {});

/// 1 if ordinary, (p-1)/p if supersingular, 1/2 in characteristic 2.
FtResult ft_closed_form(const LegendreCurve& curve);

/// Brute-force lower bound nu(p^{e_max})/p^{e_max} together with the upper
/// bound (nu+1)/p^{e_max} and the full table. Asserts the ratio sequence is
/// non-decreasing (MismatchDetected otherwise).
FtResult ft_estimate(const LegendreCurve& curve, uint32_t e_max, const FptOptions& opt = {});

/// Runs the brute force against the closed form level by level. Checks the
/// exact expected nu, the bracket inequality and the witness term. Throws
/// MismatchDetected on any failure, with the message distinguishing a nu
/// that differs while the closed value still sits inside
/// (nu/p^e, (nu+1)/p^e] from an outright bound violation.
CrossCheckReport cross_check(const LegendreCurve& curve, uint32_t e_max,
                             const FptOptions& opt = {});

struct BoundPredicates {
  bool lower_bound_holds = false;    // some term of f^N avoids m^[p^e], so N/p^e < FT
  bool upper_bound_holds = false;    // f^N in m^[p^e], so FT <= N/p^e
  bool homogeneous_floor_ok = false; // every term has max k >= N; max k = N only at [N,N,N]
};

/// Predicates of a computed cubic power f^N (reduced or not) against
/// m^[p^e]. N is read off the homogeneous degree 3N.
BoundPredicates bound_predicates(const MultiPoly<FieldElement>& f_power, uint64_t p, uint32_t e);

}  // namespace fptlab
