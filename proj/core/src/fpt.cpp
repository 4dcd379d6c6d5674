#include "fptlab/fpt.hpp"

#include <sstream>

namespace fptlab {

namespace {

struct NuLevel {
  NuRecord rec;
  MultiPoly<FieldElement> power_at_nu;
};

bool outside_ideal(const MultiPoly<FieldElement>& reduced_power) { return !reduced_power.is_zero(); }

// One ladder level. prev_nu narrows the search to the bracket; without it
// (e = 1) the ceiling p^e - 1 is the start. Descending keeps the search
// definitional: if the bracket floor were ever passed without a hit, the
// loop would simply keep going down to N = 0, where f^0 = 1 always wins.
NuLevel nu_level(const LegendreCurve& curve, uint32_t e, const std::optional<uint64_t>& prev_nu,
                 size_t budget) {
  uint64_t p = curve.a.p();
  FrobeniusIdeal ideal(p, e);
  uint64_t hi = prev_nu ? std::min(*prev_nu * p + p - 1, ideal.q - 1) : ideal.q - 1;

  uint64_t n = hi;
  MultiPoly<FieldElement> power(curve.a.zero_like());
  for (;;) {
    power = multi_pow_truncated(curve.cubic, n, &ideal, budget);
    if (outside_ideal(power)) break;
    if (n == 0) throw Error("f^0 cannot lie in a proper ideal");
    --n;
  }

  if (n == hi) {
    // the descent never established the other side; do it explicitly
    MultiPoly<FieldElement> above = multi_pow_truncated(curve.cubic, n + 1, &ideal, budget);
    if (outside_ideal(above))
      throw MismatchDetected("f^" + std::to_string(n + 1) + " escapes m^[p^" + std::to_string(e) +
                             "] above the bracket top for p=" + std::to_string(p) +
                             ", a=" + element_to_string(curve.a));
  }

  NuRecord rec;
  rec.e = e;
  rec.nu = n;
  rec.ratio = Rat64(static_cast<long long>(n), static_cast<long long>(ideal.q));
  rec.saturated = n == ideal.q - 1;
  if (n > 0) {
    MembershipResult mem = is_in_frobenius_power(power, ideal);
    rec.witness = mem.witness;  // power is reduced and nonzero, so a witness exists
  }
  return {std::move(rec), std::move(power)};
}

std::vector<NuLevel> nu_levels(const LegendreCurve& curve, uint32_t e_max, size_t budget) {
  if (e_max < 1) throw Error("level must be at least 1");
  std::vector<NuLevel> levels;
  levels.reserve(e_max);
  std::optional<uint64_t> prev;
  for (uint32_t e = 1; e <= e_max; ++e) {
    levels.push_back(nu_level(curve, e, prev, budget));
    prev = levels.back().rec.nu;
  }
  return levels;
}

CurveClass classification_of(const LegendreCurve& curve) {
  return curve.a.p() == 2 ? CurveClass::Char2 : classify(curve).kind;
}

bool rat_le(const Rat64& a, const Rat64& b) { return !(b < a); }

}  // namespace

NuRecord nu(const LegendreCurve& curve, uint32_t e, const FptOptions& opt) {
  return nu_levels(curve, e, opt.term_budget).back().rec;
}

std::vector<NuRecord> nu_table(const LegendreCurve& curve, uint32_t e_max, const FptOptions& opt) {
  std::vector<NuRecord> out;
  for (NuLevel& lvl : nu_levels(curve, e_max, opt.term_budget)) out.push_back(std::move(lvl.rec));
  return out;
}

FtResult ft_closed_form(const LegendreCurve& curve) {
  FtResult res;
  res.method = "closed-form";
  uint64_t p = curve.a.p();
  if (p == 2) {
    res.classification = CurveClass::Char2;
    res.ft = Rat64(1, 2);
    return res;
  }
  res.classification = classify(curve).kind;
  res.ft = res.classification == CurveClass::Ordinary
               ? Rat64(1, 1)
               : Rat64(static_cast<long long>(p - 1), static_cast<long long>(p));
  return res;
}

FtResult ft_estimate(const LegendreCurve& curve, uint32_t e_max, const FptOptions& opt) {
  FtResult res;
  res.method = "brute-force";
  res.classification = classification_of(curve);
  res.table = nu_table(curve, e_max, opt);
  for (size_t i = 1; i < res.table.size(); ++i)
    if (res.table[i].ratio < res.table[i - 1].ratio)
      throw MismatchDetected("nu ratios decreased between levels " + std::to_string(i) + " and " +
                             std::to_string(i + 1));
  const NuRecord& last = res.table.back();
  res.ft = last.ratio;
  res.ft_is_lower_bound = true;
  long long q = 1;
  for (uint32_t i = 0; i < last.e; ++i) q *= static_cast<long long>(curve.a.p());
  res.upper_bound = Rat64(static_cast<long long>(last.nu) + 1, q);
  return res;
}

CrossCheckReport cross_check(const LegendreCurve& curve, uint32_t e_max, const FptOptions& opt) {
  uint64_t p = curve.a.p();
  CrossCheckReport report;
  report.classification = classification_of(curve);
  report.closed_ft = ft_closed_form(curve).ft;

  std::vector<NuLevel> levels = nu_levels(curve, e_max, opt.term_budget);
  uint64_t n1 = (p - 1) / 2;  // meaningful for odd p only
  uint64_t q = 1;
  bool all_ok = true;
  std::ostringstream detail;

  for (uint32_t e = 1; e <= e_max; ++e) {
    q *= p;
    const NuLevel& lvl = levels[e - 1];
    LevelCheck chk;
    chk.record = lvl.rec;

    uint64_t q_prev = q / p;
    switch (report.classification) {
      case CurveClass::Ordinary:
        chk.expected_nu = q - 1;
        break;
      case CurveClass::Supersingular:
        chk.expected_nu = q - q_prev - 1;
        break;
      case CurveClass::Char2:
        chk.expected_nu = q / 2 - 1;
        break;
    }
    chk.nu_matches = lvl.rec.nu == chk.expected_nu;

    chk.bracket_ok = true;
    if (e >= 2) {
      uint64_t prev = levels[e - 2].rec.nu;
      chk.bracket_ok = p * prev <= lvl.rec.nu && lvl.rec.nu <= p * prev + p - 1;
    }

    // witness side: the recorded term, plus the closed-form witness monomial
    // [2m, 2n, n+m] with n = n1 p^{e-1}, m = n - 1 (supersingular and char-2)
    // or [N, N, N] (ordinary), whose coefficient C(N, n) H_m(a) must appear
    const MultiPoly<FieldElement>& power = lvl.power_at_nu;
    switch (report.classification) {
      case CurveClass::Ordinary: {
        ExpVec k(static_cast<uint32_t>(q - 1), static_cast<uint32_t>(q - 1),
                 static_cast<uint32_t>(q - 1));
        FieldElement expect = critical_coefficient(q - 1, (q - 1) / 2, (q - 1) / 2, curve.a);
        chk.witness_ok = lvl.rec.witness == std::optional<ExpVec>(k) && !expect.is_zero() &&
                         power.coefficient_of(k) == expect;
        break;
      }
      case CurveClass::Supersingular: {
        uint64_t n = n1 * q_prev;
        uint64_t m = n - 1;
        ExpVec k(static_cast<uint32_t>(2 * m), static_cast<uint32_t>(2 * n),
                 static_cast<uint32_t>(n + m));
        FieldElement expect = critical_coefficient(n + m, n, m, curve.a);
        chk.witness_ok = lvl.rec.witness.has_value() && !expect.is_zero() &&
                         power.coefficient_of(k) == expect;
        break;
      }
      case CurveClass::Char2: {
        if (e == 1) {
          chk.witness_ok = lvl.rec.nu == 0 && !lvl.rec.witness.has_value();
        } else {
          uint64_t n = q / 4;
          uint64_t m = n - 1;
          ExpVec k(static_cast<uint32_t>(2 * m), static_cast<uint32_t>(2 * n),
                   static_cast<uint32_t>(n + m));
          FieldElement expect = critical_coefficient(n + m, n, m, curve.a);
          chk.witness_ok = lvl.rec.witness.has_value() && !expect.is_zero() &&
                           power.coefficient_of(k) == expect;
        }
        break;
      }
    }

    if (chk.nu_matches) {
      chk.status = LevelStatus::Ok;
    } else {
      // proven window: nu/q < FT_closed <= (nu+1)/q
      Rat64 lower = lvl.rec.ratio;
      Rat64 upper(static_cast<long long>(lvl.rec.nu) + 1, static_cast<long long>(q));
      bool window = lower < report.closed_ft && rat_le(report.closed_ft, upper);
      chk.status = window ? LevelStatus::NuDiffersBoundsHold : LevelStatus::BoundsViolated;
    }

    if (chk.status != LevelStatus::Ok || !chk.bracket_ok || !chk.witness_ok) {
      all_ok = false;
      detail << " [e=" << e << " nu=" << lvl.rec.nu << " expected=" << chk.expected_nu
             << (chk.status == LevelStatus::BoundsViolated ? " bounds-violated" : "")
             << (chk.status == LevelStatus::NuDiffersBoundsHold ? " nu-differs-bounds-hold" : "")
             << (!chk.bracket_ok ? " bracket-broken" : "")
             << (!chk.witness_ok ? " witness-failed" : "") << "]";
    }
    report.levels.push_back(std::move(chk));
  }

  if (!all_ok)
    throw MismatchDetected("cross-check failed for p=" + std::to_string(p) + ", a=" +
                           element_to_string(curve.a) + ":" + detail.str());
  report.pass = true;
  return report;
}

BoundPredicates bound_predicates(const MultiPoly<FieldElement>& f_power, uint64_t p, uint32_t e) {
  FrobeniusIdeal ideal(p, e);
  MembershipResult mem = is_in_frobenius_power(f_power, ideal);
  BoundPredicates out;
  out.lower_bound_holds = !mem.member;
  out.upper_bound_holds = mem.member;

  auto deg = f_power.homogeneous_degree();
  if (deg && *deg % 3 == 0) {
    uint64_t n = *deg / 3;
    bool ok = true;
    for (const auto& t : f_power.terms()) {
      ExpVec k = ExpVec::unpack(t.first);
      if (k.max() < n || (k.max() == n && !(k.kx == n && k.ky == n && k.kz == n))) {
        ok = false;
        break;
      }
    }
    out.homogeneous_floor_ok = ok;
  }
  return out;
}

}  // namespace fptlab
