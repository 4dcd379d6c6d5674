#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fptlab/deuring.hpp"
#include "fptlab/fpt.hpp"

namespace fptlab {

enum class OutputFormat { Text, Json, Csv };

/// A NuRecord together with the curve context it was computed in.
struct NuRow {
  uint64_t p = 0;
  FieldElement a;
  CurveClass classification = CurveClass::Ordinary;
  NuRecord record;
};

struct VerifyRecord {
  std::string lemma;
  uint64_t p = 0;  // 0 marks characteristic-zero checks
  bool pass = false;
};

// All renderers are deterministic: fixed key order, sorted data, no
// timestamps. Identical inputs give byte-identical output.

std::string render_nu_rows(const std::vector<NuRow>& rows, OutputFormat fmt);

std::string render_ft(uint64_t p, const FieldElement& a, const FtResult& res, OutputFormat fmt);

/// The --both view: closed form value plus the brute-force table it was
/// checked against.
std::string render_cross_check(uint64_t p, const FieldElement& a, const CrossCheckReport& rep,
                               OutputFormat fmt);

std::string render_elements(const std::vector<FieldElement>& elements, OutputFormat fmt);

std::string render_deuring(uint32_t n, uint64_t p, const UniPoly<FieldElement>& h,
                           const std::optional<std::pair<FieldElement, FieldElement>>& eval,
                           const std::optional<std::vector<DeuringFactor>>& factors,
                           OutputFormat fmt);

std::string render_verify(const std::vector<VerifyRecord>& records, OutputFormat fmt);

/// {"p": p, "deg": d, "c": [c0] or [c0, c1]}
std::string element_json(const FieldElement& el);

/// Sorted array of {"k": [kx, ky, kz], "c": <element>}.
std::string multipoly_json(const MultiPoly<FieldElement>& f);

/// Human form like "1 + 2*l + l^3"; quadratic coefficients parenthesized.
std::string unipoly_text(const UniPoly<FieldElement>& f, const std::string& var);

}  // namespace fptlab
