#include "fptlab/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace fptlab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json element_obj(const FieldElement& el) {
  ordered_json j;
  j["p"] = el.p();
  j["deg"] = el.degree();
  j["c"] = el.degree() == 1 ? ordered_json::array({el.c0()})
                            : ordered_json::array({el.c0(), el.c1()});
  return j;
}

ordered_json ratio_obj(const Rat64& r) {
  ordered_json j;
  j["num"] = r.num;
  j["den"] = r.den;
  return j;
}

ordered_json witness_obj(const std::optional<ExpVec>& w) {
  if (!w) return nullptr;
  return ordered_json::array({w->kx, w->ky, w->kz});
}

ordered_json nu_record_obj(const NuRow& row) {
  ordered_json j;
  j["p"] = row.p;
  j["a"] = element_obj(row.a);
  j["e"] = row.record.e;
  j["nu"] = row.record.nu;
  j["witness"] = witness_obj(row.record.witness);
  j["ratio"] = ratio_obj(row.record.ratio);
  j["classification"] = curve_class_name(row.classification);
  return j;
}

std::string witness_csv(const std::optional<ExpVec>& w) {
  if (!w) return "none";
  return std::to_string(w->kx) + " " + std::to_string(w->ky) + " " + std::to_string(w->kz);
}

std::string witness_text(const std::optional<ExpVec>& w) {
  if (!w) return "none";
  return "[" + std::to_string(w->kx) + "," + std::to_string(w->ky) + "," + std::to_string(w->kz) +
         "]";
}

constexpr const char* kNuCsvHeader = "p,a,e,nu,witness,ratio_num,ratio_den,classification";

std::string nu_csv_row(const NuRow& row) {
  std::ostringstream os;
  os << row.p << ',' << element_to_string(row.a) << ',' << row.record.e << ',' << row.record.nu
     << ',' << witness_csv(row.record.witness) << ',' << row.record.ratio.num << ','
     << row.record.ratio.den << ',' << curve_class_name(row.classification);
  return os.str();
}

std::string nu_table_text(const std::vector<NuRow>& rows) {
  std::ostringstream os;
  os << std::setw(4) << "e" << std::setw(12) << "nu" << std::setw(12) << "ratio"
     << "  witness\n";
  for (const NuRow& row : rows) {
    os << std::setw(4) << row.record.e << std::setw(12) << row.record.nu << std::setw(12)
       << row.record.ratio.str() << "  " << witness_text(row.record.witness) << "\n";
  }
  return os.str();
}

std::vector<NuRow> make_rows(uint64_t p, const FieldElement& a, CurveClass cls,
                             const std::vector<NuRecord>& table) {
  std::vector<NuRow> rows;
  rows.reserve(table.size());
  for (const NuRecord& rec : table) rows.push_back({p, a, cls, rec});
  return rows;
}

}  // namespace

std::string element_json(const FieldElement& el) { return element_obj(el).dump(); }

std::string multipoly_json(const MultiPoly<FieldElement>& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : f.terms()) {
    ExpVec k = ExpVec::unpack(t.first);
    ordered_json term;
    term["k"] = ordered_json::array({k.kx, k.ky, k.kz});
    term["c"] = element_obj(t.second);
    arr.push_back(std::move(term));
  }
  return arr.dump();
}

std::string unipoly_text(const UniPoly<FieldElement>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    const FieldElement& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = element_to_string(c);
    if (c.degree() == 2) cs = "(" + cs + ")";  // "1+0t" is as ambiguous as "1+2t"
    if (i == 0) {
      os << cs;
    } else {
      if (!c.is_one()) os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string render_nu_rows(const std::vector<NuRow>& rows, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const NuRow& row : rows) arr.push_back(nu_record_obj(row));
      return arr.dump() + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << kNuCsvHeader << "\n";
      for (const NuRow& row : rows) os << nu_csv_row(row) << "\n";
      return os.str();
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      for (const NuRow& row : rows) {
        os << "p=" << row.p << " a=" << element_to_string(row.a) << " e=" << row.record.e
           << ": nu=" << row.record.nu << " ratio=" << row.record.ratio.str()
           << " witness=" << witness_text(row.record.witness)
           << " classification=" << curve_class_name(row.classification) << "\n";
      }
      return os.str();
    }
  }
  throw Error("unreachable output format");
}

std::string render_ft(uint64_t p, const FieldElement& a, const FtResult& res, OutputFormat fmt) {
  std::vector<NuRow> rows = make_rows(p, a, res.classification, res.table);
  switch (fmt) {
    case OutputFormat::Json: {
      ordered_json j;
      j["p"] = p;
      j["a"] = element_obj(a);
      j["classification"] = curve_class_name(res.classification);
      j["method"] = res.method;
      j["ft"] = ratio_obj(res.ft);
      j["ft_is_lower_bound"] = res.ft_is_lower_bound;
      j["upper_bound"] = res.upper_bound ? ratio_obj(*res.upper_bound) : ordered_json(nullptr);
      ordered_json table = ordered_json::array();
      for (const NuRow& row : rows) table.push_back(nu_record_obj(row));
      j["table"] = std::move(table);
      return j.dump() + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << kNuCsvHeader << "\n";
      for (const NuRow& row : rows) os << nu_csv_row(row) << "\n";
      return os.str();
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      os << "p = " << p << ", a = " << element_to_string(a)
         << ", classification = " << curve_class_name(res.classification) << "\n";
      if (!rows.empty()) os << nu_table_text(rows);
      if (res.ft_is_lower_bound) {
        os << "FT >= " << res.ft.str();
        if (res.upper_bound) os << ", FT <= " << res.upper_bound->str();
        os << "  (brute force)\n";
      } else {
        os << "FT = " << res.ft.str() << "  (closed form)\n";
      }
      return os.str();
    }
  }
  throw Error("unreachable output format");
}

std::string render_cross_check(uint64_t p, const FieldElement& a, const CrossCheckReport& rep,
                               OutputFormat fmt) {
  std::vector<NuRecord> table;
  table.reserve(rep.levels.size());
  for (const LevelCheck& lvl : rep.levels) table.push_back(lvl.record);
  std::vector<NuRow> rows = make_rows(p, a, rep.classification, table);
  switch (fmt) {
    case OutputFormat::Json: {
      ordered_json j;
      j["p"] = p;
      j["a"] = element_obj(a);
      j["classification"] = curve_class_name(rep.classification);
      j["method"] = "cross-check";
      j["ft"] = ratio_obj(rep.closed_ft);
      j["pass"] = rep.pass;
      ordered_json tbl = ordered_json::array();
      for (const NuRow& row : rows) tbl.push_back(nu_record_obj(row));
      j["table"] = std::move(tbl);
      return j.dump() + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << kNuCsvHeader << "\n";
      for (const NuRow& row : rows) os << nu_csv_row(row) << "\n";
      return os.str();
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      os << "p = " << p << ", a = " << element_to_string(a)
         << ", classification = " << curve_class_name(rep.classification) << "\n";
      os << nu_table_text(rows);
      os << "FT = " << rep.closed_ft.str() << "  (closed form)\n";
      os << "cross-check: " << (rep.pass ? "PASS" : "FAIL") << "\n";
      return os.str();
    }
  }
  throw Error("unreachable output format");
}

std::string render_elements(const std::vector<FieldElement>& elements, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const FieldElement& el : elements) arr.push_back(element_obj(el));
      return arr.dump() + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "p,deg,c0,c1\n";
      for (const FieldElement& el : elements) {
        os << el.p() << ',' << el.degree() << ',' << el.c0() << ',';
        if (el.degree() == 2) os << el.c1();
        os << "\n";
      }
      return os.str();
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      for (const FieldElement& el : elements) os << element_to_string(el) << "\n";
      return os.str();
    }
  }
  throw Error("unreachable output format");
}

std::string render_deuring(uint32_t n, uint64_t p, const UniPoly<FieldElement>& h,
                           const std::optional<std::pair<FieldElement, FieldElement>>& eval,
                           const std::optional<std::vector<DeuringFactor>>& factors,
                           OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: {
      ordered_json j;
      j["n"] = n;
      j["p"] = p;
      ordered_json coeffs = ordered_json::array();
      for (uint32_t i = 0; i <= n; ++i) coeffs.push_back(h.coeff(i).c0());
      j["coeffs"] = std::move(coeffs);
      if (eval) {
        ordered_json ev;
        ev["at"] = element_obj(eval->first);
        ev["value"] = element_obj(eval->second);
        j["eval"] = std::move(ev);
      }
      if (factors) {
        ordered_json arr = ordered_json::array();
        for (const DeuringFactor& f : *factors) {
          ordered_json fj;
          fj["digit"] = f.digit;
          fj["power"] = f.power;
          arr.push_back(std::move(fj));
        }
        j["factors"] = std::move(arr);
      }
      return j.dump() + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "i,c\n";
      for (uint32_t i = 0; i <= n; ++i) os << i << ',' << h.coeff(i).c0() << "\n";
      return os.str();
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      os << "H_" << n << " mod " << p << " = " << unipoly_text(h, "l") << "\n";
      if (eval)
        os << "H_" << n << "(" << element_to_string(eval->first)
           << ") = " << element_to_string(eval->second) << "\n";
      if (factors) {
        os << "factors:";
        for (const DeuringFactor& f : *factors) os << " H_" << f.digit << "^" << f.power;
        os << "\n";
      }
      return os.str();
    }
  }
  throw Error("unreachable output format");
}

std::string render_verify(const std::vector<VerifyRecord>& records, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const VerifyRecord& r : records) {
        ordered_json j;
        j["lemma"] = r.lemma;
        j["p"] = r.p;
        j["pass"] = r.pass;
        arr.push_back(std::move(j));
      }
      return arr.dump() + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "lemma,p,pass\n";
      for (const VerifyRecord& r : records)
        os << r.lemma << ',' << r.p << ',' << (r.pass ? "true" : "false") << "\n";
      return os.str();
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      for (const VerifyRecord& r : records) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(24) << r.lemma
           << std::right << " p=" << r.p << "\n";
      }
      return os.str();
    }
  }
  throw Error("unreachable output format");
}

}  // namespace fptlab
