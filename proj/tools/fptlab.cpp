// Command-line front end: nu / ft / ss-list / deuring / verify.
// Machine output (json/csv) goes to stdout and is byte-identical across
// runs; timing and diagnostics go to stderr.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "fptlab/deuring.hpp"
#include "fptlab/elliptic.hpp"
#include "fptlab/errors.hpp"
#include "fptlab/field.hpp"
#include "fptlab/fpt.hpp"
#include "fptlab/report.hpp"

namespace {

using namespace fptlab;

constexpr const char* kGrammar =
    "usage:\n"
    "  fptlab nu --p <prime> --a <elem> [--ext] --e <level> [--json|--csv]\n"
    "  fptlab ft --p <prime> --a <elem> [--ext] --emax <level> [--closed|--brute|--both] "
    "[--json|--csv]\n"
    "  fptlab ss-list --p <prime> [--field p|p2] [--json|--csv]\n"
    "  fptlab deuring --n <int> --p <prime> [--eval <elem>] [--factor] [--json|--csv]\n"
    "  fptlab verify --p-min <prime> --p-max <prime> [--suite lemmas|technical|fpt|all] "
    "[--json|--csv]\n"
    "elements: \"c0\" in F_p, \"c0+c1t\" in F_{p^2}\n";

struct CommonOpts {
  bool json = false;
  bool csv = false;
  size_t budget = kDefaultTermBudget;
  unsigned workers = 1;

  OutputFormat format() const {
    return json ? OutputFormat::Json : csv ? OutputFormat::Csv : OutputFormat::Text;
  }
  FptOptions fpt() const { return FptOptions{budget}; }
};

void add_common(CLI::App* sub, CommonOpts& c) {
  auto* j = sub->add_flag("--json", c.json, "JSON records on stdout");
  auto* v = sub->add_flag("--csv", c.csv, "CSV records on stdout");
  j->excludes(v);
  v->excludes(j);
  sub->add_option("--budget", c.budget, "cap on stored polynomial terms")->capture_default_str();
  sub->add_option("--workers", c.workers, "worker count hint (all computations are exact and run on one core)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void check_budget(const CommonOpts& c) {
  if (c.budget < 1000) throw UsageError("--budget must be at least 1000");
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Field curve_field(uint64_t p, bool ext) {
  if (!ext) return Field::prime(p);
  return p == 2 ? Field::gf4() : Field::quadratic(p);
}

int run_nu(uint64_t p, const std::string& a_text, bool ext, uint32_t e, const CommonOpts& c) {
  check_budget(c);
  Field k = curve_field(p, ext);
  FieldElement a = parse_element(a_text, k);
  LegendreCurve curve = make_curve(a);
  CurveClass cls = ft_closed_form(curve).classification;

  Stopwatch sw;
  NuRecord rec = nu(curve, e, c.fpt());
  std::cerr << "# nu p=" << p << " a=" << a_text << " e=" << e << ": " << sw.ms() << " ms\n";

  std::cout << render_nu_rows({NuRow{p, a, cls, rec}}, c.format());
  return 0;
}

int run_ft(uint64_t p, const std::string& a_text, bool ext, uint32_t e_max, bool closed,
           bool brute, const CommonOpts& c) {
  check_budget(c);
  Field k = curve_field(p, ext);
  FieldElement a = parse_element(a_text, k);
  LegendreCurve curve = make_curve(a);

  Stopwatch sw;
  std::string out;
  if (closed) {
    out = render_ft(p, a, ft_closed_form(curve), c.format());
  } else if (brute) {
    out = render_ft(p, a, ft_estimate(curve, e_max, c.fpt()), c.format());
  } else {
    out = render_cross_check(p, a, cross_check(curve, e_max, c.fpt()), c.format());
  }
  std::cerr << "# ft p=" << p << " a=" << a_text << " emax=" << e_max << ": " << sw.ms()
            << " ms\n";

  std::cout << out;
  return 0;
}

int run_ss_list(uint64_t p, const std::string& field_kind, const CommonOpts& c) {
  Field k = field_kind == "p2" ? (p == 2 ? Field::gf4() : Field::quadratic(p)) : Field::prime(p);

  Stopwatch sw;
  std::vector<FieldElement> values = supersingular_values(k);
  std::cerr << "# ss-list p=" << p << " field=" << field_kind << ": " << sw.ms() << " ms\n";

  std::cout << render_elements(values, c.format());
  return 0;
}

int run_deuring(uint32_t n, uint64_t p, const std::optional<std::string>& eval_text, bool factor,
                const CommonOpts& c) {
  if (n > 1'000'000) throw ResourceCap("deuring degree capped at 10^6");
  Field fp = Field::prime(p);

  Stopwatch sw;
  UniPoly<FieldElement> h = deuring_poly_fp(n, fp);

  std::optional<std::pair<FieldElement, FieldElement>> eval;
  if (eval_text) {
    if (eval_text->find('t') != std::string::npos) {
      Field ext = p == 2 ? Field::gf4() : Field::quadratic(p);
      FieldElement at = parse_element(*eval_text, ext);
      eval = std::pair(at, embed_poly(h, ext).eval(at));
    } else {
      FieldElement at = parse_element(*eval_text, fp);
      eval = std::pair(at, h.eval(at));
    }
  }

  std::optional<std::vector<DeuringFactor>> factors;
  if (factor) factors = deuring_lucas_factorization(n, fp);
  std::cerr << "# deuring n=" << n << " p=" << p << ": " << sw.ms() << " ms\n";

  std::cout << render_deuring(n, p, h, eval, factors, c.format());
  return 0;
}

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> ps;
  for (uint64_t p = std::max<uint64_t>(lo, 2); p <= hi; ++p)
    if (detail::is_prime_u64(p)) ps.push_back(p);
  return ps;
}

void verify_lemmas(const std::vector<uint64_t>& primes, std::vector<VerifyRecord>& records) {
  constexpr uint32_t kPascalMax = 60;
  constexpr uint32_t kFactorMax = 500;

  {
    Stopwatch sw;
    bool pascal = true;
    for (uint32_t n = 1; n <= kPascalMax && pascal; ++n) pascal = check_pascal_connection(n);
    records.push_back({"pascal-connection", 0, pascal});
    std::cerr << "# lemmas pascal-connection n<=" << kPascalMax << ": " << sw.ms() << " ms\n";
  }

  for (uint64_t p : primes) {
    if (p == 2) continue;  // these identities live in odd characteristic
    Stopwatch sw;
    records.push_back({"p-minus-one", p, check_p_minus_one(p)});
    records.push_back({"ode", p, check_ode(p)});
    records.push_back({"no-repeated-roots", p, check_no_repeated_roots(p).all()});
    records.push_back({"shared-roots", p, check_shared_roots(p)});

    bool fac = true;
    Field fp = Field::prime(p);
    for (uint32_t n = 0; n <= kFactorMax && fac; ++n) {
      try {
        deuring_lucas_factorization(n, fp);
      } catch (const FactorizationMismatch&) {
        fac = false;
      }
    }
    records.push_back({"lucas-factorization", p, fac});
    std::cerr << "# lemmas p=" << p << ": " << sw.ms() << " ms\n";
  }
}

void verify_technical(const std::vector<uint64_t>& primes, std::vector<VerifyRecord>& records) {
  constexpr uint32_t kNMax = 10;
  for (uint64_t p : primes) {
    Stopwatch sw;
    records.push_back({"technical-lemma", p, verify_technical_lemma(Field::prime(p), kNMax)});
    std::cerr << "# technical p=" << p << ": " << sw.ms() << " ms\n";
  }
}

void verify_fpt(const std::vector<uint64_t>& primes, const CommonOpts& c,
                std::vector<VerifyRecord>& records) {
  for (uint64_t p : primes) {
    Stopwatch sw;
    Field k = p == 2 ? Field::gf4() : Field::quadratic(p);
    uint32_t e_max = p == 2 ? 6 : p <= 5 ? 3 : 2;
    bool pass = true;
    for (const FieldElement& a : k.elements()) {
      if (a.is_zero() || a.is_one()) continue;
      try {
        cross_check(make_curve(a), e_max, c.fpt());
      } catch (const MismatchDetected& err) {
        pass = false;
        std::cerr << "# fpt-grid failure: " << err.what() << "\n";
      }
    }
    records.push_back({"fpt-grid", p, pass});
    std::cerr << "# fpt p=" << p << " emax=" << e_max << ": " << sw.ms() << " ms\n";
  }
}

int run_verify(uint64_t p_min, uint64_t p_max, const std::string& suite, const CommonOpts& c) {
  check_budget(c);
  if (p_min > p_max) throw UsageError("--p-min exceeds --p-max");
  std::vector<uint64_t> primes = primes_in(p_min, p_max);
  if (primes.empty()) throw UsageError("no primes in the requested range");

  std::vector<VerifyRecord> records;
  if (suite == "lemmas" || suite == "all") verify_lemmas(primes, records);
  if (suite == "technical" || suite == "all") verify_technical(primes, records);
  if (suite == "fpt" || suite == "all") verify_fpt(primes, c, records);

  std::cout << render_verify(records, c.format());
  bool all_pass = std::all_of(records.begin(), records.end(),
                              [](const VerifyRecord& r) { return r.pass; });
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"F-pure thresholds of Legendre cubics over small finite fields"};
  app.require_subcommand(1);

  uint64_t p = 0;
  std::string a_text;
  bool ext = false;
  uint32_t e = 1;
  uint32_t e_max = 1;
  bool closed = false, brute = false, both = false;
  std::string field_kind = "p";
  uint32_t n = 0;
  std::string eval_text;
  bool factor = false;
  uint64_t p_min = 0, p_max = 0;
  std::string suite = "all";

  CommonOpts nu_opts, ft_opts, ss_opts, de_opts, ve_opts;

  CLI::App* nu_cmd = app.add_subcommand("nu", "largest N with f^N outside m^[p^e]");
  nu_cmd->add_option("--p", p, "field characteristic (prime)")->required();
  nu_cmd->add_option("--a", a_text, "Legendre parameter, not 0 or 1")->required();
  nu_cmd->add_flag("--ext", ext, "read --a in F_{p^2} instead of F_p");
  nu_cmd->add_option("--e", e, "Frobenius level e >= 1")->required()->check(CLI::PositiveNumber);
  add_common(nu_cmd, nu_opts);

  CLI::App* ft_cmd = app.add_subcommand("ft", "F-pure threshold of the Legendre cubic");
  ft_cmd->add_option("--p", p, "field characteristic (prime)")->required();
  ft_cmd->add_option("--a", a_text, "Legendre parameter, not 0 or 1")->required();
  ft_cmd->add_flag("--ext", ext, "read --a in F_{p^2} instead of F_p");
  ft_cmd->add_option("--emax", e_max, "deepest Frobenius level")->required()->check(CLI::PositiveNumber);
  auto* fc = ft_cmd->add_flag("--closed", closed, "closed form only");
  auto* fb = ft_cmd->add_flag("--brute", brute, "brute-force convergents only");
  auto* fx = ft_cmd->add_flag("--both", both, "brute force checked against the closed form (default)");
  fc->excludes(fb)->excludes(fx);
  fb->excludes(fx);
  add_common(ft_cmd, ft_opts);

  CLI::App* ss_cmd = app.add_subcommand("ss-list", "supersingular Legendre parameters");
  ss_cmd->add_option("--p", p, "field characteristic (odd prime)")->required();
  ss_cmd->add_option("--field", field_kind, "search field: p (default) or p2")
      ->check(CLI::IsMember({"p", "p2"}));
  add_common(ss_cmd, ss_opts);

  CLI::App* de_cmd = app.add_subcommand("deuring", "Deuring polynomial H_n mod p");
  de_cmd->add_option("--n", n, "index n >= 0")->required();
  de_cmd->add_option("--p", p, "field characteristic (prime)")->required();
  CLI::Option* eval_opt = de_cmd->add_option("--eval", eval_text, "evaluate at an element (c0 or c0+c1t)");
  de_cmd->add_flag("--factor", factor, "base-p digit factorization");
  add_common(de_cmd, de_opts);

  CLI::App* ve_cmd = app.add_subcommand("verify", "machine-check the supporting lemmas");
  ve_cmd->add_option("--p-min", p_min, "first prime of the range")->required();
  ve_cmd->add_option("--p-max", p_max, "last prime of the range")->required();
  ve_cmd->add_option("--suite", suite, "lemmas | technical | fpt | all (default). fpt grows fast beyond p=13")
      ->check(CLI::IsMember({"lemmas", "technical", "fpt", "all"}));
  add_common(ve_cmd, ve_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    if (code == 0) return 0;
    std::cerr << "\n" << kGrammar;
    return 2;
  }

  try {
    if (nu_cmd->parsed()) return run_nu(p, a_text, ext, e, nu_opts);
    if (ft_cmd->parsed()) return run_ft(p, a_text, ext, e_max, closed, brute, ft_opts);
    if (ss_cmd->parsed()) return run_ss_list(p, field_kind, ss_opts);
    if (de_cmd->parsed())
      return run_deuring(n, p,
                         eval_opt->count() ? std::optional<std::string>(eval_text) : std::nullopt,
                         factor, de_opts);
    if (ve_cmd->parsed()) return run_verify(p_min, p_max, suite, ve_opts);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const CompositeModulus& err) {
    std::cerr << "error: " << err.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const UnsupportedCharacteristic& err) {
    std::cerr << "error: " << err.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const DegenerateParameter& err) {
    std::cerr << "error: " << err.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const CharTwoUnsupported& err) {
    std::cerr << "error: " << err.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const MismatchDetected& err) {
    std::cerr << "mismatch: " << err.what() << "\n";
    return 1;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 2;  // unreachable with require_subcommand(1)
}
