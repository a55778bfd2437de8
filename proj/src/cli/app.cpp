#include "rls/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rls/bigfloat/expr.hpp"
#include "rls/cli/catalog.hpp"
#include "rls/cli/scan.hpp"
#include "rls/errors.hpp"
#include "rls/identities/table2.hpp"
#include "rls/rootfinder/table1.hpp"

#ifndef RLS_DATA_DIR
#define RLS_DATA_DIR "data"
#endif

namespace rls::cli {

using bigfloat::BigReal;
using bigfloat::Precision;
using bigfloat::PrecisionScope;

namespace {

struct Common {
  long digits = 50;
  long guard = 15;
  std::string format = "json";
  std::string data_dir = RLS_DATA_DIR;

  Precision precision() const { return bigfloat::make_precision(digits, guard); }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--digits", c.digits, "decimal digits of the result")
      ->envname("RLS_DIGITS")
      ->check(CLI::Range(5L, 100000L))
      ->capture_default_str();
  cmd->add_option("--guard", c.guard, "hidden guard digits")
      ->envname("RLS_GUARD")
      ->check(CLI::Range(0L, 10000L))
      ->capture_default_str();
  cmd->add_option("--format", c.format, "json, csv or md")
      ->envname("RLS_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  cmd->add_option("--data-dir", c.data_dir, "directory holding the golden tables")
      ->envname("RLS_DATA_DIR")
      ->capture_default_str();
}

std::optional<BigReal> parse_tolerance(const std::optional<std::string>& text, const Precision& prec) {
  if (!text) return std::nullopt;
  PrecisionScope scope(prec);
  BigReal t = bigfloat::parse_real(*text);
  if (t.sign() <= 0) throw DomainError("tolerances must be positive");
  return t;
}

std::pair<long, long> parse_k_range(const std::string& text) {
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw DomainError("bad k range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots != std::string::npos) return {to_long(text.substr(0, dots)), to_long(text.substr(dots + 2))};
  const auto dash = text.find('-', 1);
  if (dash != std::string::npos) return {to_long(text.substr(0, dash)), to_long(text.substr(dash + 1))};
  const long k = to_long(text);
  return {k, k};
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// verify

struct VerifyArgs {
  std::string id;
  IdentityArgs params;
  std::optional<long> n;
  std::optional<std::string> threshold;
  bool list = false;
};

int cmd_verify(const VerifyArgs& v, const Common& c, std::ostream& out, std::ostream& err) {
  if (v.list) {
    for (const auto& e : catalog()) {
      out << e.id << "  (";
      for (std::size_t i = 0; i < e.required.size(); ++i) out << (i ? " " : "") << "--" << e.required[i];
      out << ")  " << e.summary << "\n";
    }
    return kPass;
  }
  if (v.id.empty()) {
    err << "verify: missing identity (see verify --list)\n";
    return kUsage;
  }
  const CatalogEntry* e = find_identity(v.id);
  if (!e) {
    err << "verify: unknown identity '" << v.id << "' (see verify --list)\n";
    return kUsage;
  }
  if (auto missing = missing_params(*e, v.params); !missing.empty()) {
    err << "verify " << v.id << ": missing";
    for (const auto& m : missing) err << " --" << m;
    err << "\n";
    return kUsage;
  }
  if (v.n && *v.n < 1) throw DomainError("--n must be positive");
  const Precision prec = c.precision();
  VerifyOptions opt{prec, v.n, parse_tolerance(v.threshold, prec)};
  const VerificationReport r = run_identity(*e, v.params, opt);

  if (c.format == "json") {
    out << r.to_json().dump(2) << "\n";
  } else if (c.format == "csv") {
    out << VerificationReport::csv_header() << "\n" << r.to_csv_row() << "\n";
  } else if (v.id == "main") {
    PrecisionScope scope(prec);
    auto parsed = bigfloat::parse_expression(*v.params.alpha);
    if (parsed.exact) {
      const auto alpha = *parsed.exact;
      out << identities::table2_markdown_header() << "\n"
          << identities::table2_markdown_row(*v.params.p, *v.params.k, alpha,
                                             identities::table2_beta(*v.params.p, alpha),
                                             identities::table2_format(r.lhs.re), identities::table2_format(r.rhs.re))
          << "\n";
    } else {
      out << VerificationReport::markdown_header() << "\n" << r.to_markdown_row() << "\n";
    }
  } else {
    out << VerificationReport::markdown_header() << "\n" << r.to_markdown_row() << "\n";
  }
  return r.pass ? kPass : kFail;
}

// table1

int cmd_table1(const BigReal& root_tol, const Common& c, std::ostream& out, std::ostream& err) {
  const std::string path = c.data_dir + "/table1_golden.json";
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  const auto golden = nlohmann::ordered_json::parse(in);
  const Precision prec = c.precision();
  std::vector<rootfinder::Table1RowResult> rows;
  for (const auto& j : golden.at("rows")) {
    rows.push_back(rootfinder::check_table1_row(rootfinder::table1_expectation_from_json(j), prec, root_tol));
  }
  bool all = true;
  for (const auto& r : rows) {
    if (!r.pass()) {
      all = false;
      err << "table1: row p=" << r.p << " k=" << r.k << " does not match\n";
    }
  }
  if (c.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(r.to_json());
    out << arr.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "p,k,scaled,coefficients_match,printed_match,max_root_error,roots_match\n";
    for (const auto& r : rows) {
      out << r.p << ',' << r.k << ',' << csv_quote(r.scaled.to_string()) << ',' << r.coefficients_match << ','
          << r.printed_match << ',' << r.max_root_error.to_scientific(3) << ',' << r.roots_match << "\n";
    }
  } else {
    out << "| p | k | scaled polynomial | real roots | non-real roots |\n|---|---|---|---|---|\n";
    for (const auto& r : rows) out << r.to_markdown() << "\n";
  }
  return all ? kPass : kFail;
}

// table2

int cmd_table2(long n, const Common& c, std::ostream& out, std::ostream& err) {
  if (n < 1) throw DomainError("--n must be positive");
  const auto rows = identities::read_table2_csv(c.data_dir + "/table2_golden.csv");
  const Precision prec = c.precision();
  std::vector<identities::Table2RowResult> results;
  for (const auto& row : rows) results.push_back(identities::compute_table2_row(row, prec, n));
  bool all = true;
  for (const auto& r : results) {
    if (r.pass()) continue;
    all = false;
    err << "table2: p=" << r.row.p << " k=" << r.row.k << " alpha=" << r.row.alpha.label();
    if (!r.lhs_match()) err << " lhs " << r.lhs << " vs printed " << r.row.printed_lhs;
    if (!r.rhs_match()) err << " rhs " << r.rhs << " vs printed " << r.row.printed_rhs;
    err << "\n";
  }
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["digits"] = c.digits;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back(r.to_json());
    j["rows"] = arr;
    j["all_match"] = all;
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << identities::table2_csv_header() << "\n";
    for (const auto& r : results) out << identities::table2_csv_row(r) << "\n";
  } else {
    out << identities::table2_markdown_header() << "\n";
    for (const auto& r : results) {
      out << identities::table2_markdown_row(r.row.p, r.row.k, r.row.alpha, r.row.beta, r.lhs, r.rhs) << "\n";
    }
  }
  return all ? kPass : kFail;
}

// roots and scan

std::string root_csv_header() {
  return "p,k,origin_multiplicity,nonzero_roots,max_modulus_deviation,min_pairwise_separation,conjecture1_pass,"
         "escalation,conjecture2_verdict,conjecture2_expected,error";
}

std::string root_csv_row(const RootReport& r) {
  std::ostringstream os;
  os << r.p << ',' << r.k << ',';
  if (r.error) {
    os << ",,,,false,,";
  } else {
    os << r.origin_multiplicity << ',' << r.roots.roots.size() - r.origin_multiplicity << ','
       << r.max_modulus_deviation.to_scientific(3) << ',' << r.min_pairwise_separation.to_scientific(3) << ','
       << (r.conjecture1_pass ? "true" : "false") << ',' << rootfinder::to_string(r.escalation) << ',';
  }
  if (r.conjecture2) {
    os << rootfinder::to_string(r.conjecture2->verdict) << ',' << rootfinder::to_string(r.conjecture2->expected);
  } else {
    os << ',';
  }
  os << ',' << (r.error ? csv_quote(*r.error) : "");
  return os.str();
}

std::string root_md_header() {
  return "| p | k | zeros at 0 | nonzero roots | max \\|\\|z\\| - 1/p\\| | min separation | conjecture 1 | "
         "conjecture 2 |\n|---|---|---|---|---|---|---|---|";
}

std::string root_md_row(const RootReport& r) {
  std::ostringstream os;
  os << "| " << r.p << " | " << r.k << " | ";
  if (r.error) {
    os << "- | - | - | - | error: " << *r.error << " | ";
  } else {
    os << r.origin_multiplicity << " | " << r.roots.roots.size() - r.origin_multiplicity << " | "
       << r.max_modulus_deviation.to_scientific(3) << " | " << r.min_pairwise_separation.to_scientific(3) << " | "
       << (r.conjecture1_pass ? "pass" : "fail");
    if (r.escalation != rootfinder::Escalation::None) os << " (" << rootfinder::to_string(r.escalation) << ")";
    os << " | ";
  }
  os << (r.conjecture2 ? rootfinder::to_string(r.conjecture2->verdict) : "-") << " |";
  return os.str();
}

bool cell_pass(const RootReport& r) {
  return !r.error && r.conjecture1_pass && r.conjecture2 && r.conjecture2->matches_expected();
}

struct TolArgs {
  std::optional<std::string> modulus;
  std::optional<std::string> separation;

  rootfinder::Tolerances resolve(const Precision& prec) const {
    return {parse_tolerance(modulus, prec), parse_tolerance(separation, prec)};
  }
};

int cmd_roots(long p, long k, const TolArgs& tol, const Common& c, std::ostream& out, std::ostream& err) {
  const Precision prec = c.precision();
  const RootReport r = scan_cell(exact::Prime{p}.value(), k, prec, tol.resolve(prec));
  if (r.error) err << "roots: " << *r.error << "\n";
  if (c.format == "json") {
    out << r.to_json().dump(2) << "\n";
  } else if (c.format == "csv") {
    out << root_csv_header() << "\n" << root_csv_row(r) << "\n";
  } else {
    out << root_md_header() << "\n" << root_md_row(r) << "\n";
  }
  if (r.error) return kNumericFailure;
  return cell_pass(r) ? kPass : kFail;
}

int cmd_scan(const std::vector<long>& primes, const std::string& k_range, unsigned jobs, const TolArgs& tol,
             const Common& c, std::ostream& out, std::ostream& err) {
  ScanSpec spec;
  spec.primes = primes;
  std::tie(spec.k_min, spec.k_max) = parse_k_range(k_range);
  spec.precision = c.precision();
  spec.tolerances = tol.resolve(spec.precision);
  spec.jobs = jobs;
  const ScanResult res = run_scan(spec);
  for (const auto& cell : res.cells) {
    if (!cell_pass(cell)) err << "scan: candidate p=" << cell.p << " k=" << cell.k << "\n";
  }
  if (c.format == "json") {
    out << res.to_json().dump(2) << "\n";
  } else if (c.format == "csv") {
    out << root_csv_header() << "\n";
    for (const auto& cell : res.cells) out << root_csv_row(cell) << "\n";
  } else {
    out << root_md_header() << "\n";
    for (const auto& cell : res.cells) out << root_md_row(cell) << "\n";
    const auto& s = res.summary;
    out << "\n" << s.cells << " cells: " << s.conjecture1_pass << " pass conjecture 1, " << s.conjecture2_match
        << " match conjecture 2, " << s.errors << " errors\n";
  }
  return res.summary.all_pass() ? kPass : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan-type identities for odd zeta and L-values: verification, tables and root audits", "rls"};
  app.require_subcommand(1);
  Common common;

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check one identity at one parameter point");
  add_common(v, common);
  v->add_option("identity", verify.id, "identity id (see --list)");
  v->add_flag("--list", verify.list, "list the identity catalog");
  v->add_option("--p", verify.params.p, "prime modulus");
  v->add_option("--k", verify.params.k, "integer k");
  v->add_option("--alpha", verify.params.alpha, "alpha > 0, e.g. pi/25");
  v->add_option("--z", verify.params.z, "point of the upper half-plane, e.g. (1+3i)/2");
  v->add_option("--x", verify.params.x, "partial-fraction x");
  v->add_option("--y", verify.params.y, "partial-fraction y");
  v->add_option("--n", verify.n, "pin the series truncation");
  v->add_option("--threshold", verify.threshold, "pass threshold (default 10^{-digits+5})");

  std::string root_tol = "1e-25";
  auto* t1 = app.add_subcommand("table1", "reproduce the polynomial table");
  add_common(t1, common);
  t1->add_option("--root-tol", root_tol, "closed-form root tolerance")->capture_default_str();

  long t2_n = 1000;
  auto* t2 = app.add_subcommand("table2", "reproduce the numeric table of the twisted identity");
  add_common(t2, common);
  t2->add_option("--n", t2_n, "series truncation")->capture_default_str();

  long rp = 0, rk = 0;
  TolArgs tol;
  auto* roots = app.add_subcommand("roots", "roots of one twisted polynomial and both conjecture verdicts");
  add_common(roots, common);
  roots->add_option("--p", rp, "prime modulus")->required();
  roots->add_option("--k", rk, "k >= 1")->required();
  roots->add_option("--modulus-tol", tol.modulus, "tolerance on ||z| - 1/p| (default 10^{-digits/2})");
  roots->add_option("--sep-tol", tol.separation, "minimum root separation (default 1e-10)");

  std::vector<long> primes{2, 3, 5, 7};
  std::string k_range = "1..12";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* scan = app.add_subcommand("scan", "audit both conjectures over a grid");
  add_common(scan, common);
  scan->add_option("--primes", primes, "comma-separated primes")->delimiter(',')->capture_default_str();
  scan->add_option("--k-range", k_range, "inclusive range a..b")->capture_default_str();
  scan->add_option("--jobs", jobs, "worker threads")->envname("RLS_JOBS")->check(CLI::PositiveNumber);
  scan->add_option("--modulus-tol", tol.modulus, "tolerance on ||z| - 1/p| (default 10^{-digits/2})");
  scan->add_option("--sep-tol", tol.separation, "minimum root separation (default 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, common, out, err);
    if (t1->parsed()) {
      PrecisionScope scope(common.precision());
      return cmd_table1(bigfloat::parse_real(root_tol), common, out, err);
    }
    if (t2->parsed()) return cmd_table2(t2_n, common, out, err);
    if (roots->parsed()) return cmd_roots(rp, rk, tol, common, out, err);
    return cmd_scan(primes, k_range, jobs, tol, common, out, err);
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "bad golden file: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  }
}

}  // namespace rls::cli
