#include "rls/identities/table2.hpp"

#include <fstream>
#include <sstream>

#include "rls/errors.hpp"

namespace rls::identities {

using bigfloat::PrecisionScope;
using exact::Rational;

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

PiMonomial monomial(const std::string& text) {
  PrecisionScope scope(64);
  auto parsed = bigfloat::parse_expression(text);
  if (!parsed.exact) throw DomainError("table entry is not a rational multiple of a power of pi: " + text);
  return *parsed.exact;
}

}  // namespace

std::vector<Table2Row> read_table2_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::string line;
  std::getline(in, line);
  if (line.rfind("p,k,alpha,beta,lhs,rhs", 0) != 0) throw DomainError(path + ": unexpected header");
  std::vector<Table2Row> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != 6) throw DomainError(path + ": expected 6 columns in '" + line + "'");
    Table2Row row{std::stol(cells[0]), std::stol(cells[1]), monomial(cells[2]), monomial(cells[3]), cells[4], cells[5]};
    const PiMonomial beta = table2_beta(row.p, row.alpha);
    if (beta.coeff != row.beta.coeff || beta.pi_power != row.beta.pi_power) {
      throw DomainError(path + ": beta does not satisfy alpha beta = pi^2/p^2 in '" + line + "'");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table2_format(const BigReal& x) { return x.to_fixed_truncated(15); }

PiMonomial table2_beta(long p, const PiMonomial& alpha) {
  if (alpha.coeff <= 0) throw DomainError("alpha must be positive");
  return {Rational(1) / (Rational(p * p) * alpha.coeff), 2 - alpha.pi_power};
}

Table2RowResult compute_table2_row(const Table2Row& row, const Precision& prec, long n) {
  PrecisionScope scope(prec);
  Table2RowResult r{row, verify_main(Prime{row.p}, row.k, row.alpha.value(), {prec, n, std::nullopt}), "", ""};
  r.lhs = table2_format(r.report.lhs.re);
  r.rhs = table2_format(r.report.rhs.re);
  return r;
}

nlohmann::ordered_json Table2RowResult::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = row.p;
  j["k"] = row.k;
  j["alpha"] = row.alpha.label();
  j["beta"] = row.beta.label();
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["printed_lhs"] = row.printed_lhs;
  j["printed_rhs"] = row.printed_rhs;
  j["lhs_match"] = lhs_match();
  j["rhs_match"] = rhs_match();
  j["report"] = report.to_json();
  return j;
}

std::string table2_markdown_header() {
  return "| p | k | α | β | Left-hand side | Right-hand side |\n|---|---|---|---|---|---|";
}

std::string table2_markdown_row(long p, long k, const PiMonomial& alpha, const PiMonomial& beta,
                                const std::string& lhs, const std::string& rhs) {
  std::ostringstream os;
  os << "| " << p << " | " << k << " | " << alpha.label(true) << " | " << beta.label(true) << " | " << lhs
     << "... | " << rhs << "... |";
  return os.str();
}

std::string table2_csv_header() { return "p,k,alpha,beta,lhs,rhs,printed_lhs,printed_rhs,match"; }

std::string table2_csv_row(const Table2RowResult& r) {
  std::ostringstream os;
  os << r.row.p << ',' << r.row.k << ',' << r.row.alpha.label() << ',' << r.row.beta.label() << ',' << r.lhs << ','
     << r.rhs << ',' << r.row.printed_lhs << ',' << r.row.printed_rhs << ',' << (r.pass() ? "true" : "false");
  return os.str();
}

}  // namespace rls::identities
