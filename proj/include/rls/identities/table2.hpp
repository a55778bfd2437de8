#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rls/bigfloat/expr.hpp"
#include "rls/identities/identities.hpp"

namespace rls::identities {

using bigfloat::PiMonomial;

/// One published row of the twisted-identity table.
struct Table2Row {
  long p;
  long k;
  PiMonomial alpha;
  PiMonomial beta;
  std::string printed_lhs;
  std::string printed_rhs;
};

/// Reads the golden CSV (header p,k,alpha,beta,lhs,rhs). Throws DomainError.
std::vector<Table2Row> read_table2_csv(const std::string& path);

/// Value as printed in the table: truncated after 15 decimals.
std::string table2_format(const BigReal& x);

/// beta = pi^2 / (p^2 alpha), kept exact.
PiMonomial table2_beta(long p, const PiMonomial& alpha);

struct Table2RowResult {
  Table2Row row;
  VerificationReport report;
  std::string lhs;
  std::string rhs;

  bool lhs_match() const { return lhs == row.printed_lhs; }
  bool rhs_match() const { return rhs == row.printed_rhs; }
  bool pass() const { return lhs_match() && rhs_match(); }
  nlohmann::ordered_json to_json() const;
};

/// Evaluates the row with verify_main at the given truncation N.
Table2RowResult compute_table2_row(const Table2Row& row, const Precision& prec, long n);

std::string table2_markdown_header();
/// "| p | k | alpha | beta | lhs... | rhs... |" with unicode pi.
std::string table2_markdown_row(long p, long k, const PiMonomial& alpha, const PiMonomial& beta,
                                const std::string& lhs, const std::string& rhs);
std::string table2_csv_header();
std::string table2_csv_row(const Table2RowResult& r);

}  // namespace rls::identities
