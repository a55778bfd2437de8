#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "rls/rootfinder/roots.hpp"

namespace rls::rootfinder {

/// The four roots +-sqrt(a +- i b sqrt(d)).
struct QuarticForm {
  exact::Rational a;
  exact::Rational b;
  long d;
};

/// One published row: the scaled polynomial and its roots in closed form.
struct Table1Expectation {
  long p;
  long k;
  RatPoly scaled;
  /// Printed form of scaled, e.g. "z^2/16".
  std::string printed;
  bool pm_i;
  std::optional<QuarticForm> quartic;
};

/// Reads {"p", "k", "poly": [...], "printed", "pm_i", "quartic": {"a","b","d"} | null}.
Table1Expectation table1_expectation_from_json(const nlohmann::ordered_json& j);

/// 0, 0 followed by the nonzero closed-form roots, at the current precision.
std::vector<BigComplex> closed_form_roots(const Table1Expectation& row);

struct Table1RowResult {
  long p;
  long k;
  RatPoly scaled;
  bool coefficients_match;
  bool printed_match;
  RootSet roots;
  /// Largest distance from a closed-form root to its matched computed root.
  BigReal max_root_error;
  bool roots_match;

  bool pass() const { return coefficients_match && printed_match && roots_match; }
  nlohmann::ordered_json to_json() const;
  std::string to_markdown() const;
};

Table1RowResult check_table1_row(const Table1Expectation& row, const Precision& prec, const BigReal& root_tol);

}  // namespace rls::rootfinder
