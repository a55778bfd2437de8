#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rls/bigfloat/bigcomplex.hpp"

namespace rls::identities {

using bigfloat::BigComplex;
using bigfloat::BigReal;
using bigfloat::Precision;

/// Both sides of one identity at one parameter point.
struct VerificationReport {
  std::string identity_id;
  /// Parameter values as printed strings, in insertion order.
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Precision precision;
  /// Largest number of series terms used on either side.
  std::optional<long> n_used;
  bool complex_valued = false;
  BigComplex lhs;
  BigComplex rhs;
  BigReal abs_residual;
  BigReal rel_residual;
  BigReal threshold;
  bool pass = false;
  std::vector<std::string> notes;

  /// Fills the residuals and the verdict from lhs, rhs and threshold.
  void finalize();

  nlohmann::ordered_json to_json() const;
  static std::string csv_header();
  std::string to_csv_row() const;
  static std::string markdown_header();
  std::string to_markdown_row() const;
};

/// Enough significant digits that the printed value is within 10^{-digits}.
std::string decimal_string(const BigReal& x, int digits);

/// Value rendering used in every report: real values as a single string,
/// complex values as [re, im].
nlohmann::ordered_json value_to_json(const BigComplex& v, bool complex_valued, int digits);

}  // namespace rls::identities
