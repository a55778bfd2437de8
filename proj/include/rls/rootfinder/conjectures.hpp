#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "rls/exact/primes.hpp"
#include "rls/rootfinder/roots.hpp"

namespace rls::rootfinder {

using exact::Prime;

enum class Conjecture2Verdict { NoCommonRoots, OnlyPlusMinusIOverP, Other };

std::string to_string(Conjecture2Verdict v);

struct Conjecture2Result {
  Conjecture2Verdict verdict;
  /// Monic gcd over Q.
  RatPoly gcd;
  /// For OnlyPlusMinusIOverP: both polynomials vanish exactly at +-i/p.
  bool confirmed_exactly = false;
  /// The verdict the conjecture predicts for this k.
  Conjecture2Verdict expected;
  bool matches_expected() const { return verdict == expected; }
};

/// How a borderline or failing cell was re-examined.
enum class Escalation {
  None,
  /// A near-violation was re-run at doubled digits.
  Doubled,
  /// A failure at base precision did not reproduce at 4x digits without the
  /// z^2 reduction.
  CandidateRefuted,
  /// A failure reproduced at 4x digits without the z^2 reduction.
  CandidateConfirmed,
};

std::string to_string(Escalation e);

struct Tolerances {
  /// Defaults: 10^{-digits/2} for the modulus, 10^{-10} for separation.
  std::optional<BigReal> modulus_tol;
  std::optional<BigReal> separation_tol;
};

struct RootReport {
  long p = 0;
  long k = 0;
  Precision precision;
  std::size_t origin_multiplicity = 0;
  /// Roots of the unscaled polynomial.
  RootSet roots;
  /// max over nonzero roots of ||z| - 1/p|; zero when there are none.
  BigReal max_modulus_deviation;
  /// min distance between distinct nonzero roots; +inf when fewer than two.
  BigReal min_pairwise_separation;
  BigReal modulus_tol;
  BigReal separation_tol;
  bool conjecture1_pass = false;
  Escalation escalation = Escalation::None;
  std::optional<Conjecture2Result> conjecture2;
  /// Set when the cell could not be evaluated.
  std::optional<std::string> error;

  nlohmann::ordered_json to_json() const;
};

/// Roots of the twisted polynomial for (p, k) and the unit-circle verdict.
RootReport conjecture1_check(const Prime& p, long k, const Precision& prec, const Tolerances& tol = {});

/// Decided by an exact gcd with (pz)^{2k} - 1.
Conjecture2Result conjecture2_check(const Prime& p, long k);

struct ClassicalRootsOfUnity {
  long k;
  bool has_pm_i;
  bool has_rho;
  /// has_pm_i == (2 | k) and has_rho == (3 | k).
  bool consistent;
};

ClassicalRootsOfUnity classical_roots_of_unity_check(long k);

/// Decimal rendering shared by every root report.
nlohmann::ordered_json complex_to_json(const BigComplex& z, int digits);

}  // namespace rls::rootfinder
