#pragma once

#include <vector>

#include "json.hpp"
#include "rls/rootfinder/conjectures.hpp"

namespace rls::cli {

using rootfinder::RootReport;

struct ScanSpec {
  std::vector<long> primes;
  long k_min = 1;
  long k_max = 1;
  bigfloat::Precision precision;
  rootfinder::Tolerances tolerances;
  unsigned jobs = 1;
};

/// Throws DomainError on a non-prime entry, an empty prime list or an empty k range.
void validate(const ScanSpec& spec);

struct ScanSummary {
  std::size_t cells = 0;
  std::size_t conjecture1_pass = 0;
  std::size_t conjecture2_match = 0;
  std::size_t errors = 0;
  /// Cells failing either conjecture, in (p, k) order.
  std::vector<std::pair<long, long>> candidates;

  bool all_pass() const { return errors == 0 && conjecture1_pass == cells && conjecture2_match == cells; }
};

struct ScanResult {
  std::vector<RootReport> cells;
  ScanSummary summary;

  nlohmann::ordered_json to_json() const;
};

/// Runs both conjecture checks on every (p, k) cell. Cells are ordered by
/// (p, k) regardless of jobs; a failing cell records its error and the scan
/// continues.
ScanResult run_scan(const ScanSpec& spec);

/// One cell, with any exception captured in RootReport::error.
RootReport scan_cell(long p, long k, const bigfloat::Precision& prec, const rootfinder::Tolerances& tol);

}  // namespace rls::cli
