#include "rls/cli/scan.hpp"

#include <atomic>
#include <thread>

#include "rls/errors.hpp"

namespace rls::cli {

void validate(const ScanSpec& spec) {
  if (spec.primes.empty()) throw DomainError("no primes given");
  for (long p : spec.primes) {
    if (p < 2 || !exact::is_prime(static_cast<std::uint64_t>(p))) throw DomainError(std::to_string(p) + " is not prime");
  }
  if (spec.k_min > spec.k_max) throw DomainError("empty k range");
  if (spec.k_min < 1) throw DomainError("k range must start at 1 or above");
  if (spec.jobs == 0) throw DomainError("jobs must be positive");
}

RootReport scan_cell(long p, long k, const bigfloat::Precision& prec, const rootfinder::Tolerances& tol) {
  RootReport r;
  try {
    r = rootfinder::conjecture1_check(exact::Prime{p}, k, prec, tol);
  } catch (const std::exception& e) {
    r = RootReport{};
    r.p = p;
    r.k = k;
    r.precision = prec;
    r.error = e.what();
  }
  try {
    r.conjecture2 = rootfinder::conjecture2_check(exact::Prime{p}, k);
  } catch (const std::exception& e) {
    r.error = r.error ? *r.error + "; " + e.what() : std::string(e.what());
  }
  return r;
}

ScanResult run_scan(const ScanSpec& spec) {
  validate(spec);
  std::vector<std::pair<long, long>> grid;
  for (long p : spec.primes) {
    for (long k = spec.k_min; k <= spec.k_max; ++k) grid.emplace_back(p, k);
  }

  ScanResult out;
  out.cells.resize(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      out.cells[i] = scan_cell(grid[i].first, grid[i].second, spec.precision, spec.tolerances);
    }
  };
  const unsigned n = std::min<std::size_t>(spec.jobs, grid.size());
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  auto& s = out.summary;
  s.cells = out.cells.size();
  for (const auto& c : out.cells) {
    const bool c1 = !c.error && c.conjecture1_pass;
    const bool c2 = c.conjecture2 && c.conjecture2->matches_expected();
    if (c.error) ++s.errors;
    if (c1) ++s.conjecture1_pass;
    if (c2) ++s.conjecture2_match;
    if (!c1 || !c2) s.candidates.emplace_back(c.p, c.k);
  }
  return out;
}

nlohmann::ordered_json ScanResult::to_json() const {
  nlohmann::ordered_json j;
  auto& s = j["summary"];
  s["cells"] = summary.cells;
  s["conjecture1_pass"] = summary.conjecture1_pass;
  s["conjecture2_match"] = summary.conjecture2_match;
  s["errors"] = summary.errors;
  auto cand = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const bool failing = c.error || !c.conjecture1_pass || !c.conjecture2 || !c.conjecture2->matches_expected();
    if (!failing) continue;
    nlohmann::ordered_json e;
    e["p"] = c.p;
    e["k"] = c.k;
    e["escalation"] = rootfinder::to_string(c.escalation);
    if (c.error) e["error"] = *c.error;
    cand.push_back(e);
  }
  s["candidates"] = cand;
  s["all_pass"] = summary.all_pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cells) arr.push_back(c.to_json());
  j["cells"] = arr;
  return j;
}

}  // namespace rls::cli
