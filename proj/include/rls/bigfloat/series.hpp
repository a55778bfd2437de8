#pragma once

#include <optional>
#include <vector>

#include "rls/bigfloat/bigcomplex.hpp"
#include "rls/exact/primes.hpp"

namespace rls::bigfloat {

/// Twisted series data: the divisor-sum exponent is 2k + 1.
struct SeriesParams {
  exact::Prime p;
  long k;
  std::optional<long> n_max;
};

struct SeriesResult {
  BigReal value;
  long terms = 0;
  /// log10 of the proven bound on the neglected tail.
  double log10_tail_bound = 0;
};

struct ComplexSeriesResult {
  BigComplex value;
  long terms = 0;
  double log10_tail_bound = 0;
};

/// |c_n| <= C n^q for every n >= 1.
struct CoefficientBound {
  double c;
  double q;
};

struct TruncationPlan {
  long terms;
  double log10_tail_bound;
};

/// Upper bound (log10) for sum_{n > N} C n^q r^n, +inf when the geometric
/// majorant does not converge from N on.
double log10_geometric_tail(const CoefficientBound& bound, double log10_ratio, long n);

/// Smallest N (up to bisection granularity) whose tail bound is below
/// 10^target_log10; with n_max the truncation is pinned and the bound reported.
TruncationPlan plan_truncation(const CoefficientBound& bound, double log10_ratio, double target_log10,
                               std::optional<long> n_max);

inline constexpr long kMaxSeriesTerms = 10'000'000;

CoefficientBound twisted_bound(const exact::Prime& p, long s);
CoefficientBound classical_sigma_bound(long s);

/// a_n sigma_{-s,chi}(n) for n = 0..n (index 0 unused).
std::vector<BigReal> twisted_coefficients(const exact::Prime& p, long s, long n);
/// sigma_{-s}(n) for n = 0..n (index 0 unused).
std::vector<BigReal> classical_sigma_coefficients(long s, long n);

/// sum_{n >= 1} a_n sigma_{-(2k+1),chi}(n) e^{-2nx}, x > 0.
SeriesResult lambert_twisted(const SeriesParams& params, const BigReal& x, const Precision& prec);

/// sum a_n sigma_{-(2k+1),chi}(n) e^{2 pi i n z}, Im z > 0.
ComplexSeriesResult frak_F(const SeriesParams& params, const BigComplex& z, const Precision& prec);

/// sum sigma_{-s}(n) e^{2 pi i n z}, Im z > 0.
ComplexSeriesResult grosswald_F(long s, const BigComplex& z, const Precision& prec,
                                std::optional<long> n_max = std::nullopt);

/// sum_{n >= 1} n^{-s} / (e^{2nx} - 1), x > 0.
SeriesResult lambert_classic(long s, const BigReal& x, const Precision& prec,
                             std::optional<long> n_max = std::nullopt);

/// sum_{n >= 0} (2n+1)^{-s} / (e^{2(2n+1)x} + 1), x > 0.
SeriesResult lambert_odd_plus(long s, const BigReal& x, const Precision& prec,
                              std::optional<long> n_max = std::nullopt);

}  // namespace rls::bigfloat
