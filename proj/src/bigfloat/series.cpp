#include "rls/bigfloat/series.hpp"

#include <cmath>
#include <limits>

#include "rls/errors.hpp"

namespace rls::bigfloat {

namespace {

constexpr double kLog10E = 0.43429448190325182765;

double log10_decay(const BigReal& rate) {
  // log10 of e^{-rate}
  return -rate.to_double() * kLog10E;
}

void check_n_max(std::optional<long> n_max) {
  if (n_max && *n_max < 1) throw DomainError("truncation must keep at least one term");
}

/// d^{-s} for s > 0, d^{|s|} otherwise.
BigReal divisor_weight(long d, long s) {
  BigReal w;
  if (s > 0) {
    mpfr_ui_pow_ui(w.get(), static_cast<unsigned long>(d), static_cast<unsigned long>(s), MPFR_RNDN);
    mpfr_ui_div(w.get(), 1, w.get(), MPFR_RNDN);
  } else {
    mpfr_ui_pow_ui(w.get(), static_cast<unsigned long>(d), static_cast<unsigned long>(-s), MPFR_RNDN);
  }
  return w;
}

template <typename Value>
Value power_series(const std::vector<BigReal>& coeffs, const Value& q, long terms) {
  Value sum{};
  Value qn = q;
  for (long n = 1; n <= terms; ++n) {
    sum += Value(coeffs[static_cast<std::size_t>(n)]) * qn;
    if (n < terms) qn *= q;
  }
  return sum;
}

BigComplex nome(const BigComplex& z) {
  // e^{2 pi i z}
  const BigReal two_pi = 2 * pi();
  return exp(BigComplex(-two_pi * z.im, two_pi * z.re));
}

}  // namespace

double log10_geometric_tail(const CoefficientBound& bound, double log10_ratio, long n) {
  const double n1 = static_cast<double>(n) + 1;
  const double log10_rho = bound.q * std::log10((n1 + 1) / n1) + log10_ratio;
  if (log10_rho >= 0) return std::numeric_limits<double>::infinity();
  return std::log10(bound.c) + bound.q * std::log10(n1) + n1 * log10_ratio - std::log10(1 - std::pow(10.0, log10_rho));
}

TruncationPlan plan_truncation(const CoefficientBound& bound, double log10_ratio, double target_log10,
                               std::optional<long> n_max) {
  check_n_max(n_max);
  if (!(log10_ratio < 0)) throw DomainError("series terms do not decay");
  if (n_max) return {*n_max, log10_geometric_tail(bound, log10_ratio, *n_max)};

  auto ok = [&](long n) { return log10_geometric_tail(bound, log10_ratio, n) < target_log10; };
  long hi = 1;
  while (!ok(hi)) {
    if (hi > kMaxSeriesTerms) throw NumericFailure("series decays too slowly for the requested precision");
    hi *= 2;
  }
  long lo = hi / 2;  // fails the bound unless hi == 1
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return {hi, log10_geometric_tail(bound, log10_ratio, hi)};
}

CoefficientBound twisted_bound(const exact::Prime& p, long s) {
  const double pp = static_cast<double>(p.value());
  if (s >= 2) return {pp * (1 + 1.0 / static_cast<double>(s - 1)), 0};
  if (s == 1) return {pp, 1};
  return {pp, static_cast<double>(-s + 1)};
}

CoefficientBound classical_sigma_bound(long s) {
  if (s >= 2) return {1 + 1.0 / static_cast<double>(s - 1), 0};
  if (s == 1) return {1, 1};
  return {1, static_cast<double>(-s + 1)};
}

std::vector<BigReal> twisted_coefficients(const exact::Prime& p, long s, long n) {
  std::vector<BigReal> c(static_cast<std::size_t>(n + 1));
  const long pv = p.value();
  for (long d = 1; d <= n; ++d) {
    if (d % pv == 0) continue;
    const BigReal w = divisor_weight(d, s);
    for (long m = d; m <= n; m += d) c[static_cast<std::size_t>(m)] += w;
  }
  for (long m = pv; m <= n; m += pv) c[static_cast<std::size_t>(m)] *= 1 - pv;
  return c;
}

std::vector<BigReal> classical_sigma_coefficients(long s, long n) {
  std::vector<BigReal> c(static_cast<std::size_t>(n + 1));
  for (long d = 1; d <= n; ++d) {
    const BigReal w = divisor_weight(d, s);
    for (long m = d; m <= n; m += d) c[static_cast<std::size_t>(m)] += w;
  }
  return c;
}

SeriesResult lambert_twisted(const SeriesParams& params, const BigReal& x, const Precision& prec) {
  if (x.sign() <= 0) throw DomainError("Lambert series needs x > 0");
  PrecisionScope scope(prec);
  const long s = 2 * params.k + 1;
  const TruncationPlan plan = plan_truncation(twisted_bound(params.p, s), log10_decay(2 * x),
                                              -static_cast<double>(prec.working_digits()), params.n_max);
  const auto coeffs = twisted_coefficients(params.p, s, plan.terms);
  return {power_series(coeffs, exp(-2 * x), plan.terms), plan.terms, plan.log10_tail_bound};
}

ComplexSeriesResult frak_F(const SeriesParams& params, const BigComplex& z, const Precision& prec) {
  if (z.im.sign() <= 0) throw DomainError("q-series needs Im z > 0");
  PrecisionScope scope(prec);
  const long s = 2 * params.k + 1;
  const TruncationPlan plan = plan_truncation(twisted_bound(params.p, s), log10_decay(2 * pi() * z.im),
                                              -static_cast<double>(prec.working_digits()), params.n_max);
  const auto coeffs = twisted_coefficients(params.p, s, plan.terms);
  return {power_series(coeffs, nome(z), plan.terms), plan.terms, plan.log10_tail_bound};
}

ComplexSeriesResult grosswald_F(long s, const BigComplex& z, const Precision& prec, std::optional<long> n_max) {
  if (z.im.sign() <= 0) throw DomainError("q-series needs Im z > 0");
  PrecisionScope scope(prec);
  const TruncationPlan plan = plan_truncation(classical_sigma_bound(s), log10_decay(2 * pi() * z.im),
                                              -static_cast<double>(prec.working_digits()), n_max);
  const auto coeffs = classical_sigma_coefficients(s, plan.terms);
  return {power_series(coeffs, nome(z), plan.terms), plan.terms, plan.log10_tail_bound};
}

SeriesResult lambert_classic(long s, const BigReal& x, const Precision& prec, std::optional<long> n_max) {
  if (x.sign() <= 0) throw DomainError("Lambert series needs x > 0");
  PrecisionScope scope(prec);
  const BigReal u = exp(-2 * x);
  // n^{-s} u^n / (1 - u^n) <= n^{max(0,-s)} u^n / (1 - u)
  const double c = 1 / -std::expm1(-2 * x.to_double());
  const TruncationPlan plan = plan_truncation({c, static_cast<double>(s < 0 ? -s : 0)}, log10_decay(2 * x),
                                              -static_cast<double>(prec.working_digits()), n_max);
  BigReal sum, un = u;
  for (long n = 1; n <= plan.terms; ++n) {
    sum += divisor_weight(n, s) * un / (1 - un);
    un *= u;
  }
  return {sum, plan.terms, plan.log10_tail_bound};
}

SeriesResult lambert_odd_plus(long s, const BigReal& x, const Precision& prec, std::optional<long> n_max) {
  if (x.sign() <= 0) throw DomainError("Lambert series needs x > 0");
  check_n_max(n_max);
  PrecisionScope scope(prec);
  const BigReal u = exp(-2 * x);
  const BigReal u2 = u * u;
  // Bounded over all m > M (odd and even): m^{max(0,-s)} u^m.
  const CoefficientBound bound{1, static_cast<double>(s < 0 ? -s : 0)};
  std::optional<long> m_max;
  if (n_max) m_max = 2 * *n_max - 1;
  const TruncationPlan plan =
      plan_truncation(bound, log10_decay(2 * x), -static_cast<double>(prec.working_digits()), m_max);
  const long terms = (plan.terms + 1) / 2;
  BigReal sum, um = u;
  for (long n = 0; n < terms; ++n) {
    sum += divisor_weight(2 * n + 1, s) * um / (1 + um);
    um *= u2;
  }
  return {sum, terms, log10_geometric_tail(bound, log10_decay(2 * x), 2 * terms - 1)};
}

}  // namespace rls::bigfloat
