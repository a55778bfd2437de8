#include "rls/identities/partial_fractions.hpp"

#include <cmath>

#include "rls/bigfloat/series.hpp"
#include "rls/bigfloat/zeta.hpp"
#include "rls/errors.hpp"

namespace rls::identities {

using bigfloat::PrecisionScope;
using bigfloat::pow10;

namespace {

void check_denominators(const BigComplex& c, bool odd_only, const Precision& prec) {
  // m^2 + c can only vanish for m near sqrt|c|.
  const long top = static_cast<long>(std::ceil(std::sqrt(abs(c).to_double()))) + 2;
  const BigReal eps = pow10(-prec.digits);
  for (long m = 1; m <= top; ++m) {
    if (odd_only && m % 2 == 0) continue;
    if (abs(c + BigComplex(m * m)) < eps * (m * m)) throw DomainError("parameter sits on a pole of the series");
  }
}

long next_index(long m, bool odd_only) { return odd_only ? m + 2 : m + 1; }

BigComplex kernel(Kernel f, const BigComplex& w) { return f == Kernel::Tanh ? tanh(w) : coth(w); }

}  // namespace

KernelSum kernel_sum(Kernel f, const BigComplex& a, const BigComplex& c, bool odd_only, const Precision& prec) {
  if (a.re.is_zero()) throw DomainError("kernel argument must have nonzero real part");
  check_denominators(c, odd_only, prec);
  PrecisionScope scope(prec);
  const int sigma = a.re.sign();
  const BigComplex sa = sigma > 0 ? a : -a;
  const BigReal eps = pow10(-prec.working_digits() - 2);
  const double cabs = abs(c).to_double();

  // Exponential part: tanh w = s(1 - 2/(e^{2sw}+1)), coth w = s(1 + 2/(e^{2sw}-1)), s = sign Re w.
  const BigComplex u = exp(BigComplex(-2L) * sa);
  const double log10_u = -2 * sa.re.to_double() * 0.43429448190325182765;
  const double u_abs = std::pow(10.0, log10_u);
  const long m0 = static_cast<long>(std::ceil(std::sqrt(2 * cabs))) + 1;
  const auto plan = bigfloat::plan_truncation({4 / (1 - u_abs), 0}, log10_u,
                                              -static_cast<double>(prec.working_digits() + 2), std::nullopt);
  const long m_exp = std::max(plan.terms, m0);
  BigComplex exp_part;
  BigComplex um = u;
  const BigComplex u_step = odd_only ? u * u : u;
  for (long m = 1; m <= m_exp; m = next_index(m, odd_only)) {
    const BigComplex md(m);
    BigComplex g = f == Kernel::Tanh ? BigComplex(-2L) * um / (BigComplex(1L) + um)
                                     : BigComplex(2L) * um / (BigComplex(1L) - um);
    exp_part += g / (md * (md * md + c));
    um *= u_step;
  }

  // Algebraic part: direct to M, then sum_r (-c)^{r-1} sum_{m > M} m^{-2r-1}.
  long big_m = std::max({50L, prec.digits, static_cast<long>(std::ceil(10 * std::sqrt(cabs)))});
  BigComplex algebraic;
  for (long m = big_m; m >= 1; --m) {
    if (odd_only && m % 2 == 0) continue;
    const BigComplex md(m);
    algebraic += BigComplex(1L) / (md * (md * md + c));
  }
  const BigComplex minus_c = -c;
  BigComplex power(1L);
  BigComplex tail;
  for (long r = 1;; ++r) {
    const long s = 2 * r + 1;
    BigReal t;
    if (odd_only) {
      const long n0 = big_m / 2 + big_m % 2;
      t = bigfloat::hurwitz_tail(s, BigReal(exact::Rational(1, 2)), n0, prec) / bigfloat::pow(BigReal(2L), s);
    } else {
      t = bigfloat::hurwitz_tail(s, BigReal(0L), big_m + 1, prec);
    }
    const BigComplex term = power * BigComplex(t);
    tail += term;
    if (abs(term) < eps) break;
    power *= minus_c;
  }
  algebraic += tail;

  BigComplex total = algebraic + exp_part;
  if (sigma < 0) total = -total;
  return {total, m_exp, eps};
}

KernelSum kernel_sum_truncated(Kernel f, const BigComplex& a, const BigComplex& c, bool odd_only, long n,
                               const Precision& prec) {
  if (n < 1) throw DomainError("truncation must keep at least one term");
  if (a.re.is_zero()) throw DomainError("kernel argument must have nonzero real part");
  check_denominators(c, odd_only, prec);
  PrecisionScope scope(prec);
  BigComplex sum;
  long m = 1;
  long last = 1;
  for (long i = 0; i < n; ++i, m = next_index(m, odd_only)) {
    const BigComplex md(m);
    sum += kernel(f, md * a) / (md * (md * md + c));
    last = m;
  }
  // For m > M with M^2 >= 2|c|: |f(ma)| <= coth((M+1)|Re a|), 1/|m(m^2+c)| <= 2/m^3, sum <= 1/M^2.
  BigReal bound;
  const BigReal ml(last);
  if (ml * ml >= 2 * abs(c)) {
    bound = bigfloat::coth(abs(a.re) * (last + 1)) / (ml * ml);
  } else {
    mpfr_set_inf(bound.get(), 1);
  }
  return {sum, last, bound};
}

}  // namespace rls::identities
