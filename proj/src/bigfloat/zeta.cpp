#include "rls/bigfloat/zeta.hpp"

#include <algorithm>

#include "rls/errors.hpp"
#include "rls/exact/bernoulli.hpp"

namespace rls::bigfloat {

using exact::Rational;

BigReal hurwitz_tail(long s, const BigReal& a, long start, const Precision& prec) {
  if (s < 2) throw DomainError("Euler-Maclaurin tail needs s >= 2");
  if (a.sign() < 0 || start < 0 || (start == 0 && a.is_zero())) throw DomainError("Hurwitz tail needs n + a > 0");
  PrecisionScope scope(prec);
  const long m = std::max({start, 50L, prec.working_digits(), s});

  BigReal direct;
  for (long n = start; n < m; ++n) direct += pow(a + n, -s);

  const BigReal x = a + m;
  const BigReal inv_x2 = 1 / (x * x);
  BigReal power = pow(x, -s);  // x^{-s}
  BigReal tail = power * x / (s - 1) + power / 2;

  // Correction terms B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}.
  const BigReal eps = pow10(-prec.working_digits() - 5);
  BigReal rising(s);  // (s)_1
  BigReal xpow = power / x;  // x^{-s-1}
  BigReal previous;
  for (long j = 1;; ++j) {
    BigReal term = BigReal(exact::bernoulli_over_factorial(static_cast<std::size_t>(2 * j))) * rising * xpow;
    tail += term;
    BigReal mag = abs(term);
    if (mag < eps * abs(tail)) break;
    if (j > 1 && mag > previous) throw NumericFailure("Euler-Maclaurin correction diverged");
    previous = mag;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    xpow *= inv_x2;
  }
  return direct + tail;
}

BigReal zeta_euler_maclaurin(long s, const Precision& prec) {
  if (s < 2) throw DomainError("zeta(s) needs s >= 2");
  PrecisionScope scope(prec);
  return hurwitz_tail(s, BigReal(0L), 1, prec);
}

Rational zeta_even_rational_factor(long s) {
  if (s < 2 || s % 2 != 0) throw DomainError("closed form needs even s >= 2");
  const long m = s / 2;
  Rational r = exact::bernoulli_over_factorial(static_cast<std::size_t>(s)) * Rational(exact::ipow(2, static_cast<unsigned long>(s - 1)));
  return m % 2 == 1 ? r : Rational(-r);
}

BigReal zeta_even_exact(long s, const Precision& prec) {
  PrecisionScope scope(prec);
  return BigReal(zeta_even_rational_factor(s)) * pow(pi(), s);
}

BigReal zeta_int(long s, const Precision& prec) {
  if (s < 2) throw DomainError("zeta(s) needs s >= 2");
  return s % 2 == 0 ? zeta_even_exact(s, prec) : zeta_euler_maclaurin(s, prec);
}

BigReal l_principal(long s, const exact::Prime& p, const Precision& prec) {
  BigReal z = zeta_int(s, prec);
  PrecisionScope scope(prec);
  const Rational factor = 1 - Rational(1, exact::ipow(p.value(), static_cast<unsigned long>(s)));
  return z * BigReal(factor);
}

Rational zeta_nonpositive(long s) {
  if (s > 0) throw DomainError("zeta_nonpositive needs s <= 0");
  if (s == 0) return Rational(-1, 2);
  if (s % 2 == 0) return Rational(0);
  const long n = 1 - s;
  return -exact::bernoulli(static_cast<std::size_t>(n)) / Rational(n);
}

}  // namespace rls::bigfloat
