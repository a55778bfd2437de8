#pragma once

#include "rls/bigfloat/bigreal.hpp"
#include "rls/exact/primes.hpp"

namespace rls::bigfloat {

/// sum_{n >= start} (n + a)^{-s} for s >= 2, a >= 0: direct summation up to
/// M = max(start, 50, s, working digits), Euler-Maclaurin beyond.
BigReal hurwitz_tail(long s, const BigReal& a, long start, const Precision& prec);

/// zeta(s) by Euler-Maclaurin, s >= 2. Never uses the closed form.
BigReal zeta_euler_maclaurin(long s, const Precision& prec);

/// r with zeta(s) = r * pi^s, s even and positive.
exact::Rational zeta_even_rational_factor(long s);
BigReal zeta_even_exact(long s, const Precision& prec);

/// zeta(s) for integer s >= 2, closed form when s is even.
BigReal zeta_int(long s, const Precision& prec);

/// L(s, chi_1) = zeta(s) (1 - p^{-s}) for the principal character mod p.
BigReal l_principal(long s, const exact::Prime& p, const Precision& prec);

/// zeta(s) for s <= 0 (trivial zeros and -B_{1-s}/(1-s)), exact.
exact::Rational zeta_nonpositive(long s);

}  // namespace rls::bigfloat
