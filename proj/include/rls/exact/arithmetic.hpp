#pragma once

#include <functional>

#include "rls/exact/primes.hpp"
#include "rls/exact/rational.hpp"

namespace rls::exact {

/// Principal character modulo p: 1 when p does not divide n, else 0.
inline int chi_principal(long n, const Prime& p) { return n % p.value() == 0 ? 0 : 1; }

/// Twist coefficient a_n: 1 if gcd(n, p) = 1, otherwise 1 - p. These are the
/// Dirichlet coefficients of zeta(s)(1 - p^{1-s}).
long a_coeff(long n, const Prime& p);

/// sum over divisors d of n with p not dividing d of d^{-s}. Negative s gives
/// positive powers.
Rational sigma_chi(long n, long s, const Prime& p);

/// Classical sigma_{-s}(n) = sum_{d | n} d^{-s}.
Rational sigma_classical(long n, long s);

using ArithmeticFunction = std::function<Rational(long)>;

/// (f * g)(n) = sum_{d | n} f(d) g(n / d).
Rational dirichlet_convolve(const ArithmeticFunction& f, const ArithmeticFunction& g, long n);

/// Checks the coefficient identity behind
///   sum a_n sigma_{-(2k+1),chi}(n) n^{-s} = L(s+2k+1, chi) zeta(s) (1 - p^{1-s})
/// at index n: the right side is expanded as a triple Dirichlet convolution
/// and compared exactly with a_n * sigma_chi(n, 2k+1, p).
bool convolution_coefficient_check(long n, long k, const Prime& p);

}  // namespace rls::exact
