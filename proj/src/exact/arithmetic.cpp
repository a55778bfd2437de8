#include "rls/exact/arithmetic.hpp"

#include <string>

#include "rls/errors.hpp"

namespace rls::exact {
namespace {

void require_positive(long n) {
  if (n < 1) throw DomainError("index must be positive, got " + std::to_string(n));
}

Rational inverse_power(long d, long s) {
  if (s >= 0) return Rational(1, ipow(d, static_cast<unsigned long>(s)));
  return Rational(ipow(d, static_cast<unsigned long>(-s)));
}

}  // namespace

long a_coeff(long n, const Prime& p) {
  require_positive(n);
  return n % p.value() == 0 ? 1 - p.value() : 1;
}

Rational sigma_chi(long n, long s, const Prime& p) {
  require_positive(n);
  Rational acc = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const long e = n / d;
    if (d % p.value() != 0) acc += inverse_power(d, s);
    if (e != d && e % p.value() != 0) acc += inverse_power(e, s);
  }
  return acc;
}

Rational sigma_classical(long n, long s) {
  require_positive(n);
  Rational acc = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc += inverse_power(d, s);
    if (n / d != d) acc += inverse_power(n / d, s);
  }
  return acc;
}

Rational dirichlet_convolve(const ArithmeticFunction& f, const ArithmeticFunction& g, long n) {
  require_positive(n);
  Rational acc = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) acc += f(d) * g(n / d);
  }
  return acc;
}

bool convolution_coefficient_check(long n, long k, const Prime& p) {
  require_positive(n);
  const long s = 2 * k + 1;
  const long pv = p.value();
  // L(s + 2k + 1, chi_1): chi_1(d) d^{-(2k+1)}
  ArithmeticFunction l_coeff = [&](long d) -> Rational {
    return d % pv == 0 ? Rational(0) : inverse_power(d, s);
  };
  // zeta(s)
  ArithmeticFunction one = [](long) -> Rational { return 1; };
  // 1 - p^{1-s} = 1 * 1^{-s} - p * p^{-s}
  ArithmeticFunction euler_factor = [&](long d) -> Rational {
    if (d == 1) return 1;
    if (d == pv) return -pv;
    return 0;
  };
  ArithmeticFunction zeta_times_factor = [&](long m) { return dirichlet_convolve(one, euler_factor, m); };
  const Rational lhs = dirichlet_convolve(l_coeff, zeta_times_factor, n);
  const Rational rhs = Rational(a_coeff(n, p)) * sigma_chi(n, s, p);
  return lhs == rhs;
}

}  // namespace rls::exact
