#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "rls/exact/rational.hpp"

namespace rls::exact {

/// Memoized Bernoulli numbers B_n (B_1 = -1/2), extended on demand from the
/// recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0. Readers share the table;
/// extension is serialized and idempotent.
class BernoulliCache {
 public:
  static BernoulliCache& instance();

  Rational get(std::size_t n);
  std::size_t size() const;

 private:
  BernoulliCache();
  void extend_to(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

Rational bernoulli(std::size_t n);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// B_n / n!, the building block of every finite sum in the identities.
Rational bernoulli_over_factorial(std::size_t n);

/// Coefficient of z^m in the Maclaurin series of tan z (m odd, m >= 1).
Rational tan_coeff(long m);
/// Coefficient of z^m in the Maclaurin series of tanh z (m odd, m >= 1).
Rational tanh_coeff(long m);

}  // namespace rls::exact
