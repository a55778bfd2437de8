#include "rls/exact/bernoulli.hpp"

#include <mutex>
#include <string>

#include "rls/errors.hpp"

namespace rls::exact {

BernoulliCache& BernoulliCache::instance() {
  static BernoulliCache cache;
  return cache;
}

BernoulliCache::BernoulliCache() { values_.emplace_back(1); }

std::size_t BernoulliCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

Rational BernoulliCache::get(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  std::unique_lock lock(mutex_);
  extend_to(n);
  return values_[n];
}

void BernoulliCache::extend_to(std::size_t n) {
  while (values_.size() <= n) {
    const std::size_t m = values_.size();
    if (m >= 3 && m % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j; odd j >= 3 contribute nothing.
    Integer c = 1;  // C(m+1, 0)
    Rational acc = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j < 2 || j % 2 == 0) acc += Rational(c) * values_[j];
      c = c * Integer(static_cast<unsigned long>(m + 1 - j)) / Integer(static_cast<unsigned long>(j + 1));
    }
    Rational b = -acc / Rational(static_cast<unsigned long>(m + 1));
    b.canonicalize();
    values_.push_back(std::move(b));
  }
}

Rational bernoulli(std::size_t n) { return BernoulliCache::instance().get(n); }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational bernoulli_over_factorial(std::size_t n) {
  Rational q = bernoulli(n) / Rational(factorial(n));
  q.canonicalize();
  return q;
}

namespace {

Rational tan_family_coeff(long m, bool alternating) {
  if (m < 1 || m % 2 == 0) {
    throw DomainError("tan/tanh coefficient index must be odd and positive, got " + std::to_string(m));
  }
  const unsigned long j = static_cast<unsigned long>((m + 1) / 2);
  Integer four_j = ipow(2, 2 * j);
  Rational c = Rational(four_j * (four_j - 1)) * bernoulli_over_factorial(2 * j);
  if (alternating && (j - 1) % 2 == 1) c = -c;
  return c;
}

}  // namespace

Rational tan_coeff(long m) { return tan_family_coeff(m, true); }
Rational tanh_coeff(long m) { return tan_family_coeff(m, false); }

}  // namespace rls::exact
