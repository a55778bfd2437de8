#include "rls/bigfloat/precision.hpp"

#include <cmath>

#include "rls/errors.hpp"

namespace rls::bigfloat {

namespace {

thread_local mpfr_prec_t tls_bits = 0;

}  // namespace

mpfr_prec_t digits_to_bits(long decimal_digits) {
  if (decimal_digits <= 0) throw DomainError("precision must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(decimal_digits) * 3.3219280948873623)) + 8;
}

mpfr_prec_t Precision::bits() const { return digits_to_bits(working_digits()); }

Precision make_precision(long digits, long guard) {
  if (digits <= 0) throw DomainError("digits must be positive");
  if (guard < 0) throw DomainError("guard digits must be non-negative");
  return {digits, guard};
}

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(current()) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw DomainError("precision out of range");
  tls_bits = bits;
}

PrecisionScope::~PrecisionScope() { tls_bits = saved_; }

mpfr_prec_t PrecisionScope::current() {
  if (tls_bits == 0) tls_bits = Precision{}.bits();
  return tls_bits;
}

}  // namespace rls::bigfloat
