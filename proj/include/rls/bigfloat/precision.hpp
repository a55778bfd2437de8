#pragma once

#include <mpfr.h>

namespace rls::bigfloat {

/// Requested accuracy in decimal digits plus hidden guard digits.
struct Precision {
  long digits = 50;
  long guard = 15;

  long working_digits() const { return digits + guard; }
  mpfr_prec_t bits() const;
  Precision scaled(long factor) const { return {digits * factor, guard}; }
};

Precision make_precision(long digits, long guard = 15);

mpfr_prec_t digits_to_bits(long decimal_digits);

/// Sets the precision of newly created BigReal values on this thread for the
/// lifetime of the scope. Scopes nest.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits);
  explicit PrecisionScope(const Precision& prec) : PrecisionScope(prec.bits()) {}
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  static mpfr_prec_t current();

 private:
  mpfr_prec_t saved_;
};

}  // namespace rls::bigfloat
