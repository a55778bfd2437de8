#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "rls/bigfloat/precision.hpp"
#include "rls/exact/rational.hpp"

namespace rls::bigfloat {

/// Owning handle to an mpfr_t. New values take the precision of the innermost
/// PrecisionScope on the calling thread; copies keep the source precision.
class BigReal {
 public:
  BigReal();
  BigReal(long v);  // NOLINT(google-explicit-constructor)
  BigReal(int v) : BigReal(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit BigReal(double v);
  explicit BigReal(const exact::Integer& v);
  explicit BigReal(const exact::Rational& v);
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  /// Decimal or scientific literal, e.g. "1.25", "-3e-7".
  static BigReal parse(std::string_view text);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator+=(long o);
  BigReal& operator-=(long o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-10 logarithm as a double; -inf for zero.
  double log10_abs() const;

  /// d significant digits, e.g. "1.234e-05".
  std::string to_scientific(int sig_digits) const;
  /// Rounded to nearest with the given number of decimals.
  std::string to_fixed(int decimals) const;
  /// Truncated toward zero with the given number of decimals.
  std::string to_fixed_truncated(int decimals) const;

 private:
  mpfr_t v_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator*(const BigReal& a, long b);
BigReal operator/(const BigReal& a, long b);
BigReal operator+(long a, const BigReal& b);
BigReal operator-(long a, const BigReal& b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(long a, const BigReal& b);
BigReal operator-(const BigReal& a);

bool operator==(const BigReal& a, const BigReal& b);
bool operator<(const BigReal& a, const BigReal& b);
inline bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
inline bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return !(b < a); }
inline bool operator>=(const BigReal& a, const BigReal& b) { return !(a < b); }

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal tan(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal tanh(const BigReal& x);
BigReal cot(const BigReal& x);
BigReal coth(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal max(const BigReal& a, const BigReal& b);
/// 10^e exactly rounded at the current precision.
BigReal pow10(long e);

/// pi at the current precision, cached per precision.
BigReal pi();

}  // namespace rls::bigfloat
