#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rls::exact {

using Integer = mpz_class;

/// Exact fraction in lowest terms with positive denominator. GMP keeps
/// mpq_class canonical after every arithmetic operation; values built from
/// a raw numerator/denominator go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "n", "-n" or "n/d".
Rational parse_rational(std::string_view text);

/// Always "num/den", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& q);

Integer ipow(const Integer& base, unsigned long exp);
Integer ipow(long base, unsigned long exp);

/// Exact a + bi with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussianRational& g);

}  // namespace rls::exact
