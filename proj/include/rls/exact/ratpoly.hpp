#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rls/exact/rational.hpp"

namespace rls::exact {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly monomial(Rational c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of z^i, zero past the degree.
  Rational coeff(std::size_t i) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& leading() const;

  /// Multiplicity of the root z = 0 (number of vanishing low coefficients).
  std::size_t trailing_zeros() const;
  /// Only even powers of z present.
  bool is_even() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend RatPoly operator-(const RatPoly& a) { return a * Rational(-1); }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  Rational operator()(const Rational& z) const;

  RatPoly monic() const;
  RatPoly derivative() const;
  /// q(c z).
  RatPoly scale_variable(const Rational& c) const;
  /// q(z) / z^m; requires trailing_zeros() >= m.
  RatPoly divide_by_z_power(std::size_t m) const;
  /// r with q(z) = r(z^2); requires is_even().
  RatPoly even_to_w() const;
  /// z^deg q(1/z).
  RatPoly reversed() const;

  /// Human-readable form in ascending degree, e.g. "31z^2/30 + 169z^4/225".
  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact division with remainder over Q; b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd over Q, computed on primitive integer representatives with the
/// subresultant remainder sequence. gcd(f, 0) = monic(f); both zero throws.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

GaussianRational eval_gaussian(const RatPoly& f, const GaussianRational& x);

}  // namespace rls::exact
