#pragma once

#include <string>

#include "rls/bigfloat/bigreal.hpp"

namespace rls::bigfloat {

class BigComplex {
 public:
  BigComplex() = default;
  BigComplex(BigReal re) : re(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  BigComplex(long re) : re(re) {}  // NOLINT(google-explicit-constructor)
  BigComplex(BigReal re, BigReal im) : re(std::move(re)), im(std::move(im)) {}

  static BigComplex i() { return {BigReal(0L), BigReal(1L)}; }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  bool is_real() const { return im.is_zero(); }
  std::string to_scientific(int sig_digits) const;

  BigReal re;
  BigReal im;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
/// Principal branch.
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex tan(const BigComplex& z);
BigComplex tanh(const BigComplex& z);
BigComplex cot(const BigComplex& z);
BigComplex coth(const BigComplex& z);

}  // namespace rls::bigfloat
