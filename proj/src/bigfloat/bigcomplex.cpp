#include "rls/bigfloat/bigcomplex.hpp"

#include "rls/errors.hpp"

namespace rls::bigfloat {

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigReal r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigReal d = norm(o);
  if (d.is_zero()) throw NumericFailure("complex division by zero");
  BigReal r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

std::string BigComplex::to_scientific(int sig_digits) const {
  std::string s = re.to_scientific(sig_digits);
  s += im.sign() < 0 ? " - " : " + ";
  s += abs(im).to_scientific(sig_digits);
  s += "i";
  return s;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigComplex r(a);
  r /= b;
  return r;
}

BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal abs(const BigComplex& z) {
  BigReal r;
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.re);
  BigReal s, c;
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
  return {m * c, m * s};
}

BigComplex log(const BigComplex& z) {
  if (z.re.is_zero() && z.im.is_zero()) throw NumericFailure("log of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.im.is_zero()) {
    if (z.re.sign() >= 0) return {sqrt(z.re), BigReal()};
    return {BigReal(), sqrt(-z.re)};
  }
  BigReal r = abs(z);
  if (z.re.sign() >= 0) {
    BigReal t = sqrt((r + z.re) / 2);
    return {t, z.im / (2 * t)};
  }
  BigReal t = sqrt((r - z.re) / 2);
  if (z.im.sign() < 0) t = -t;
  return {z.im / (2 * t), t};
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(1L) / pow(z, -n);
  BigComplex result(1L), base(z);
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

BigComplex tanh(const BigComplex& z) {
  BigReal a2 = z.re * 2, b2 = z.im * 2;
  BigReal sb, cb;
  mpfr_sin_cos(sb.get(), cb.get(), b2.get(), MPFR_RNDN);
  BigReal sa, ca;
  mpfr_sinh_cosh(sa.get(), ca.get(), a2.get(), MPFR_RNDN);
  BigReal d = ca + cb;
  if (d.is_zero()) throw NumericFailure("tan/tanh: pole");
  return {sa / d, sb / d};
}

BigComplex tan(const BigComplex& z) {
  BigReal a2 = z.re * 2, b2 = z.im * 2;
  BigReal sa, ca;
  mpfr_sin_cos(sa.get(), ca.get(), a2.get(), MPFR_RNDN);
  BigReal sb, cb;
  mpfr_sinh_cosh(sb.get(), cb.get(), b2.get(), MPFR_RNDN);
  BigReal d = ca + cb;
  if (d.is_zero()) throw NumericFailure("tan/tanh: pole");
  return {sa / d, sb / d};
}

BigComplex cot(const BigComplex& z) {
  BigReal a2 = z.re * 2, b2 = z.im * 2;
  BigReal sa, ca;
  mpfr_sin_cos(sa.get(), ca.get(), a2.get(), MPFR_RNDN);
  BigReal sb, cb;
  mpfr_sinh_cosh(sb.get(), cb.get(), b2.get(), MPFR_RNDN);
  BigReal d = cb - ca;
  if (d.is_zero()) throw NumericFailure("cot: pole");
  return {sa / d, -sb / d};
}

BigComplex coth(const BigComplex& z) {
  BigReal a2 = z.re * 2, b2 = z.im * 2;
  BigReal sb, cb;
  mpfr_sin_cos(sb.get(), cb.get(), b2.get(), MPFR_RNDN);
  BigReal sa, ca;
  mpfr_sinh_cosh(sa.get(), ca.get(), a2.get(), MPFR_RNDN);
  BigReal d = ca - cb;
  if (d.is_zero()) throw NumericFailure("coth: pole");
  return {sa / d, -sb / d};
}

}  // namespace rls::bigfloat
