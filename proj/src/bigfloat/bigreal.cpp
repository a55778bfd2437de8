#include "rls/bigfloat/bigreal.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "rls/errors.hpp"

namespace rls::bigfloat {

BigReal::BigReal() {
  mpfr_init2(v_, PrecisionScope::current());
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long v) {
  mpfr_init2(v_, PrecisionScope::current());
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(double v) {
  mpfr_init2(v_, PrecisionScope::current());
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const exact::Integer& v) {
  mpfr_init2(v_, PrecisionScope::current());
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const exact::Rational& v) {
  mpfr_init2(v_, PrecisionScope::current());
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::parse(std::string_view text) {
  BigReal r;
  std::string s(text);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("not a decimal number: " + s);
  }
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

double BigReal::log10_abs() const {
  if (is_zero()) return -HUGE_VAL;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

namespace {

std::string format(const char* fmt, int n, mpfr_srcptr v) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, fmt, n, v) < 0) throw NumericFailure("formatting failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

std::string BigReal::to_scientific(int sig_digits) const {
  return format("%.*Re", sig_digits > 1 ? sig_digits - 1 : 0, v_);
}

std::string BigReal::to_fixed(int decimals) const { return format("%.*Rf", decimals, v_); }

std::string BigReal::to_fixed_truncated(int decimals) const { return format("%.*RZf", decimals, v_); }

#define RLS_BINARY(op, fn)                                       \
  BigReal operator op(const BigReal& a, const BigReal& b) {      \
    BigReal r;                                                   \
    fn(r.get(), a.get(), b.get(), MPFR_RNDN);                    \
    return r;                                                    \
  }                                                              \
  BigReal operator op(const BigReal& a, long b) {                \
    BigReal r;                                                   \
    fn##_si(r.get(), a.get(), b, MPFR_RNDN);                     \
    return r;                                                    \
  }

RLS_BINARY(+, mpfr_add)
RLS_BINARY(-, mpfr_sub)
RLS_BINARY(*, mpfr_mul)
RLS_BINARY(/, mpfr_div)
#undef RLS_BINARY

BigReal operator+(long a, const BigReal& b) { return b + a; }
BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator-(long a, const BigReal& b) {
  BigReal r;
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r;
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a) {
  BigReal r;
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

#define RLS_UNARY(name, fn)         \
  BigReal name(const BigReal& x) {  \
    BigReal r;                      \
    fn(r.get(), x.get(), MPFR_RNDN); \
    return r;                       \
  }

RLS_UNARY(abs, mpfr_abs)
RLS_UNARY(sqrt, mpfr_sqrt)
RLS_UNARY(exp, mpfr_exp)
RLS_UNARY(expm1, mpfr_expm1)
RLS_UNARY(log, mpfr_log)
RLS_UNARY(sin, mpfr_sin)
RLS_UNARY(cos, mpfr_cos)
RLS_UNARY(tan, mpfr_tan)
RLS_UNARY(sinh, mpfr_sinh)
RLS_UNARY(cosh, mpfr_cosh)
RLS_UNARY(tanh, mpfr_tanh)
RLS_UNARY(cot, mpfr_cot)
RLS_UNARY(coth, mpfr_coth)
#undef RLS_UNARY

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal pow10(long e) {
  BigReal r;
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

namespace {

struct PiCache {
  std::shared_mutex mutex;
  std::map<mpfr_prec_t, std::unique_ptr<BigReal>> values;
};

PiCache& pi_cache() {
  static PiCache cache;
  return cache;
}

}  // namespace

BigReal pi() {
  const mpfr_prec_t bits = PrecisionScope::current();
  PiCache& cache = pi_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.values.find(bits);
    if (it != cache.values.end()) return *it->second;
  }
  auto value = std::make_unique<BigReal>();
  mpfr_const_pi(value->get(), MPFR_RNDN);
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.values.try_emplace(bits, std::move(value));
  return *it->second;
}

}  // namespace rls::bigfloat
