#include "rls/bigfloat/expr.hpp"

#include <cctype>

#include "rls/errors.hpp"

namespace rls::bigfloat {

using exact::Rational;

std::string PiMonomial::label(bool unicode) const {
  const std::string pi = unicode ? "π" : "pi";
  const mpz_class& num = coeff.get_num();
  const mpz_class& den = coeff.get_den();
  if (pi_power == 0) return den == 1 ? num.get_str() : num.get_str() + "/" + den.get_str();
  std::string s;
  if (num == -1) s = "-";
  else if (num != 1) s = num.get_str();
  s += pi;
  if (pi_power != 1) s += "^" + std::to_string(pi_power);
  if (den != 1) s += "/" + den.get_str();
  return s;
}

BigReal PiMonomial::value() const { return BigReal(coeff) * pow(pi(), pi_power); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedValue parse() {
    ParsedValue v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == 'p' || c == 'i';
  }

  ParsedValue expr() {
    ParsedValue v = term();
    while (peek('+') || peek('-')) {
      const bool plus = text_[pos_++] == '+';
      ParsedValue rhs = term();
      v.value = plus ? v.value + rhs.value : v.value - rhs.value;
      v.exact = add(v.exact, rhs.exact, plus);
    }
    return v;
  }

  static std::optional<PiMonomial> add(const std::optional<PiMonomial>& a, const std::optional<PiMonomial>& b,
                                       bool plus) {
    if (!a || !b) return std::nullopt;
    const Rational bc = plus ? b->coeff : Rational(-b->coeff);
    if (b->coeff == 0) return a;
    if (a->coeff == 0) return PiMonomial{bc, b->pi_power};
    if (a->pi_power != b->pi_power) return std::nullopt;
    const Rational c = a->coeff + bc;
    return PiMonomial{c, c == 0 ? 0 : a->pi_power};
  }

  ParsedValue term() {
    ParsedValue v = unary();
    for (;;) {
      if (peek('*') || peek('/')) {
        const bool times = text_[pos_++] == '*';
        ParsedValue rhs = unary();
        combine(v, rhs, times);
      } else if (starts_primary()) {
        ParsedValue rhs = power();
        combine(v, rhs, true);
      } else {
        return v;
      }
    }
  }

  void combine(ParsedValue& v, const ParsedValue& rhs, bool times) {
    if (!times && rhs.value.re.is_zero() && rhs.value.im.is_zero()) fail("division by zero");
    v.value = times ? v.value * rhs.value : v.value / rhs.value;
    if (v.exact && rhs.exact) {
      if (times) {
        v.exact->coeff *= rhs.exact->coeff;
        v.exact->pi_power += rhs.exact->pi_power;
      } else {
        v.exact->coeff /= rhs.exact->coeff;
        v.exact->pi_power -= rhs.exact->pi_power;
      }
    } else {
      v.exact.reset();
    }
  }

  ParsedValue unary() {
    if (peek('-')) {
      ++pos_;
      ParsedValue v = unary();
      v.value = -v.value;
      if (v.exact) v.exact->coeff = -v.exact->coeff;
      return v;
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  ParsedValue power() {
    ParsedValue base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("exponent must be a small integer");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (negative) e = -e;
    if (e < 0 && base.value.re.is_zero() && base.value.im.is_zero()) fail("division by zero");
    base.value = pow(base.value, e);
    if (base.exact) {
      Rational c = 1;
      const Rational b = e >= 0 ? base.exact->coeff : Rational(1 / base.exact->coeff);
      for (long n = 0; n < (e >= 0 ? e : -e); ++n) c *= b;
      base.exact = PiMonomial{c, base.exact->pi_power * e};
    }
    return base;
  }

  ParsedValue primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParsedValue v = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return v;
    }
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return {BigComplex(pi()), PiMonomial{Rational(1), 1}};
    }
    if (c == 'i') {
      ++pos_;
      return {BigComplex::i(), std::nullopt};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    fail(std::string("unexpected '") + c + "'");
  }

  ParsedValue number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    long scale = 0;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t frac = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      digits += std::string(text_.substr(frac, pos_ - frac));
      scale = static_cast<long>(pos_ - frac);
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      bool negative = false;
      if (q < text_.size() && (text_[q] == '-' || text_[q] == '+')) negative = text_[q++] == '-';
      const std::size_t es = q;
      while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) ++q;
      if (q > es && q - es <= 6) {
        const long e = std::stol(std::string(text_.substr(es, q - es)));
        scale += negative ? e : -e;
        pos_ = q;
      }
    }
    if (digits.empty()) fail("malformed number");
    Rational v{mpz_class(digits, 10)};
    if (scale > 0) v /= Rational(exact::ipow(10, static_cast<unsigned long>(scale)));
    if (scale < 0) v *= Rational(exact::ipow(10, static_cast<unsigned long>(-scale)));
    return {BigComplex(BigReal(v)), PiMonomial{v, 0}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedValue parse_expression(std::string_view text) { return Parser(text).parse(); }

BigComplex parse_complex(std::string_view text) { return parse_expression(text).value; }

BigReal parse_real(std::string_view text) {
  BigComplex z = parse_complex(text);
  if (!z.im.is_zero()) throw DomainError("expected a real value: '" + std::string(text) + "'");
  return z.re;
}

}  // namespace rls::bigfloat
