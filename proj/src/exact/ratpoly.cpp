#include "rls/exact/ratpoly.hpp"

#include <algorithm>
#include <sstream>

#include "rls/errors.hpp"

namespace rls::exact {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : RatPoly(std::vector<Rational>(coeffs)) {}

RatPoly RatPoly::monomial(Rational c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = std::move(c);
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::size_t RatPoly::trailing_zeros() const {
  std::size_t m = 0;
  while (m < coeffs_.size() && sgn(coeffs_[m]) == 0) ++m;
  return m;
}

bool RatPoly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Rational RatPoly::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) throw DomainError("zero polynomial cannot be made monic");
  return *this * Rational(1 / leading());
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Rational(static_cast<unsigned long>(i));
  return RatPoly(std::move(r));
}

RatPoly RatPoly::scale_variable(const Rational& c) const {
  std::vector<Rational> r(coeffs_);
  Rational power = 1;
  for (auto& x : r) {
    x *= power;
    power *= c;
  }
  return RatPoly(std::move(r));
}

RatPoly RatPoly::divide_by_z_power(std::size_t m) const {
  if (trailing_zeros() < m && !is_zero()) throw DomainError("polynomial not divisible by requested power of z");
  if (is_zero()) return {};
  return RatPoly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(m), coeffs_.end()));
}

RatPoly RatPoly::even_to_w() const {
  if (!is_even()) throw DomainError("polynomial has odd-degree terms");
  std::vector<Rational> r;
  for (std::size_t i = 0; i < coeffs_.size(); i += 2) r.push_back(coeffs_[i]);
  return RatPoly(std::move(r));
}

RatPoly RatPoly::reversed() const {
  std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
  return RatPoly(std::move(r));
}

std::string RatPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Integer num = abs(c.get_num());
    const Integer& den = c.get_den();
    if (i == 0 || num != 1) os << num.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    if (den != 1) os << '/' << den.get_str();
  }
  return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  const long da = a.degree();
  if (da < db) return {RatPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational& lb = b.leading();
  for (long i = da; i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] / lb;
    if (sgn(q) == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

namespace {

using IntPoly = std::vector<Integer>;  // ascending, trimmed

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long deg(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

/// Clears denominators; the result is a nonzero integer multiple of q.
IntPoly to_integer(const RatPoly& q) {
  Integer l = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  IntPoly r;
  r.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) r.push_back(c.get_num() * (l / c.get_den()));
  return r;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(IntPoly p) {
  Integer g = content(p);
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return p;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const long db = deg(b);
  const Integer& lb = b.back();
  long steps = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    Integer la = a.back();
    const long shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (long j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
    trim(a);
    --steps;
  }
  // Scale by the lc(b) powers skipped when the degree dropped by more than one.
  if (steps > 0) {
    Integer f = ipow(lb, static_cast<unsigned long>(steps));
    for (auto& c : a) c *= f;
  }
  return a;
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> r;
  r.reserve(p.size());
  for (const auto& c : p) r.emplace_back(c);
  return RatPoly(std::move(r));
}

}  // namespace

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials is undefined");
  if (b.is_zero()) return a.monic();
  if (a.is_zero()) return b.monic();

  IntPoly f = primitive_part(to_integer(a));
  IntPoly g = primitive_part(to_integer(b));
  if (deg(f) < deg(g)) std::swap(f, g);

  // Subresultant PRS: divides each pseudo-remainder by the predictable
  // factor g * h^delta so coefficients grow only like the subresultants.
  Integer gg = 1;
  Integer h = 1;
  while (true) {
    const long delta = deg(f) - deg(g);
    IntPoly r = pseudo_remainder(f, g);
    if (r.empty()) break;
    if (deg(r) == 0) return RatPoly{Rational(1)};
    Integer divisor = gg * ipow(h, static_cast<unsigned long>(delta));
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    f = std::move(g);
    g = std::move(r);
    gg = f.back();
    if (delta == 1) {
      h = gg;
    } else if (delta > 1) {
      Integer num = ipow(gg, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return to_rational(primitive_part(g)).monic();
}

GaussianRational eval_gaussian(const RatPoly& f, const GaussianRational& x) {
  GaussianRational acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc *= x;
    acc.re += *it;
  }
  return acc;
}

}  // namespace rls::exact
