#include "rls/polynomials/ramanujan.hpp"

#include <numeric>

#include "rls/errors.hpp"
#include "rls/exact/bernoulli.hpp"

namespace rls::polynomials {

using exact::bernoulli_over_factorial;
using exact::ipow;

Rational ramanujan_type_coefficient(const Prime& p, long k, long j) {
  if (j < 1 || j > k) throw DomainError("coefficient index outside 1..k");
  const unsigned long a = static_cast<unsigned long>(2 * j);
  const unsigned long b = static_cast<unsigned long>(2 * k + 2 - 2 * j);
  return Rational((ipow(p.value(), a) - 1) * (ipow(p.value(), b) - 1)) * bernoulli_over_factorial(a) *
         bernoulli_over_factorial(b);
}

RamanujanTypePoly build_ramanujan_type(const Prime& p, long k) {
  if (k <= 0) throw EmptySumError("the j-sum over 1..k is empty for k <= 0");
  std::vector<Rational> scaled(static_cast<std::size_t>(2 * k + 1), Rational(0));
  std::vector<Rational> poly(scaled.size(), Rational(0));
  for (long j = 1; j <= k; ++j) {
    const auto d = static_cast<std::size_t>(2 * k + 2 - 2 * j);
    scaled[d] = ramanujan_type_coefficient(p, k, j);
    poly[d] = scaled[d] * Rational(ipow(p.value(), d));
  }
  return {p.value(), k, RatPoly(std::move(poly)), RatPoly(std::move(scaled))};
}

ClassicalRamanujanPoly build_classical(long k) {
  if (k < 1) throw DomainError("classical polynomial needs k >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(2 * k + 3), Rational(0));
  for (long j = 0; j <= k + 1; ++j) {
    const auto a = static_cast<std::size_t>(2 * j);
    const auto b = static_cast<std::size_t>(2 * k + 2 - 2 * j);
    c[b] = bernoulli_over_factorial(a) * bernoulli_over_factorial(b);
  }
  return {k, RatPoly(std::move(c))};
}

bool self_reciprocal_check(const RatPoly& q) {
  if (q.is_zero()) throw DomainError("self-reciprocity of the zero polynomial");
  return q.reversed() == q;
}

int delta_k(long k) {
  if (k < 0) throw DomainError("delta_k needs k >= 0");
  return k % 2 == 0 ? 1 : 0;
}

int delta_k_classical(long k) {
  if (k < 0) throw DomainError("delta_k needs k >= 0");
  switch (std::gcd(k, 6L)) {
    case 1: return 0;
    case 2: return 1;
    case 3: return 2;
    default: return 3;
  }
}

nlohmann::ordered_json poly_to_json(const RatPoly& q) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& c : q.coeffs()) j.push_back(exact::to_string(c));
  return j;
}

RatPoly poly_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw DomainError("polynomial coefficients must be strings");
    c.push_back(exact::parse_rational(e.get<std::string>()));
  }
  return RatPoly(std::move(c));
}

}  // namespace rls::polynomials
