#include <random>

#include "doctest.h"
#include "rls/errors.hpp"
#include "rls/exact/arithmetic.hpp"
#include "rls/exact/bernoulli.hpp"
#include "rls/exact/primes.hpp"
#include "rls/exact/ratpoly.hpp"
#include "rls/exact/rational.hpp"

using namespace rls::exact;

namespace {

// Akiyama-Tanigawa transform; yields B_1 = +1/2.
std::vector<Rational> akiyama_tanigawa(std::size_t n) {
  std::vector<Rational> out, a(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    a[m] = Rational(1, static_cast<unsigned long>(m + 1));
    for (std::size_t j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<unsigned long>(j)) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

// Maclaurin coefficients of sin/cos by power series division.
std::vector<Rational> tan_series(std::size_t n) {
  std::vector<Rational> s(n + 1), c(n + 1), t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational inv_fact(1);
    inv_fact /= Rational(factorial(static_cast<unsigned long>(i)));
    const long sign = (i / 2) % 2 == 0 ? 1 : -1;
    if (i % 2 == 1) s[i] = inv_fact * sign;
    else c[i] = inv_fact * sign;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = s[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= c[j] * t[i - j];
    t[i] = acc;
  }
  return t;
}

Rational brute_sigma(long n, long s, long p) {
  Rational acc = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || (p > 0 && d % p == 0)) continue;
    acc += s >= 0 ? Rational(1, ipow(d, static_cast<unsigned long>(s))) : Rational(ipow(d, static_cast<unsigned long>(-s)));
  }
  return acc;
}

RatPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(make_rational(num(rng), den(rng)));
  if (sgn(c.back()) == 0) c.back() = 1;
  return RatPoly(c);
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 7)) == "0/1");
  CHECK(to_string(make_rational(5)) == "5/1");
  CHECK(parse_rational("-12/8") == make_rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(make_rational(1, 0), rls::DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), rls::DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), rls::DomainError);
}

TEST_CASE("gaussian rational field operations") {
  GaussianRational a{make_rational(1, 2), make_rational(3)}, b{make_rational(-2), make_rational(1, 3)};
  CHECK((a * b) / b == a);
  CHECK((a - b) + b == a);
  CHECK_THROWS_AS(a / GaussianRational{}, rls::DomainError);
  CHECK(to_string(GaussianRational{make_rational(1), make_rational(-1, 2)}) == "1/1 + -1/2i");
}

TEST_CASE("primality") {
  for (long n = -5; n < 20000; ++n) {
    bool trial = n >= 2;
    for (long d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    REQUIRE(is_prime(n < 0 ? 0 : static_cast<std::uint64_t>(n)) == trial);
  }
  CHECK(is_prime((1ULL << 61) - 1));
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK(Prime(7).value() == 7);
  for (long bad : {-7L, 0L, 1L, 4L, 15L}) CHECK_THROWS_AS(Prime{bad}, rls::DomainError);
}

TEST_CASE("bernoulli numbers agree with Akiyama-Tanigawa") {
  const auto at = akiyama_tanigawa(60);
  for (std::size_t n = 0; n <= 60; ++n) {
    if (n == 1) continue;
    CHECK(bernoulli(n) == at[n]);
  }
  CHECK(bernoulli(1) == make_rational(-1, 2));
  CHECK(bernoulli(12) == make_rational(-691, 2730));
  CHECK(bernoulli(13) == 0);
}

TEST_CASE("von Staudt-Clausen") {
  for (std::size_t n = 2; n <= 120; n += 2) {
    Rational acc = bernoulli(n);
    for (long p = 2; p <= static_cast<long>(n) + 1; ++p) {
      if (is_prime(static_cast<std::uint64_t>(p)) && n % static_cast<std::size_t>(p - 1) == 0) acc += Rational(1, static_cast<unsigned long>(p));
    }
    CHECK(acc.get_den() == 1);
  }
}

TEST_CASE("tan and tanh coefficients") {
  const auto t = tan_series(41);
  for (long m = 1; m <= 41; m += 2) {
    CHECK(tan_coeff(m) == t[static_cast<std::size_t>(m)]);
    const long sign = ((m - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(tanh_coeff(m) == t[static_cast<std::size_t>(m)] * sign);
  }
  CHECK(tan_coeff(3) == make_rational(1, 3));
  CHECK(tanh_coeff(3) == make_rational(-1, 3));
  CHECK(tan_coeff(5) == make_rational(2, 15));
  CHECK_THROWS_AS(tan_coeff(2), rls::DomainError);
  CHECK_THROWS_AS(tanh_coeff(0), rls::DomainError);
  CHECK_THROWS_AS(tanh_coeff(-3), rls::DomainError);
}

TEST_CASE("divisor sums match brute force") {
  for (long p : {2L, 3L, 5L, 7L}) {
    Prime pp(p);
    for (long n = 1; n <= 120; ++n) {
      for (long s : {-3L, -1L, 0L, 1L, 3L, 5L}) REQUIRE(sigma_chi(n, s, pp) == brute_sigma(n, s, p));
      CHECK(a_coeff(n, pp) == (n % p == 0 ? 1 - p : 1));
    }
  }
  for (long n = 1; n <= 120; ++n) CHECK(sigma_classical(n, 3) == brute_sigma(n, 3, 0));
  CHECK(sigma_chi(6, 1, Prime(5)) == 2);
  CHECK(sigma_chi(10, 1, Prime(5)) == make_rational(3, 2));
  CHECK_THROWS_AS(sigma_chi(0, 1, Prime(2)), rls::DomainError);
}

TEST_CASE("divisor sums are multiplicative") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> dist(1, 400);
  Prime p(3);
  for (int trial = 0; trial < 200; ++trial) {
    long m = dist(rng), n = dist(rng);
    Integer g;
    mpz_gcd_ui(g.get_mpz_t(), Integer(m).get_mpz_t(), static_cast<unsigned long>(n));
    if (g != 1) continue;
    CHECK(sigma_chi(m * n, 3, p) == sigma_chi(m, 3, p) * sigma_chi(n, 3, p));
    CHECK(sigma_classical(m * n, 5) == sigma_classical(m, 5) * sigma_classical(n, 5));
  }
}

TEST_CASE("Dirichlet coefficient identity") {
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    for (long k = 0; k <= 3; ++k) {
      for (long n = 1; n <= 150; ++n) REQUIRE(convolution_coefficient_check(n, k, Prime(p)));
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  RatPoly f{make_rational(-1), 0, 1};  // z^2 - 1
  RatPoly g{make_rational(1), 1};       // z + 1
  auto [q, r] = divmod(f, g);
  CHECK(q == RatPoly{make_rational(-1), 1});
  CHECK(r.is_zero());
  CHECK(f.degree() == 2);
  CHECK(RatPoly().degree() == -1);
  CHECK(RatPoly{0, 0, make_rational(3)}.trailing_zeros() == 2);
  CHECK(f.is_even());
  CHECK(f.even_to_w() == RatPoly{make_rational(-1), 1});
  CHECK(f(make_rational(3)) == 8);
  CHECK(f.scale_variable(make_rational(2)) == RatPoly{make_rational(-1), 0, 4});
  CHECK(RatPoly{0, 0, make_rational(1), 1}.divide_by_z_power(2) == g);
  CHECK_THROWS_AS(g.divide_by_z_power(1), rls::DomainError);
  CHECK_THROWS_AS(divmod(f, RatPoly()), rls::DomainError);
  CHECK(RatPoly{make_rational(1), 2, 3}.reversed() == RatPoly{make_rational(3), 2, 1});
  CHECK(RatPoly{make_rational(5), 0, 1}.derivative() == RatPoly{0, make_rational(2)});
}

TEST_CASE("polynomial pretty printing") {
  RatPoly a{0, 0, make_rational(31, 30), 0, make_rational(169, 225), 0, make_rational(31, 30)};
  CHECK(a.to_string() == "31z^2/30 + 169z^4/225 + 31z^6/30");
  RatPoly b{0, 0, make_rational(-1, 192), 0, make_rational(-1, 192)};
  CHECK(b.to_string() == "-z^2/192 - z^4/192");
  CHECK(RatPoly{make_rational(-1, 720), 0, make_rational(1, 144)}.to_string() == "-1/720 + z^2/144");
  CHECK(RatPoly{0, make_rational(1)}.to_string() == "z");
  CHECK(RatPoly().to_string() == "0");
}

TEST_CASE("polynomial gcd") {
  RatPoly circle{make_rational(1), 0, 1};
  RatPoly a = circle * RatPoly{make_rational(-2), 1};
  RatPoly b = circle * RatPoly{make_rational(3), 1} * make_rational(7, 3);
  CHECK(poly_gcd(a, b) == circle);
  CHECK(poly_gcd(RatPoly{make_rational(1), 1}, RatPoly{make_rational(2), 1}) == RatPoly{make_rational(1)});
  CHECK(poly_gcd(a, RatPoly()) == a.monic());
  CHECK(poly_gcd(RatPoly(), b) == b.monic());
  CHECK_THROWS_AS(poly_gcd(RatPoly(), RatPoly()), rls::DomainError);
}

TEST_CASE("gcd of random products divides both and contains the common factor") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    RatPoly h = random_poly(rng, 4), f = random_poly(rng, 5), g = random_poly(rng, 5);
    RatPoly a = f * h, b = g * h;
    RatPoly d = poly_gcd(a, b);
    REQUIRE(divmod(a, d).second.is_zero());
    REQUIRE(divmod(b, d).second.is_zero());
    REQUIRE(divmod(d, h).second.is_zero());
    CHECK(d.leading() == 1);
    CHECK(poly_gcd(b, a) == d);
  }
}

TEST_CASE("gaussian evaluation") {
  RatPoly f{make_rational(1), 0, 1};
  GaussianRational i{0, 1};
  CHECK(eval_gaussian(f, i).is_zero());
  RatPoly g{make_rational(1), 0, make_rational(4)};
  CHECK(eval_gaussian(g, GaussianRational{0, make_rational(1, 2)}).is_zero());
  CHECK(eval_gaussian(RatPoly{0, make_rational(1)}, GaussianRational{make_rational(2), make_rational(3)}) ==
        GaussianRational{make_rational(2), make_rational(3)});
}
