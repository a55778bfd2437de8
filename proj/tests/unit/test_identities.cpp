#include "doctest.h"
#include "rls/bigfloat/zeta.hpp"
#include "rls/errors.hpp"
#include "rls/identities/identities.hpp"
#include "rls/identities/partial_fractions.hpp"

using namespace rls::identities;
using rls::bigfloat::make_precision;
using rls::bigfloat::pi;
using rls::bigfloat::pow10;
using rls::bigfloat::PrecisionScope;
using rls::exact::Rational;

namespace {

VerifyOptions opts(int digits, std::optional<long> n = std::nullopt) { return {make_precision(digits), n, {}}; }

BigReal q(long a, long b) { return BigReal(Rational(a, b)); }

BigComplex cq(long a, long b, long c, long d) { return {q(a, b), q(c, d)}; }

void check_pass(const VerificationReport& r) {
  INFO(r.identity_id << " " << r.params.dump() << " residual " << r.abs_residual.to_scientific(5));
  CHECK(r.pass);
  CHECK(r.abs_residual < r.threshold);
}

void check_value(const BigComplex& v, const char* golden, int digits) {
  const BigReal g = BigReal::parse(golden);
  INFO(v.re.to_scientific(25) << " vs " << golden);
  CHECK(abs(v.re - g) < pow10(-digits));
}

}  // namespace

TEST_CASE("euler") {
  auto r = verify_euler(1, opts(50));
  check_pass(r);
  CHECK(r.abs_residual < pow10(-45));
  check_pass(verify_euler(6, opts(50)));
  check_pass(verify_euler(10, opts(50)));
  CHECK_THROWS_AS(verify_euler(0, opts(50)), rls::DomainError);
}

TEST_CASE("ramanujan formula") {
  PrecisionScope scope(make_precision(50));
  check_pass(verify_ramanujan(1, pi(), opts(50)));
  check_pass(verify_ramanujan(2, BigReal(1L), opts(50)));
  auto neg = verify_ramanujan(-1, BigReal(2L), opts(50));
  check_pass(neg);
  CHECK(!neg.notes.empty());
  check_pass(verify_ramanujan(3, q(7, 3), opts(80)));
  CHECK_THROWS_AS(verify_ramanujan(0, pi(), opts(50)), rls::DomainError);
  CHECK_THROWS_AS(verify_ramanujan(1, BigReal(-1L), opts(50)), rls::DomainError);
}

TEST_CASE("lerch") {
  for (long k : {0, 1, 2}) check_pass(verify_lerch(k, opts(50)));
  auto r = verify_lerch(0, opts(50));
  check_value(r.lhs, "1.2020569031595942853997381615114499907649862923405", 45);
}

TEST_CASE("partial fractions") {
  PrecisionScope scope(make_precision(50));
  check_pass(verify_tan_partial_fraction(cq(1, 2, 0, 1), cq(1, 2, 0, 1), opts(50)));
  check_pass(verify_tan_partial_fraction(cq(1, 3, 0, 1), cq(2, 5, 0, 1), opts(50)));
  check_pass(verify_tan_partial_fraction(cq(3, 7, 1, 5), cq(3, 7, 1, 5), opts(50)));
  check_pass(verify_tan_partial_fraction(cq(2, 3, 1, 4), cq(1, 5, -1, 3), opts(50)));
  check_pass(verify_cot_coth_partial_fraction(cq(1, 2, 0, 1), cq(1, 2, 0, 1), opts(50)));
  check_pass(verify_cot_coth_partial_fraction(cq(1, 3, 0, 1), cq(2, 5, 0, 1), opts(50)));
  check_pass(verify_cot_coth_partial_fraction(cq(1, 4, 1, 3), cq(5, 2, -1, 2), opts(50)));

  auto pinned = verify_tan_partial_fraction(cq(1, 2, 0, 1), cq(1, 2, 0, 1), opts(50, 2000));
  check_pass(pinned);
  CHECK(pinned.n_used == 2000);
  CHECK(pinned.threshold > pow10(-45));
  CHECK(pinned.threshold < pow10(-5));
  check_pass(verify_cot_coth_partial_fraction(cq(1, 3, 0, 1), cq(2, 5, 0, 1), opts(50, 2000)));

  // At x = y the two series share a kernel argument.
  auto sym = verify_tan_partial_fraction(cq(2, 7, 0, 1), cq(2, 7, 0, 1), opts(50));
  check_pass(sym);
  CHECK(abs(sym.lhs.im) < pow10(-50));

  CHECK_THROWS_AS(verify_tan_partial_fraction(cq(1, 1, 0, 1), cq(0, 1, 1, 1), opts(50)), rls::DomainError);
  CHECK_THROWS_AS(verify_tan_partial_fraction(cq(1, 1, 0, 1), cq(0, 1, 0, 1), opts(50)), rls::DomainError);
  CHECK_THROWS_AS(verify_tan_partial_fraction(cq(1, 1, 0, 1), cq(1, 2, 0, 1), opts(50)), rls::DomainError);
  CHECK_THROWS_AS(verify_cot_coth_partial_fraction(cq(1, 1, 0, 1), cq(1, 2, 0, 1), opts(50)), rls::DomainError);
}

TEST_CASE("accelerated kernel sum against a long direct sum") {
  Precision prec = make_precision(30);
  PrecisionScope scope(prec);
  const BigComplex a(q(3, 5)), c(q(1, 4));
  auto fast = kernel_sum(Kernel::Tanh, a, c, true, prec);
  BigComplex direct;
  for (long m = 1; m <= 200001; m += 2) {
    BigComplex mm(m);
    direct += tanh(a * mm) / (mm * (mm * mm + c));
  }
  // Remaining tail is below sum_{m > 2e5} m^{-3}.
  CHECK(abs(fast.value - direct) < pow10(-10));
}

TEST_CASE("odd-index formula and the tanh sum") {
  PrecisionScope scope(make_precision(50));
  auto row1 = verify_odd_ramanujan(1, pi() / 2, opts(50, 1000));
  check_pass(row1);
  check_value(row1.lhs, "0.1542125687670212284", 18);
  auto row5 = verify_odd_ramanujan(3, pi(), opts(50, 1000));
  check_pass(row5);
  check_value(row5.lhs, "0.01083380189994059225", 19);
  check_pass(verify_odd_ramanujan(2, pi() / 2, opts(50)));
  auto neg = verify_odd_ramanujan(-2, BigReal(1L), opts(50));
  check_pass(neg);
  CHECK(abs(neg.rhs.re) < pow10(-60));
  CHECK(neg.notes.size() == 1);

  auto t0 = verify_tanh_sum(0, opts(50));
  check_pass(t0);
  check_value(t0.rhs, (pi() * pi() * pi() / 32).to_scientific(48).c_str(), 45);
  check_pass(verify_tanh_sum(1, opts(50)));
  check_pass(verify_tanh_sum(3, opts(60)));

  // Partial sums of the positive tanh terms increase toward the closed form.
  BigReal partial(0L);
  for (long n = 0; n < 200; ++n) {
    const long m = 2 * n + 1;
    const BigReal term = rls::bigfloat::tanh(pi() * m / 2) / rls::bigfloat::pow(BigReal(m), 3);
    CHECK(term > 0);
    partial += term;
    CHECK(partial < t0.rhs.re);
  }
  CHECK(t0.rhs.re - partial < pow10(-4));
}

TEST_CASE("main identity reproduces the table values") {
  PrecisionScope scope(make_precision(50));
  auto p3 = verify_main(Prime{3}, 2, pi(), opts(50, 1000));
  check_pass(p3);
  check_value(p3.lhs, "-0.2268406158595322921", 18);
  auto p5 = verify_main(Prime{5}, 1, pi() / 5, opts(50, 1000));
  check_pass(p5);
  check_value(p5.lhs, "1.579136704174297379", 17);
  auto last = verify_main(Prime{5}, 3, pi(), opts(50, 1000));
  check_pass(last);
  check_value(last.lhs, "3.915620336334286060", 17);
  check_value(last.rhs, "3.915620336334286060", 17);
  auto wide = verify_main(Prime{5}, 3, pi(), opts(50, 100000));
  CHECK(wide.abs_residual < pow10(-25));

  // The first table row is the p = 2 case of the odd-index formula.
  auto m2 = verify_main(Prime{2}, 1, pi() / 2, opts(50));
  auto t2 = verify_odd_ramanujan(1, pi() / 2, opts(50));
  CHECK(abs(m2.lhs - t2.lhs) < pow10(-45));

  CHECK_THROWS_AS(verify_main(Prime{3}, 0, pi(), opts(50)), rls::DomainError);
}

TEST_CASE("main identity swap symmetry and negative k") {
  PrecisionScope scope(make_precision(50));
  for (long p : {2, 3, 7}) {
    for (long k : {1, 2, -1, -2}) {
      const BigReal alpha = q(3, 4);
      auto a = verify_main(Prime{p}, k, alpha, opts(50));
      auto b = verify_main(Prime{p}, k, pi() * pi() / (p * p * alpha), opts(50));
      check_pass(a);
      check_pass(b);
      // Swapping alpha and beta multiplies both sides by (-1)^{k+1}.
      const long sign = (k + 1) % 2 == 0 ? 1 : -1;
      CHECK(abs(a.lhs.re - sign * b.lhs.re) < pow10(-44));
      CHECK(abs(a.rhs.re - sign * b.rhs.re) < pow10(-44));
    }
  }
}

TEST_CASE("lerch analogue and positive divisor powers") {
  PrecisionScope scope(make_precision(50));
  auto l2 = verify_lerch_analogue(Prime{2}, 0, opts(50));
  check_pass(l2);
  check_value(l2.lhs, (rls::bigfloat::zeta_int(3, make_precision(50)) * 7 / 8).to_scientific(48).c_str(), 45);
  check_pass(verify_lerch_analogue(Prime{3}, 1, opts(50)));
  check_pass(verify_lerch_analogue(Prime{5}, 1, opts(50)));

  check_pass(verify_negative_k(Prime{2}, 0, pi() / 2, opts(50)));
  check_pass(verify_negative_k(Prime{3}, 1, BigReal(1L), opts(50)));
  check_pass(verify_negative_k(Prime{2}, 2, pi(), opts(50)));
  CHECK_THROWS_AS(verify_negative_k(Prime{2}, -1, pi(), opts(50)), rls::DomainError);
}

TEST_CASE("positive powers, k = 0 and the eta-type identities") {
  PrecisionScope scope(make_precision(50));
  check_pass(verify_ramanujan_positive(1, pi(), opts(50)));
  check_pass(verify_ramanujan_positive(2, BigReal(1L), opts(50)));
  check_pass(verify_ramanujan_positive(3, q(5, 2), opts(50)));
  CHECK_THROWS_AS(verify_ramanujan_positive(0, pi(), opts(50)), rls::DomainError);

  for (long p : {2, 3, 5, 7}) {
    auto r = verify_k0(Prime{p}, pi() / p, opts(50));
    check_pass(r);
    CHECK(r.rhs.re.is_zero());
  }
  auto k0 = verify_k0(Prime{2}, pi(), opts(50));
  check_pass(k0);
  CHECK(abs(k0.rhs.re + rls::bigfloat::log(BigReal(2L)) / 4) < pow10(-48));
  check_pass(verify_k0(Prime{5}, BigReal(1L), opts(50)));

  check_pass(verify_dedekind_analogue(pi() / 2, opts(50)));
  auto da = verify_dedekind_analogue(pi(), opts(50));
  check_pass(da);
  CHECK(abs(da.rhs.re + rls::bigfloat::log(BigReal(2L)) / 4) < pow10(-48));
  check_pass(verify_dedekind_analogue(q(1, 2), opts(50)));

  check_pass(verify_dedekind(pi(), opts(50)));
  check_pass(verify_dedekind(2 * pi(), opts(50)));
  check_pass(verify_dedekind(BigReal(1L), opts(50)));
}

TEST_CASE("grosswald transformations") {
  PrecisionScope scope(make_precision(50));
  check_pass(verify_grosswald(2, BigComplex::i(), opts(50)));
  check_pass(verify_grosswald(3, cq(1, 2, 3, 2), opts(50)));
  check_pass(verify_grosswald(1, cq(-2, 7, 1, 3), opts(50)));

  // z = i beta / pi turns the transformation into the real formula.
  {
    const BigReal alpha = q(3, 2);
    const BigReal beta = pi() * pi() / alpha;
    auto g = verify_grosswald(2, BigComplex(BigReal(0L), beta / pi()), opts(50));
    auto r = verify_ramanujan(2, alpha, opts(50));
    check_pass(g);
    check_pass(r);
  }

  check_pass(verify_grosswald_analogue(Prime{2}, 2, BigComplex::i(), opts(50)));
  check_pass(verify_grosswald_analogue(Prime{3}, 1, cq(1, 4, 5, 4), opts(50)));
  check_pass(verify_grosswald_analogue(Prime{2}, 1, cq(0, 1, 1, 2), opts(50)));
  check_pass(verify_frak_G(Prime{2}, 1, cq(0, 1, 2, 1), opts(50)));
  check_pass(verify_frak_G(Prime{5}, 2, cq(0, 1, 1, 2), opts(50)));
  check_pass(verify_frak_G(Prime{7}, 3, cq(1, 9, 1, 5), opts(50)));

  auto g = frak_G(Prime{2}, 1, cq(0, 1, 2, 1), make_precision(50));
  auto rep = verify_frak_G(Prime{2}, 1, cq(0, 1, 2, 1), opts(50));
  CHECK(abs(g - rep.lhs) < pow10(-48));

  CHECK_THROWS_AS(verify_grosswald(1, cq(1, 1, -1, 1), opts(50)), rls::DomainError);
  CHECK_THROWS_AS(verify_grosswald(1, cq(1, 1, 1, 10000000), opts(50)), rls::DomainError);
  // (2 * i/2)^2 = -1 is fine; (2 * 1/2)^2 = 1 sits on the excluded locus but is real.
  CHECK_THROWS_AS(frak_G(Prime{2}, 1, cq(1, 2, 0, 1), make_precision(50)), rls::DomainError);
}

TEST_CASE("residual shrinks with precision") {
  PrecisionScope scope(make_precision(100));
  auto lo = verify_main(Prime{3}, 2, q(4, 5), opts(50));
  auto hi = verify_main(Prime{3}, 2, q(4, 5), opts(100));
  check_pass(lo);
  check_pass(hi);
  CHECK(hi.abs_residual < pow10(-95));
  auto g = verify_grosswald_analogue(Prime{5}, 2, cq(1, 3, 1, 1), opts(100));
  check_pass(g);
  CHECK(g.abs_residual < pow10(-95));
}

TEST_CASE("report serialization") {
  PrecisionScope scope(make_precision(30));
  auto r = verify_k0(Prime{3}, BigReal(1L), opts(30));
  auto j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"identity_id", "params", "lhs", "rhs", "abs_residual", "rel_residual",
                                         "threshold", "pass", "N_used", "digits"});
  CHECK(j["identity_id"] == "k0");
  CHECK(j["digits"] == 30);
  CHECK(j["pass"] == true);
  CHECK(j["lhs"].is_string());
  auto c = verify_grosswald(1, BigComplex::i(), opts(30)).to_json();
  CHECK(c["lhs"].is_array());
  CHECK(VerificationReport::csv_header().find("identity_id") == 0);
  CHECK(r.to_markdown_row().front() == '|');
}
