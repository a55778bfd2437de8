#include "rls/identities/identities.hpp"

#include <cmath>

#include "rls/bigfloat/series.hpp"
#include "rls/bigfloat/zeta.hpp"
#include "rls/errors.hpp"
#include "rls/exact/bernoulli.hpp"
#include "rls/identities/partial_fractions.hpp"
#include "rls/polynomials/ramanujan.hpp"

namespace rls::identities {

using bigfloat::PrecisionScope;
using bigfloat::pow10;
using exact::Rational;

namespace {

constexpr const char* kNegativeK = "negative-k regime: empty Bernoulli sum";

Rational bf(long n) { return exact::bernoulli_over_factorial(static_cast<std::size_t>(n)); }

Rational ipow_q(long base, long e) { return Rational(exact::ipow(base, static_cast<unsigned long>(e))); }

std::string show(const BigReal& x) { return x.to_scientific(20); }

std::string show(const BigComplex& z) { return z.to_scientific(20); }

VerificationReport start(const char* id, const VerifyOptions& opt) {
  VerificationReport r;
  r.identity_id = id;
  r.precision = opt.precision;
  PrecisionScope scope(opt.precision);
  r.threshold = opt.threshold ? *opt.threshold : pow10(-opt.precision.digits + 5);
  return r;
}

VerificationReport finish(VerificationReport r) {
  r.finalize();
  return r;
}

void note_n(VerificationReport& r, long terms) { r.n_used = r.n_used ? std::max(*r.n_used, terms) : terms; }

void require_positive(const BigReal& alpha) {
  if (alpha.sign() <= 0) throw DomainError("alpha must be positive");
}

void require_nonzero_k(long k) {
  if (k == 0) throw DomainError("k = 0 is not covered by this identity");
}

/// zeta(s) at any integer s != 1.
BigReal zeta_any(long s, const Precision& prec) {
  if (s == 1) throw DomainError("zeta has a pole at 1");
  if (s >= 2) return bigfloat::zeta_int(s, prec);
  PrecisionScope scope(prec);
  return BigReal(bigfloat::zeta_nonpositive(s));
}

/// L(s, chi_1) at any integer s != 1.
BigReal l_any(long s, const Prime& p, const Precision& prec) {
  if (s >= 2) return bigfloat::l_principal(s, p, prec);
  PrecisionScope scope(prec);
  const Rational euler = 1 - ipow_q(p.value(), -s);  // 1 - p^{-s}, s <= 0
  return BigReal(Rational(bigfloat::zeta_nonpositive(s) * euler));
}

/// Rejects points whose series decay too slowly unless N is pinned.
void check_upper_half_plane(const BigComplex& z, const VerifyOptions& opt) {
  if (z.im.sign() <= 0) throw DomainError("z must lie in the upper half-plane");
  if (!opt.n && z.im.to_double() < 1e-6) throw DomainError("Im z below 1e-6 needs an explicit truncation N");
}

BigComplex two_pi_i_power(long e) {
  // (2 pi i)^e with i^e expanded exactly.
  BigReal m = bigfloat::pow(2 * bigfloat::pi(), e);
  switch (((e % 4) + 4) % 4) {
    case 0: return {m, BigReal(0L)};
    case 1: return {BigReal(0L), m};
    case 2: return {-m, BigReal(0L)};
    default: return {BigReal(0L), -m};
  }
}

/// sum_{j=lo}^{hi} (-1)^{j-1} w_j alpha^{k+1-j} beta^j.
template <typename Weight>
BigReal alternating_bernoulli_sum(long lo, long hi, long k, const BigReal& alpha, const BigReal& beta, Weight w) {
  BigReal sum;
  for (long j = lo; j <= hi; ++j) {
    BigReal t = BigReal(w(j)) * bigfloat::pow(alpha, k + 1 - j) * bigfloat::pow(beta, j);
    if ((j - 1) % 2 == 0) sum += t;
    else sum -= t;
  }
  return sum;
}

}  // namespace

AlphaBetaPair AlphaBetaPair::from_alpha(const BigReal& alpha, Constraint c, const Precision& prec, long p) {
  require_positive(alpha);
  PrecisionScope scope(prec);
  const BigReal pi2 = bigfloat::pi() * bigfloat::pi();
  BigReal beta;
  switch (c) {
    case Constraint::PiSquared: beta = pi2 / alpha; break;
    case Constraint::PiSquaredOver4: beta = pi2 / (4 * alpha); break;
    case Constraint::PiSquaredOverP2: beta = pi2 / (p * p * alpha); break;
  }
  return {alpha, beta, c, p};
}

VerificationReport verify_euler(long k, const VerifyOptions& opt) {
  if (k < 1) throw DomainError("k must be positive");
  auto r = start("euler", opt);
  r.params["k"] = k;
  PrecisionScope scope(opt.precision);
  r.lhs = bigfloat::zeta_euler_maclaurin(2 * k, opt.precision);
  Rational c = bf(2 * k) / 2;
  if (k % 2 == 0) c = -c;
  r.rhs = BigReal(c) * bigfloat::pow(2 * bigfloat::pi(), 2 * k);
  return finish(std::move(r));
}

VerificationReport verify_ramanujan(long k, const BigReal& alpha, const VerifyOptions& opt) {
  require_nonzero_k(k);
  auto r = start("ramanujan", opt);
  PrecisionScope scope(opt.precision);
  const auto ab = AlphaBetaPair::from_alpha(alpha, Constraint::PiSquared, opt.precision);
  r.params["k"] = k;
  r.params["alpha"] = show(ab.alpha);
  r.params["beta"] = show(ab.beta);
  if (k < 0) r.notes.emplace_back("negative-k regime");

  const long s = 2 * k + 1;
  const BigReal half_zeta = zeta_any(s, opt.precision) / 2;
  auto side = [&](const BigReal& x) {
    auto series = bigfloat::lambert_classic(s, x, opt.precision, opt.n);
    note_n(r, series.terms);
    return half_zeta + series.value;
  };
  r.lhs = bigfloat::pow(4 * ab.alpha, -k) * side(ab.alpha) - bigfloat::pow(-4 * ab.beta, -k) * side(ab.beta);
  r.rhs = alternating_bernoulli_sum(0, k + 1, k, ab.alpha, ab.beta,
                                    [&](long j) -> Rational { return bf(2 * j) * bf(2 * k + 2 - 2 * j); });
  return finish(std::move(r));
}

VerificationReport verify_lerch(long k, const VerifyOptions& opt) {
  if (k < 0) throw DomainError("k must be non-negative");
  auto r = start("lerch", opt);
  r.params["k"] = k;
  PrecisionScope scope(opt.precision);
  const long s = 4 * k + 3;
  r.lhs = bigfloat::zeta_int(s, opt.precision);
  Rational sum = 0;
  for (long j = 0; j <= 2 * k + 2; ++j) {
    Rational t = bf(2 * j) * bf(4 * k + 4 - 2 * j);
    sum += j % 2 == 1 ? t : Rational(-t);
  }
  auto series = bigfloat::lambert_classic(s, bigfloat::pi(), opt.precision, opt.n);
  note_n(r, series.terms);
  r.rhs = bigfloat::pow(bigfloat::pi(), s) * BigReal(Rational(sum * ipow_q(2, 4 * k + 2))) - 2 * series.value;
  return finish(std::move(r));
}

namespace {

void check_pf_domain(const BigComplex& x, const BigComplex& y) {
  if ((x.re.is_zero() && x.im.is_zero()) || (y.re.is_zero() && y.im.is_zero())) {
    throw DomainError("x and y must be nonzero");
  }
  if (abs((y / x).re).to_double() < 1e-6) throw DomainError("y/x is (nearly) purely imaginary");
}

KernelSum pf_sum(Kernel f, const BigComplex& a, const BigComplex& c, bool odd_only, const VerifyOptions& opt) {
  return opt.n ? kernel_sum_truncated(f, a, c, odd_only, *opt.n, opt.precision)
               : kernel_sum(f, a, c, odd_only, opt.precision);
}

}  // namespace

VerificationReport verify_tan_partial_fraction(const BigComplex& x, const BigComplex& y, const VerifyOptions& opt) {
  check_pf_domain(x, y);
  auto r = start("tan_pf", opt);
  r.complex_valued = true;
  r.params["x"] = show(x);
  r.params["y"] = show(y);
  PrecisionScope scope(opt.precision);
  const BigReal pi = bigfloat::pi();
  const BigComplex half_pi(pi / 2);
  const BigComplex x2 = x * x, y2 = y * y;

  auto t1 = pf_sum(Kernel::Tanh, half_pi * x / y, y2, true, opt);
  auto t2 = pf_sum(Kernel::Tanh, half_pi * y / x, -x2, true, opt);
  r.lhs = BigComplex(pi / 4) * tan(half_pi * x) * tanh(half_pi * y);
  r.rhs = y2 * t1.value + x2 * t2.value;
  if (opt.n) {
    r.n_used = *opt.n;
    r.threshold += abs(y2) * t1.tail_bound + abs(x2) * t2.tail_bound;
    r.notes.emplace_back("threshold includes the truncation tail bound");
  }
  return finish(std::move(r));
}

VerificationReport verify_cot_coth_partial_fraction(const BigComplex& x, const BigComplex& y,
                                                    const VerifyOptions& opt) {
  check_pf_domain(x, y);
  auto r = start("cot_pf", opt);
  r.complex_valued = true;
  r.params["x"] = show(x);
  r.params["y"] = show(y);
  PrecisionScope scope(opt.precision);
  const BigReal pi = bigfloat::pi();
  const BigComplex cpi(pi);
  const BigComplex x2 = x * x, y2 = y * y;

  auto t1 = pf_sum(Kernel::Coth, cpi * x / y, y2, false, opt);
  auto t2 = pf_sum(Kernel::Coth, cpi * y / x, -x2, false, opt);
  r.lhs = BigComplex(pi * pi) * x * y * cot(cpi * x) * coth(cpi * y);
  const BigComplex outer = BigComplex(2 * pi) * x * y;
  r.rhs = BigComplex(1L) + BigComplex(pi * pi / 3) * (y2 - x2) - outer * (y2 * t1.value + x2 * t2.value);
  if (opt.n) {
    r.n_used = *opt.n;
    r.threshold += abs(outer) * (abs(y2) * t1.tail_bound + abs(x2) * t2.tail_bound);
    r.notes.emplace_back("threshold includes the truncation tail bound");
  }
  return finish(std::move(r));
}

VerificationReport verify_odd_ramanujan(long k, const BigReal& alpha, const VerifyOptions& opt) {
  require_nonzero_k(k);
  auto r = start("odd_ramanujan", opt);
  PrecisionScope scope(opt.precision);
  const auto ab = AlphaBetaPair::from_alpha(alpha, Constraint::PiSquaredOver4, opt.precision);
  r.params["k"] = k;
  r.params["alpha"] = show(ab.alpha);
  r.params["beta"] = show(ab.beta);
  if (k < 0) r.notes.emplace_back(kNegativeK);

  const long s = 2 * k + 1;
  const BigReal c = zeta_any(s, opt.precision) * (1 - bigfloat::pow(BigReal(2L), -s)) / 2;
  auto side = [&](const BigReal& x) {
    auto series = bigfloat::lambert_odd_plus(s, x, opt.precision, opt.n);
    note_n(r, series.terms);
    return c - series.value;
  };
  r.lhs = bigfloat::pow(4 * ab.alpha, -k) * side(ab.alpha) - bigfloat::pow(-4 * ab.beta, -k) * side(ab.beta);
  r.rhs = alternating_bernoulli_sum(1, k, k, ab.alpha, ab.beta, [&](long j) -> Rational {
    return Rational((ipow_q(4, j) - 1) * (ipow_q(4, k + 1 - j) - 1)) * bf(2 * j) * bf(2 * k + 2 - 2 * j);
  });
  return finish(std::move(r));
}

VerificationReport verify_tanh_sum(long k, const VerifyOptions& opt) {
  if (k < 0) throw DomainError("k must be non-negative");
  auto r = start("tanh_sum", opt);
  r.params["k"] = k;
  PrecisionScope scope(opt.precision);
  const long s = 4 * k + 3;
  // tanh(m pi/2) = 1 - 2/(e^{m pi} + 1) over odd m.
  auto series = bigfloat::lambert_odd_plus(s, bigfloat::pi() / 2, opt.precision, opt.n);
  note_n(r, series.terms);
  r.lhs = bigfloat::zeta_int(s, opt.precision) * (1 - bigfloat::pow(BigReal(2L), -s)) - 2 * series.value;
  Rational sum = 0;
  for (long j = 1; j <= 2 * k + 1; ++j) {
    Rational t = Rational((ipow_q(4, j) - 1) * (ipow_q(2, 4 * k + 4 - 2 * j) - 1)) * bf(2 * j) * bf(4 * k + 4 - 2 * j);
    sum += j % 2 == 1 ? t : Rational(-t);
  }
  r.rhs = bigfloat::pow(bigfloat::pi(), s) * BigReal(sum) / 2;
  return finish(std::move(r));
}

VerificationReport verify_main(const Prime& p, long k, const BigReal& alpha, const VerifyOptions& opt) {
  require_nonzero_k(k);
  auto r = start("main", opt);
  PrecisionScope scope(opt.precision);
  const auto ab = AlphaBetaPair::from_alpha(alpha, Constraint::PiSquaredOverP2, opt.precision, p.value());
  r.params["p"] = p.value();
  r.params["k"] = k;
  r.params["alpha"] = show(ab.alpha);
  r.params["beta"] = show(ab.beta);
  if (k < 0) r.notes.emplace_back(kNegativeK);

  const BigReal c = l_any(2 * k + 1, p, opt.precision) * (p.value() - 1) / 2;
  auto side = [&](const BigReal& x) {
    auto series = bigfloat::lambert_twisted({p, k, opt.n}, x, opt.precision);
    note_n(r, series.terms);
    return c - series.value;
  };
  r.lhs = bigfloat::pow(4 * ab.alpha, -k) * side(ab.alpha) - bigfloat::pow(-4 * ab.beta, -k) * side(ab.beta);
  const long pv = p.value();
  r.rhs = alternating_bernoulli_sum(1, k, k, ab.alpha, ab.beta, [&](long j) -> Rational {
    return Rational((ipow_q(pv, 2 * j) - 1) * (ipow_q(pv, 2 * k + 2 - 2 * j) - 1)) * bf(2 * j) * bf(2 * k + 2 - 2 * j);
  });
  return finish(std::move(r));
}

VerificationReport verify_lerch_analogue(const Prime& p, long k, const VerifyOptions& opt) {
  if (k < 0) throw DomainError("k must be non-negative");
  auto r = start("lerch_analogue", opt);
  r.params["p"] = p.value();
  r.params["k"] = k;
  PrecisionScope scope(opt.precision);
  const long pv = p.value();
  const long s = 4 * k + 3;
  r.lhs = bigfloat::l_principal(s, p, opt.precision);

  const BigReal x = bigfloat::pi() / pv;
  auto series = bigfloat::lambert_twisted({p, 2 * k + 1, opt.n}, x, opt.precision);
  note_n(r, series.terms);
  Rational sum = 0;
  for (long j = 1; j <= 2 * k + 1; ++j) {
    Rational t = Rational((ipow_q(pv, 2 * j) - 1) * (ipow_q(pv, 4 * k + 4 - 2 * j) - 1)) * bf(2 * j) *
                 bf(4 * k + 4 - 2 * j);
    sum += j % 2 == 1 ? t : Rational(-t);
  }
  r.rhs = 2 * series.value / (pv - 1) +
          BigReal(Rational(sum * ipow_q(2, 4 * k + 2) / Rational(pv - 1))) * bigfloat::pow(x, s);
  return finish(std::move(r));
}

VerificationReport verify_negative_k(const Prime& p, long k, const BigReal& alpha, const VerifyOptions& opt) {
  if (k < 0) throw DomainError("k must be non-negative");
  auto r = start("negative_k", opt);
  PrecisionScope scope(opt.precision);
  const auto ab = AlphaBetaPair::from_alpha(alpha, Constraint::PiSquaredOverP2, opt.precision, p.value());
  const long pv = p.value();
  r.params["p"] = pv;
  r.params["k"] = k;
  r.params["alpha"] = show(ab.alpha);
  r.params["beta"] = show(ab.beta);

  // Exponent 2k'+1 = -(2k+1) gives the positive divisor powers.
  auto side = [&](const BigReal& x) {
    auto series = bigfloat::lambert_twisted({p, -k - 1, opt.n}, x, opt.precision);
    note_n(r, series.terms);
    return series.value;
  };
  const BigReal a_pow = bigfloat::pow(ab.alpha, k + 1);
  const BigReal b_pow = bigfloat::pow(-ab.beta, k + 1);
  r.lhs = a_pow * side(ab.alpha) - b_pow * side(ab.beta);
  const Rational factor =
      Rational((pv - 1) * (ipow_q(pv, 2 * k + 1) - 1)) * exact::bernoulli(static_cast<std::size_t>(2 * k + 2)) /
      Rational(4 * k + 4);
  r.rhs = BigReal(factor) * (a_pow - b_pow);
  return finish(std::move(r));
}

VerificationReport verify_ramanujan_positive(long k, const BigReal& alpha, const VerifyOptions& opt) {
  if (k < 1) throw DomainError("k must be positive (k = 0 picks up the quasi-modular correction)");
  auto r = start("ramanujan_positive", opt);
  PrecisionScope scope(opt.precision);
  const auto ab = AlphaBetaPair::from_alpha(alpha, Constraint::PiSquared, opt.precision);
  r.params["k"] = k;
  r.params["alpha"] = show(ab.alpha);
  r.params["beta"] = show(ab.beta);

  auto side = [&](const BigReal& x) {
    auto series = bigfloat::lambert_classic(-(2 * k + 1), x, opt.precision, opt.n);
    note_n(r, series.terms);
    return series.value;
  };
  const BigReal a_pow = bigfloat::pow(ab.alpha, k + 1);
  const BigReal b_pow = bigfloat::pow(-ab.beta, k + 1);
  r.lhs = a_pow * side(ab.alpha) - b_pow * side(ab.beta);
  r.rhs = BigReal(exact::bernoulli(static_cast<std::size_t>(2 * k + 2)) / Rational(4 * k + 4)) * (a_pow - b_pow);
  return finish(std::move(r));
}

VerificationReport verify_k0(const Prime& p, const BigReal& alpha, const VerifyOptions& opt) {
  auto r = start("k0", opt);
  PrecisionScope scope(opt.precision);
  const auto ab = AlphaBetaPair::from_alpha(alpha, Constraint::PiSquaredOverP2, opt.precision, p.value());
  const long pv = p.value();
  r.params["p"] = pv;
  r.params["alpha"] = show(ab.alpha);
  r.params["beta"] = show(ab.beta);
  auto sa = bigfloat::lambert_twisted({p, 0, opt.n}, ab.alpha, opt.precision);
  auto sb = bigfloat::lambert_twisted({p, 0, opt.n}, ab.beta, opt.precision);
  note_n(r, sa.terms);
  note_n(r, sb.terms);
  r.lhs = sa.value - sb.value;
  r.rhs = BigReal(Rational((pv - 1) * (pv - 1), 2 * pv)) * bigfloat::log(bigfloat::pi() / (pv * ab.alpha));
  return finish(std::move(r));
}

VerificationReport verify_dedekind_analogue(const BigReal& alpha, const VerifyOptions& opt) {
  auto r = start("dedekind_analogue", opt);
  PrecisionScope scope(opt.precision);
  const auto ab = AlphaBetaPair::from_alpha(alpha, Constraint::PiSquaredOver4, opt.precision);
  r.params["alpha"] = show(ab.alpha);
  r.params["beta"] = show(ab.beta);
  auto ga = bigfloat::lambert_odd_plus(1, ab.alpha, opt.precision, opt.n);
  auto gb = bigfloat::lambert_odd_plus(1, ab.beta, opt.precision, opt.n);
  note_n(r, ga.terms);
  note_n(r, gb.terms);
  r.lhs = ga.value - gb.value;
  r.rhs = (bigfloat::log(bigfloat::pi()) - bigfloat::log(2 * ab.alpha)) / 4;
  return finish(std::move(r));
}

VerificationReport verify_dedekind(const BigReal& alpha, const VerifyOptions& opt) {
  auto r = start("dedekind", opt);
  PrecisionScope scope(opt.precision);
  const auto ab = AlphaBetaPair::from_alpha(alpha, Constraint::PiSquared, opt.precision);
  r.params["alpha"] = show(ab.alpha);
  r.params["beta"] = show(ab.beta);
  auto ha = bigfloat::lambert_classic(1, ab.alpha, opt.precision, opt.n);
  auto hb = bigfloat::lambert_classic(1, ab.beta, opt.precision, opt.n);
  note_n(r, ha.terms);
  note_n(r, hb.terms);
  r.lhs = ha.value - hb.value;
  r.rhs = (ab.beta - ab.alpha) / 12 + bigfloat::log(ab.alpha / ab.beta) / 4;
  return finish(std::move(r));
}

VerificationReport verify_grosswald(long k, const BigComplex& z, const VerifyOptions& opt) {
  if (k < 1) throw DomainError("k must be positive");
  check_upper_half_plane(z, opt);
  auto r = start("grosswald", opt);
  r.complex_valued = true;
  r.params["k"] = k;
  r.params["z"] = show(z);
  PrecisionScope scope(opt.precision);
  const BigComplex w = BigComplex(-1L) / z;
  check_upper_half_plane(w, opt);
  const long s = 2 * k + 1;
  auto fz = bigfloat::grosswald_F(s, z, opt.precision, opt.n);
  auto fw = bigfloat::grosswald_F(s, w, opt.precision, opt.n);
  note_n(r, fz.terms);
  note_n(r, fw.terms);
  const BigComplex z2k = pow(z, 2 * k);
  r.lhs = fz.value - z2k * fw.value;

  BigComplex poly;
  for (long j = 0; j <= k + 1; ++j) poly += BigComplex(BigReal(bf(2 * j) * bf(2 * k + 2 - 2 * j))) * pow(z, 2 * k + 2 - 2 * j);
  r.rhs = BigComplex(bigfloat::zeta_int(s, opt.precision) / 2) * (z2k - BigComplex(1L)) +
          two_pi_i_power(s) / (BigComplex(2L) * z) * poly;
  return finish(std::move(r));
}

namespace {

struct TwistedSides {
  BigComplex transformed;  // (pz)^{2k} F(-1/(p^2 z)) - F(z)
  BigComplex pz2k;
  long terms;
};

TwistedSides twisted_series_side(const Prime& p, long k, const BigComplex& z, const VerifyOptions& opt) {
  check_upper_half_plane(z, opt);
  const long pv = p.value();
  const BigComplex w = BigComplex(-1L) / (BigComplex(pv * pv) * z);
  check_upper_half_plane(w, opt);
  const BigComplex pz2k = pow(BigComplex(pv) * z, 2 * k);
  if (abs(pz2k - BigComplex(1L)) < pow10(-opt.precision.digits)) {
    throw DomainError("(pz)^{2k} = 1: z is on the root-of-unity locus");
  }
  auto fz = bigfloat::frak_F({p, k, opt.n}, z, opt.precision);
  auto fw = bigfloat::frak_F({p, k, opt.n}, w, opt.precision);
  return {pz2k * fw.value - fz.value, pz2k, std::max(fz.terms, fw.terms)};
}

/// (p-1)/2 L(2k+1) ((pz)^{2k} - 1) and the polynomial term, kept apart.
std::pair<BigComplex, BigComplex> twisted_closed_side(const Prime& p, long k, const BigComplex& z,
                                                      const Precision& prec) {
  const long pv = p.value();
  const auto poly = polynomials::build_ramanujan_type(p, k);
  BigComplex rz;
  for (auto it = poly.poly.coeffs().rbegin(); it != poly.poly.coeffs().rend(); ++it) {
    rz *= z;
    rz.re += BigReal(*it);
  }
  const BigComplex l_part = BigComplex(bigfloat::l_principal(2 * k + 1, p, prec) * (pv - 1) / 2);
  const BigComplex poly_part =
      two_pi_i_power(2 * k + 1) / (BigComplex(2L) * z * BigComplex(BigReal(ipow_q(pv, 2 * k + 2)))) * rz;
  return {l_part, poly_part};
}

}  // namespace

VerificationReport verify_grosswald_analogue(const Prime& p, long k, const BigComplex& z, const VerifyOptions& opt) {
  if (k < 1) throw DomainError("k must be positive");
  auto r = start("grosswald_analogue", opt);
  r.complex_valued = true;
  r.params["p"] = p.value();
  r.params["k"] = k;
  r.params["z"] = show(z);
  PrecisionScope scope(opt.precision);
  auto lhs = twisted_series_side(p, k, z, opt);
  note_n(r, lhs.terms);
  r.lhs = lhs.transformed;
  auto [l_part, poly_part] = twisted_closed_side(p, k, z, opt.precision);
  r.rhs = l_part * (lhs.pz2k - BigComplex(1L)) + poly_part;
  return finish(std::move(r));
}

BigComplex frak_G(const Prime& p, long k, const BigComplex& z, const Precision& prec) {
  if (k < 1) throw DomainError("k must be positive");
  PrecisionScope scope(prec);
  auto s = twisted_series_side(p, k, z, VerifyOptions{prec, std::nullopt, std::nullopt});
  return s.transformed / (s.pz2k - BigComplex(1L));
}

VerificationReport verify_frak_G(const Prime& p, long k, const BigComplex& z, const VerifyOptions& opt) {
  if (k < 1) throw DomainError("k must be positive");
  auto r = start("frak_G", opt);
  r.complex_valued = true;
  r.params["p"] = p.value();
  r.params["k"] = k;
  r.params["z"] = show(z);
  PrecisionScope scope(opt.precision);
  auto lhs = twisted_series_side(p, k, z, opt);
  note_n(r, lhs.terms);
  const BigComplex denom = lhs.pz2k - BigComplex(1L);
  r.lhs = lhs.transformed / denom;
  auto [l_part, poly_part] = twisted_closed_side(p, k, z, opt.precision);
  r.rhs = l_part + poly_part / denom;
  return finish(std::move(r));
}

}  // namespace rls::identities
