#include "rls/rootfinder/conjectures.hpp"

#include "rls/polynomials/ramanujan.hpp"

namespace rls::rootfinder {

using bigfloat::PrecisionScope;
using bigfloat::pow10;
using exact::GaussianRational;
using exact::Rational;

std::string to_string(Conjecture2Verdict v) {
  switch (v) {
    case Conjecture2Verdict::NoCommonRoots: return "NoCommonRoots";
    case Conjecture2Verdict::OnlyPlusMinusIOverP: return "OnlyPlusMinusIOverP";
    case Conjecture2Verdict::Other: return "Other";
  }
  return "?";
}

std::string to_string(Escalation e) {
  switch (e) {
    case Escalation::None: return "none";
    case Escalation::Doubled: return "doubled";
    case Escalation::CandidateRefuted: return "candidate_refuted";
    case Escalation::CandidateConfirmed: return "candidate_confirmed";
  }
  return "?";
}

nlohmann::ordered_json complex_to_json(const BigComplex& z, int digits) {
  return nlohmann::ordered_json::array({z.re.to_scientific(digits), z.im.to_scientific(digits)});
}

nlohmann::ordered_json RootReport::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["k"] = k;
  j["digits"] = precision.digits;
  j["guard"] = precision.guard;
  if (error) {
    j["error"] = *error;
    j["conjecture1_pass"] = false;
  } else {
    j["origin_multiplicity"] = origin_multiplicity;
    auto roots_json = nlohmann::ordered_json::array();
    for (const auto& r : roots.roots) roots_json.push_back(complex_to_json(r, static_cast<int>(precision.digits)));
    j["roots"] = roots_json;
    j["max_residual"] = roots.max_residual().to_scientific(6);
    j["max_modulus_deviation"] = max_modulus_deviation.to_scientific(6);
    j["min_pairwise_separation"] = min_pairwise_separation.to_scientific(6);
    j["modulus_tol"] = modulus_tol.to_scientific(6);
    j["separation_tol"] = separation_tol.to_scientific(6);
    j["conjecture1_pass"] = conjecture1_pass;
    j["escalation"] = to_string(escalation);
  }
  if (conjecture2) {
    nlohmann::ordered_json c;
    c["verdict"] = to_string(conjecture2->verdict);
    c["expected"] = to_string(conjecture2->expected);
    c["gcd_poly"] = polynomials::poly_to_json(conjecture2->gcd);
    c["confirmed_exactly"] = conjecture2->confirmed_exactly;
    j["conjecture2"] = c;
  }
  return j;
}

namespace {

RootReport evaluate_cell(const Prime& p, long k, const Precision& prec, const BigReal& modulus_tol,
                         const BigReal& separation_tol, bool use_even_reduction) {
  const auto poly = polynomials::build_ramanujan_type(p, k);
  RootReport r;
  r.p = p.value();
  r.k = k;
  r.precision = prec;
  r.origin_multiplicity = poly.poly.trailing_zeros();
  r.roots = find_roots(poly.poly, prec, {use_even_reduction, 0});

  PrecisionScope scope(prec);
  r.modulus_tol = modulus_tol;
  r.separation_tol = separation_tol;
  const BigReal radius = BigReal(1L) / p.value();
  std::vector<const BigComplex*> nonzero;
  for (const auto& z : r.roots.roots) {
    if (!(z.re.is_zero() && z.im.is_zero())) nonzero.push_back(&z);
  }
  r.max_modulus_deviation = BigReal(0L);
  for (const auto* z : nonzero) r.max_modulus_deviation = bigfloat::max(r.max_modulus_deviation, abs(abs(*z) - radius));
  mpfr_set_inf(r.min_pairwise_separation.get(), 1);
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      BigReal d = abs(*nonzero[i] - *nonzero[j]);
      if (d < r.min_pairwise_separation) r.min_pairwise_separation = d;
    }
  }
  r.conjecture1_pass = r.origin_multiplicity == 2 && r.max_modulus_deviation < r.modulus_tol &&
                       r.min_pairwise_separation > r.separation_tol;
  return r;
}

bool near_violation(const RootReport& r) {
  PrecisionScope scope(r.precision);
  return r.max_modulus_deviation * 1000 > r.modulus_tol || r.min_pairwise_separation < r.separation_tol * 1000;
}

}  // namespace

RootReport conjecture1_check(const Prime& p, long k, const Precision& prec, const Tolerances& tol) {
  PrecisionScope scope(prec);
  const BigReal modulus_tol = tol.modulus_tol ? *tol.modulus_tol : pow10(-prec.digits / 2);
  const BigReal separation_tol = tol.separation_tol ? *tol.separation_tol : pow10(-10);

  std::optional<RootReport> base;
  try {
    base = evaluate_cell(p, k, prec, modulus_tol, separation_tol, true);
    if (base->conjecture1_pass && near_violation(*base)) {
      RootReport doubled = evaluate_cell(p, k, prec.scaled(2), modulus_tol, separation_tol, true);
      doubled.escalation = Escalation::Doubled;
      if (doubled.conjecture1_pass) return doubled;
      base = std::move(doubled);
    }
    if (base->conjecture1_pass) return *base;
  } catch (const ConvergenceError&) {
    // Re-examined below at higher precision.
  }

  RootReport check = evaluate_cell(p, k, prec.scaled(4), modulus_tol, separation_tol, false);
  check.escalation = check.conjecture1_pass ? Escalation::CandidateRefuted : Escalation::CandidateConfirmed;
  return check;
}

Conjecture2Result conjecture2_check(const Prime& p, long k) {
  const auto poly = polynomials::build_ramanujan_type(p, k);
  const long pv = p.value();
  const RatPoly target = RatPoly::monomial(Rational(exact::ipow(pv, static_cast<unsigned long>(2 * k))),
                                           static_cast<std::size_t>(2 * k)) -
                         RatPoly{Rational(1)};
  const RatPoly plus_minus{Rational(1, static_cast<unsigned long>(pv * pv)), Rational(0), Rational(1)};

  Conjecture2Result out;
  out.gcd = exact::poly_gcd(poly.poly, target);
  out.expected = k % 2 == 0 ? Conjecture2Verdict::OnlyPlusMinusIOverP : Conjecture2Verdict::NoCommonRoots;
  if (out.gcd.degree() == 0) {
    out.verdict = Conjecture2Verdict::NoCommonRoots;
  } else if (out.gcd == plus_minus) {
    out.verdict = Conjecture2Verdict::OnlyPlusMinusIOverP;
    bool ok = true;
    for (long sign : {1L, -1L}) {
      const GaussianRational z{Rational(0), Rational(sign, pv)};
      ok = ok && exact::eval_gaussian(poly.poly, z).is_zero() && exact::eval_gaussian(target, z).is_zero();
    }
    out.confirmed_exactly = ok;
  } else {
    out.verdict = Conjecture2Verdict::Other;
  }
  return out;
}

ClassicalRootsOfUnity classical_roots_of_unity_check(long k) {
  const RatPoly r = polynomials::build_classical(k).poly;
  const GaussianRational i{Rational(0), Rational(1)};
  const bool has_pm_i = exact::eval_gaussian(r, i).is_zero() && exact::eval_gaussian(r, -i).is_zero();
  // rho, rho^2 are the roots of z^2 + z + 1; -rho, -rho^2 those of z^2 - z + 1.
  const bool has_rho = divmod(r, RatPoly{Rational(1), Rational(1), Rational(1)}).second.is_zero() &&
                       divmod(r, RatPoly{Rational(1), Rational(-1), Rational(1)}).second.is_zero();
  return {k, has_pm_i, has_rho, has_pm_i == (k % 2 == 0) && has_rho == (k % 3 == 0)};
}

}  // namespace rls::rootfinder
