#pragma once

#include <optional>

#include "rls/exact/primes.hpp"
#include "rls/identities/report.hpp"

namespace rls::identities {

using exact::Prime;

enum class Constraint {
  PiSquared,        // alpha beta = pi^2
  PiSquaredOver4,   // alpha beta = pi^2 / 4
  PiSquaredOverP2,  // alpha beta = pi^2 / p^2
};

/// alpha > 0 and the beta it determines.
struct AlphaBetaPair {
  BigReal alpha;
  BigReal beta;
  Constraint constraint;
  long p = 1;

  static AlphaBetaPair from_alpha(const BigReal& alpha, Constraint c, const Precision& prec, long p = 1);
};

/// Shared knobs. threshold defaults to 10^{-digits+5}; n pins series
/// truncation where the identity has a series.
struct VerifyOptions {
  Precision precision;
  std::optional<long> n;
  std::optional<BigReal> threshold;
};

// zeta(2k) by summation against the Bernoulli closed form, k >= 1.
VerificationReport verify_euler(long k, const VerifyOptions& opt);
// Odd zeta values with alpha beta = pi^2, k != 0.
VerificationReport verify_ramanujan(long k, const BigReal& alpha, const VerifyOptions& opt);
// zeta(4k+3) at alpha = beta = pi, k >= 0.
VerificationReport verify_lerch(long k, const VerifyOptions& opt);
// (pi/4) tan(pi x/2) tanh(pi y/2) as two tanh series.
VerificationReport verify_tan_partial_fraction(const BigComplex& x, const BigComplex& y, const VerifyOptions& opt);
// pi^2 x y cot(pi x) coth(pi y) as two coth series.
VerificationReport verify_cot_coth_partial_fraction(const BigComplex& x, const BigComplex& y,
                                                    const VerifyOptions& opt);
// Odd-index series with alpha beta = pi^2/4, k != 0.
VerificationReport verify_odd_ramanujan(long k, const BigReal& alpha, const VerifyOptions& opt);
// sum tanh((2n+1) pi/2) / (2n+1)^{4k+3}, k >= 0.
VerificationReport verify_tanh_sum(long k, const VerifyOptions& opt);
// Twisted identity for L(2k+1, chi_1), alpha beta = pi^2/p^2, k != 0.
VerificationReport verify_main(const Prime& p, long k, const BigReal& alpha, const VerifyOptions& opt);
// L(4k+3, chi_1) at alpha = beta = pi/p, k >= 0.
VerificationReport verify_lerch_analogue(const Prime& p, long k, const VerifyOptions& opt);
// Positive divisor powers sigma_{2k+1}, alpha beta = pi^2/p^2, k >= 0.
VerificationReport verify_negative_k(const Prime& p, long k, const BigReal& alpha, const VerifyOptions& opt);
// sum n^{2k+1}/(e^{2n alpha} - 1), alpha beta = pi^2, k >= 1.
VerificationReport verify_ramanujan_positive(long k, const BigReal& alpha, const VerifyOptions& opt);
// Twisted series at k = 0 against a logarithm, alpha beta = pi^2/p^2.
VerificationReport verify_k0(const Prime& p, const BigReal& alpha, const VerifyOptions& opt);
// Odd-index eta-type identity, alpha beta = pi^2/4.
VerificationReport verify_dedekind_analogue(const BigReal& alpha, const VerifyOptions& opt);
// log eta transformation, alpha beta = pi^2.
VerificationReport verify_dedekind(const BigReal& alpha, const VerifyOptions& opt);
// Classical transformation of F_{2k+1} on the upper half-plane, k >= 1.
VerificationReport verify_grosswald(long k, const BigComplex& z, const VerifyOptions& opt);
// Twisted transformation of the frak F series, k >= 1, (pz)^{2k} != 1.
VerificationReport verify_grosswald_analogue(const Prime& p, long k, const BigComplex& z, const VerifyOptions& opt);
// The quotient frak G from the series against its closed form.
VerificationReport verify_frak_G(const Prime& p, long k, const BigComplex& z, const VerifyOptions& opt);

/// ((pz)^{2k} F(-1/(p^2 z)) - F(z)) / ((pz)^{2k} - 1) from the series.
BigComplex frak_G(const Prime& p, long k, const BigComplex& z, const Precision& prec);

}  // namespace rls::identities
