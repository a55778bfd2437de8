#pragma once

#include <vector>

#include "rls/bigfloat/bigcomplex.hpp"
#include "rls/errors.hpp"
#include "rls/exact/ratpoly.hpp"

namespace rls::rootfinder {

using bigfloat::BigComplex;
using bigfloat::BigReal;
using bigfloat::Precision;
using exact::RatPoly;

struct RootFinderOptions {
  /// Solve q(z) = r(z^2) for r when q is even, then take both square roots.
  bool use_even_reduction = true;
  /// Defaults to 200 * degree.
  long max_iterations = 0;
};

/// All complex roots with multiplicity, sorted by (modulus, argument).
struct RootSet {
  std::vector<BigComplex> roots;
  /// |q(root)| at working precision, aligned with roots.
  std::vector<BigReal> residuals;
  Precision precision;
  long iterations = 0;

  BigReal max_residual() const;
};

/// Aberth-Ehrlich iteration failed to meet its stopping rule.
class ConvergenceError : public NumericFailure {
 public:
  ConvergenceError(const std::string& what, std::vector<BigComplex> partial, long iterations)
      : NumericFailure(what), partial_roots(std::move(partial)), iterations(iterations) {}
  std::vector<BigComplex> partial_roots;
  long iterations;
};

/// Roots of a nonconstant polynomial. Exact zeros at the origin are split
/// off first; the remaining roots are refined at working + 10 digits.
RootSet find_roots(const RatPoly& q, const Precision& prec, const RootFinderOptions& options = {});

/// Orders roots by modulus, treating moduli within tol as equal, then by
/// argument in (-pi, pi].
void sort_roots(std::vector<BigComplex>& roots, const BigReal& tol);

/// Expands prod (z - r) at the current precision, ascending coefficients.
std::vector<BigComplex> expand_from_roots(const std::vector<BigComplex>& roots);

/// Horner evaluation of a rational polynomial at a complex point.
BigComplex evaluate(const RatPoly& q, const BigComplex& z);

}  // namespace rls::rootfinder
