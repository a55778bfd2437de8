#include "rls/rootfinder/roots.hpp"

#include <algorithm>
#include <numeric>

namespace rls::rootfinder {

using bigfloat::PrecisionScope;
using bigfloat::pow10;

namespace {

struct RealPoly {
  std::vector<BigReal> c;  // ascending, monic
};

RealPoly to_monic_real(const RatPoly& q) {
  RealPoly r;
  const exact::Rational lead = q.leading();
  for (const auto& c : q.coeffs()) r.c.emplace_back(exact::Rational(c / lead));
  return r;
}

/// p(z) and p'(z) by Horner.
void horner(const RealPoly& p, const BigComplex& z, BigComplex& value, BigComplex& deriv) {
  const std::size_t n = p.c.size() - 1;
  value = BigComplex(p.c[n]);
  deriv = BigComplex();
  for (std::size_t i = n; i-- > 0;) {
    deriv = deriv * z + value;
    value = value * z;
    value.re += p.c[i];
  }
}

BigReal cauchy_radius(const RealPoly& p) {
  BigReal m;
  for (std::size_t i = 0; i + 1 < p.c.size(); ++i) m = bigfloat::max(m, abs(p.c[i]));
  return m + 1;
}

/// Aberth-Ehrlich on a monic polynomial with nonzero constant term.
std::vector<BigComplex> aberth(const RatPoly& q, const Precision& prec, long max_iter, long& iterations) {
  const long n = q.degree();
  RealPoly p = to_monic_real(q);
  if (n == 1) return {BigComplex(-p.c[0])};

  const BigReal radius = cauchy_radius(p);
  const BigReal two_pi = 2 * bigfloat::pi();
  const BigReal offset = bigfloat::sqrt(BigReal(2L)) / 3;
  std::vector<BigComplex> z;
  for (long j = 0; j < n; ++j) {
    BigReal theta = two_pi * j / n + offset;
    z.emplace_back(radius * bigfloat::cos(theta), radius * bigfloat::sin(theta));
  }

  const BigReal stop = pow10(-prec.working_digits() + 5);
  BigComplex value, deriv;
  for (long it = 1; it <= max_iter; ++it) {
    BigReal max_step;
    for (long j = 0; j < n; ++j) {
      auto& zj = z[static_cast<std::size_t>(j)];
      horner(p, zj, value, deriv);
      if (value.re.is_zero() && value.im.is_zero()) continue;
      if (deriv.re.is_zero() && deriv.im.is_zero()) {
        zj += BigComplex(stop, stop);
        max_step = bigfloat::max(max_step, abs(BigComplex(stop, stop)));
        continue;
      }
      BigComplex ratio = value / deriv;
      BigComplex sum;
      for (long i = 0; i < n; ++i) {
        if (i != j) sum += BigComplex(1L) / (zj - z[static_cast<std::size_t>(i)]);
      }
      BigComplex step = ratio / (BigComplex(1L) - ratio * sum);
      zj -= step;
      max_step = bigfloat::max(max_step, abs(step));
    }
    iterations = it;
    if (max_step < stop) return z;
  }
  throw ConvergenceError("root iteration did not converge", std::move(z), iterations);
}

std::vector<BigComplex> nonzero_roots(const RatPoly& r, const Precision& prec, const RootFinderOptions& options,
                                      long max_iter, long& iterations) {
  if (options.use_even_reduction && r.is_even() && r.degree() >= 2) {
    std::vector<BigComplex> w = nonzero_roots(r.even_to_w(), prec, options, max_iter, iterations);
    std::vector<BigComplex> z;
    for (const auto& wi : w) {
      BigComplex s = sqrt(wi);
      z.push_back(s);
      z.push_back(-s);
    }
    return z;
  }
  return aberth(r, prec, max_iter, iterations);
}

}  // namespace

BigReal RootSet::max_residual() const {
  PrecisionScope scope(precision);
  BigReal m;
  for (const auto& r : residuals) m = bigfloat::max(m, r);
  return m;
}

BigComplex evaluate(const RatPoly& q, const BigComplex& z) {
  BigComplex acc;
  for (auto it = q.coeffs().rbegin(); it != q.coeffs().rend(); ++it) {
    acc *= z;
    acc.re += BigReal(*it);
  }
  return acc;
}

void sort_roots(std::vector<BigComplex>& roots, const BigReal& tol) {
  std::vector<std::pair<BigReal, BigReal>> keys;
  std::vector<std::size_t> order(roots.size());
  for (const auto& r : roots) keys.emplace_back(abs(r), arg(r));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].first != keys[b].first) return keys[a].first < keys[b].first;
    return keys[a].second < keys[b].second;
  });
  // Within runs of nearly equal modulus, order by argument.
  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin + 1;
    while (end < order.size() && keys[order[end]].first - keys[order[end - 1]].first < tol) ++end;
    std::sort(order.begin() + static_cast<long>(begin), order.begin() + static_cast<long>(end),
              [&](std::size_t a, std::size_t b) { return keys[a].second < keys[b].second; });
    begin = end;
  }
  std::vector<BigComplex> sorted;
  sorted.reserve(roots.size());
  for (auto i : order) sorted.push_back(roots[i]);
  roots = std::move(sorted);
}

std::vector<BigComplex> expand_from_roots(const std::vector<BigComplex>& roots) {
  std::vector<BigComplex> c{BigComplex(1L)};
  for (const auto& r : roots) {
    std::vector<BigComplex> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * r;
    }
    c = std::move(next);
  }
  return c;
}

RootSet find_roots(const RatPoly& q, const Precision& prec, const RootFinderOptions& options) {
  if (q.degree() < 1) throw DomainError("root finding needs a nonconstant polynomial");
  const long max_iter = options.max_iterations > 0 ? options.max_iterations : 200 * q.degree();

  RootSet out;
  out.precision = prec;
  const std::size_t origin = q.trailing_zeros();
  const RatPoly rest = q.divide_by_z_power(origin);

  std::vector<BigComplex> found;
  if (rest.degree() >= 1) {
    const Precision inner{prec.digits, prec.guard + 10};
    PrecisionScope scope(inner);
    found = nonzero_roots(rest, inner, options, max_iter, out.iterations);
  }

  PrecisionScope scope(prec);
  for (std::size_t i = 0; i < origin; ++i) out.roots.emplace_back(BigReal(0L), BigReal(0L));
  for (auto& r : found) out.roots.push_back(std::move(r));
  for (auto& r : out.roots) {
    mpfr_prec_round(r.re.get(), prec.bits(), MPFR_RNDN);
    mpfr_prec_round(r.im.get(), prec.bits(), MPFR_RNDN);
  }
  sort_roots(out.roots, pow10(-prec.digits / 2));
  for (const auto& r : out.roots) out.residuals.push_back(abs(evaluate(q, r)));
  return out;
}

}  // namespace rls::rootfinder
