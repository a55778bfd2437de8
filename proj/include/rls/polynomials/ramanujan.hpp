#pragma once

#include "json.hpp"
#include "rls/exact/primes.hpp"
#include "rls/exact/ratpoly.hpp"

namespace rls::polynomials {

using exact::Prime;
using exact::Rational;
using exact::RatPoly;

/// The twisted family built from (p^{2j}-1)(p^{2k+2-2j}-1) B_{2j} B_{2k+2-2j}
/// products. `poly` is in z, `scaled` is poly(z/p).
struct RamanujanTypePoly {
  long p;
  long k;
  RatPoly poly;
  RatPoly scaled;

  /// scaled / z^2, the self-reciprocal part.
  RatPoly scaled_quotient() const { return scaled.divide_by_z_power(2); }
};

struct ClassicalRamanujanPoly {
  long k;
  RatPoly poly;
};

/// Coefficient of z^{2k+2-2j} in the scaled polynomial, 1 <= j <= k.
Rational ramanujan_type_coefficient(const Prime& p, long k, long j);

/// k >= 1; k <= 0 is the empty sum and throws EmptySumError.
RamanujanTypePoly build_ramanujan_type(const Prime& p, long k);

/// sum_{j=0}^{k+1} B_{2j}/(2j)! B_{2k+2-2j}/(2k+2-2j)! z^{2k+2-2j}, k >= 1.
ClassicalRamanujanPoly build_classical(long k);

/// z^{deg q} q(1/z) == q(z) exactly; q must be nonzero.
bool self_reciprocal_check(const RatPoly& q);

/// 0 if k is odd, 1 if k is even.
int delta_k(long k);
/// 0, 1, 2, 3 as gcd(k, 6) is 1, 2, 3, 6.
int delta_k_classical(long k);

/// Ascending array of "num/den" strings.
nlohmann::ordered_json poly_to_json(const RatPoly& q);
RatPoly poly_from_json(const nlohmann::ordered_json& j);

}  // namespace rls::polynomials
