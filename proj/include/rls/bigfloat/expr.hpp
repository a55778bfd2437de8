#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rls/bigfloat/bigcomplex.hpp"
#include "rls/exact/rational.hpp"

namespace rls::bigfloat {

/// c * pi^e with c rational.
struct PiMonomial {
  exact::Rational coeff;
  long pi_power = 0;

  /// "pi/25", "pi^2/4", "3pi/2", "1", "-1/2". With unicode, pi prints as π.
  std::string label(bool unicode = false) const;
  BigReal value() const;
};

struct ParsedValue {
  BigComplex value;
  /// Present when the expression is a rational multiple of a power of pi.
  std::optional<PiMonomial> exact;
};

/// Constant expressions over decimal and rational literals, pi and i with
/// + - * / ^ (integer exponents), parentheses and implicit products like
/// "3pi" or "2i". Evaluated at the current precision. Throws DomainError.
ParsedValue parse_expression(std::string_view text);

BigComplex parse_complex(std::string_view text);

/// As parse_complex, rejecting a nonzero imaginary part.
BigReal parse_real(std::string_view text);

}  // namespace rls::bigfloat
