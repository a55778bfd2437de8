#pragma once

#include <optional>

#include "rls/bigfloat/bigcomplex.hpp"

namespace rls::identities {

using bigfloat::BigComplex;
using bigfloat::BigReal;
using bigfloat::Precision;

enum class Kernel { Tanh, Coth };

struct KernelSum {
  BigComplex value;
  /// Largest index m used.
  long last_index = 0;
  /// Bound on the omitted tail; zero-ish for the accelerated form.
  BigReal tail_bound;
};

/// sum over m >= 1 (odd m only when odd_only) of f(m a) / (m (m^2 + c)), f the
/// kernel, Re a != 0. Summed to full precision: the kernel splits into
/// sign(Re a) plus an exponentially small part, and the algebraic remainder
/// is expanded in powers of c against zeta tails.
KernelSum kernel_sum(Kernel f, const BigComplex& a, const BigComplex& c, bool odd_only, const Precision& prec);

/// The same sum cut after the first n admissible indices, with a bound on
/// what was dropped (infinite when n is too small to bound).
KernelSum kernel_sum_truncated(Kernel f, const BigComplex& a, const BigComplex& c, bool odd_only, long n,
                               const Precision& prec);

}  // namespace rls::identities
