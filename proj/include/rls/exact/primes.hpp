#pragma once

#include <cstdint>

namespace rls::exact {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// A validated prime modulus. Construction from a composite throws
/// DomainError, so every operation taking a Prime has already been checked.
class Prime {
 public:
  explicit Prime(std::int64_t value);

  long value() const { return static_cast<long>(value_); }
  operator long() const { return value(); }

 private:
  std::int64_t value_;
};

}  // namespace rls::exact
