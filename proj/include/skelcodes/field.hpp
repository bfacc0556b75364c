#pragma once

#include <cstdint>
#include <string>

#include "skelcodes/errors.hpp"

namespace skelcodes {

inline constexpr unsigned kMaxFieldSize = 251;

constexpr bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in GF(q) for a prime q <= 251; elements are residues in one byte.
class PrimeField {
 public:
  explicit PrimeField(unsigned q) : q_(q) {
    if (q < 2 || q > kMaxFieldSize || !is_prime(q))
      throw DomainError("field size must be a prime in [2, 251], got " + std::to_string(q));
  }

  unsigned size() const { return q_; }

  std::uint8_t add(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a + b) % q_); }
  std::uint8_t sub(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a + q_ - b) % q_); }
  std::uint8_t mul(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a * b) % q_); }
  std::uint8_t neg(unsigned a) const { return static_cast<std::uint8_t>((q_ - a) % q_); }

  std::uint8_t pow(unsigned a, unsigned e) const {
    unsigned result = 1 % q_;
    unsigned base = a % q_;
    while (e > 0) {
      if (e & 1u) result = (result * base) % q_;
      base = (base * base) % q_;
      e >>= 1;
    }
    return static_cast<std::uint8_t>(result);
  }

  // Fermat: a^(q-2) for a != 0.
  std::uint8_t inv(unsigned a) const {
    if (a % q_ == 0) throw DomainError("inverse of zero");
    return pow(a, q_ - 2);
  }

 private:
  unsigned q_;
};

}  // namespace skelcodes
