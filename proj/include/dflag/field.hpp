#pragma once

#include <cstdint>
#include <vector>

namespace dflag {

/// Residue modulo the field's prime. Moduli are limited to 16 bits.
using Coefficient = std::uint16_t;

bool is_prime(std::uint32_t q);

/// Arithmetic in F_q with a precomputed inverse table.
class PrimeField {
 public:
  /// Throws ConfigError unless q is a prime below 2^16.
  explicit PrimeField(std::uint32_t q = 2);

  std::uint32_t modulus() const noexcept { return q_; }

  Coefficient reduce(std::int64_t x) const noexcept {
    const auto r = x % static_cast<std::int64_t>(q_);
    return static_cast<Coefficient>(r < 0 ? r + q_ : r);
  }
  Coefficient add(Coefficient a, Coefficient b) const noexcept {
    const std::uint32_t s = std::uint32_t{a} + b;
    return static_cast<Coefficient>(s >= q_ ? s - q_ : s);
  }
  Coefficient neg(Coefficient a) const noexcept { return a == 0 ? 0 : static_cast<Coefficient>(q_ - a); }
  Coefficient sub(Coefficient a, Coefficient b) const noexcept { return add(a, neg(b)); }
  Coefficient mul(Coefficient a, Coefficient b) const noexcept {
    return static_cast<Coefficient>((std::uint32_t{a} * b) % q_);
  }

  /// Throws std::domain_error for a == 0.
  Coefficient inverse(Coefficient a) const;

  /// (-1)^i as a residue.
  Coefficient sign(std::size_t i) const noexcept { return i % 2 == 0 ? Coefficient{1} : neg(1); }

 private:
  std::uint32_t q_;
  std::vector<Coefficient> inverses_;
};

}  // namespace dflag
