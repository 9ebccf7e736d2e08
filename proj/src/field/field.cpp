#include "dflag/field.hpp"

#include <stdexcept>
#include <string>

#include "dflag/errors.hpp"

namespace dflag {

bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q > 0xFFFF || !is_prime(q)) throw ConfigError("modulus must be a prime below 65536, got " + std::to_string(q));
  inverses_.assign(q, 0);
  inverses_[1] = 1;
  // inv(a) = -(q / a) * inv(q mod a)
  for (std::uint32_t a = 2; a < q; ++a)
    inverses_[a] = mul(neg(static_cast<Coefficient>(q / a)), inverses_[q % a]);
}

Coefficient PrimeField::inverse(Coefficient a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  return inverses_[a];
}

}  // namespace dflag
