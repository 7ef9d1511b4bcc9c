#include "fpt/fp.hpp"

namespace fpt {

bool is_prime_modulus(std::uint32_t p) {
  if (p < 2 || p > 251) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(std::uint32_t p) {
  if (!is_prime_modulus(p))
    throw DomainError("modulus must be a prime in [2, 251], got " +
                      std::to_string(p));
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DomainError("inverse of zero in F_p");
  std::uint32_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
  }
  return r;
}

}  // namespace fpt
