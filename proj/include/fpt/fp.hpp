#pragma once

#include <cstdint>

#include "fpt/errors.hpp"

namespace fpt {

// Supported characteristics are primes in [2, 251].
bool is_prime_modulus(std::uint32_t p);
void require_prime(std::uint32_t p);

// Element of the prime field F_p; value kept reduced to [0, p).
struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 2;

  Fp() = default;
  Fp(std::uint32_t value, std::uint32_t prime) : v(value % prime), p(prime) {}

  static Fp of(long long x, std::uint32_t p) {
    require_prime(p);
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += p;
    return Fp(static_cast<std::uint32_t>(r), p);
  }

  bool is_zero() const { return v == 0; }

  friend Fp operator+(Fp a, Fp b) { return Fp((a.v + b.v) % a.p, a.p); }
  friend Fp operator-(Fp a, Fp b) { return Fp((a.v + a.p - b.v) % a.p, a.p); }
  friend Fp operator*(Fp a, Fp b) { return Fp((a.v * b.v) % a.p, a.p); }
  friend Fp operator-(Fp a) { return Fp((a.p - a.v) % a.p, a.p); }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v && a.p == b.p; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  Fp pow(unsigned long long e) const {
    Fp r(1 % p, p), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  Fp inverse() const {
    if (v == 0) throw DomainError("inverse of zero in F_p");
    return pow(p - 2);
  }

  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
};

// Arithmetic on raw residues, used by the polynomial layer.
inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return (a * b) % p;  // p <= 251, no overflow in 32 bits
}
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);
inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

}  // namespace fpt
