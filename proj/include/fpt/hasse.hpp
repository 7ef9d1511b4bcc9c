#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "fpt/rat_func.hpp"

namespace fpt {

// Index i of the derivation D^(i) together with its base-p digits
// (little-endian: i = sum digits[n] * p^n).
struct DerivationIndex {
  unsigned long i = 0;
  std::uint32_t p = 2;
  std::vector<std::uint32_t> digits;

  static DerivationIndex of(unsigned long i, std::uint32_t p);
};

std::vector<std::uint32_t> base_p_digits(const mpz_class& n, std::uint32_t p);

// C(i, j) mod p, digit by digit: the product of C(i_n, j_n) over the base-p
// digits.  Zero exactly when some digit of j exceeds the matching digit of i.
Fp lucas_binom(const mpz_class& i, const mpz_class& j, std::uint32_t p);

// The unit c_i with (D^(p^0))^(i_0) ... (D^(p^d))^(i_d) = c_i * D^(i).
Fp c_coeff(unsigned long i, std::uint32_t p);

// The iterative derivation on K = F_p(t) with D^(j)(t^i) = C(i,j) t^(i-j),
// extended to quotients by the Leibniz recursion.
FpPoly hasse_derive_poly(unsigned long i, const FpPoly& f);
RatFunc hasse_derive(unsigned long i, const RatFunc& r);
// All of D^(0)(r) .. D^(i_max)(r) in one pass (the quotient recursion
// produces the whole table anyway).
std::vector<RatFunc> hasse_derive_table(const RatFunc& r, unsigned long i_max);

inline constexpr unsigned long kDefaultDeltaBound = 512;

// Delta_m(c) = sum_{i=0}^{p^m-1} (-t)^i D^(i)(c).  The result is always a
// p^m-th power in K.  Throws BoundExceeded when p^m > bound.
RatFunc delta_m(const RatFunc& c, unsigned m,
                unsigned long bound = kDefaultDeltaBound);

// Direct p^m-th power test on the canonical form: with c = f/g reduced, c is
// a p^m-th power iff every exponent of f * g^(p^m - 1) is divisible by p^m
// (F_p itself is perfect).
bool is_pm_power_by_exponents(const RatFunc& c, unsigned m);

// Returns r with r^(p^m) = c when c lies in K^(p^m), nullopt otherwise.
// The decision is made by the derivation-kernel criterion (D^(l)(c) = 0 for
// 1 <= l < p^m) and cross-checked against the exponent oracle; disagreement
// would be a broken internal invariant and throws logic_error.
std::optional<RatFunc> pm_power_root(const RatFunc& c, unsigned m);

// p^m as ulong; throws BoundExceeded if it does not fit or exceeds bound.
unsigned long checked_power(std::uint32_t p, unsigned m, unsigned long bound);

}  // namespace fpt
