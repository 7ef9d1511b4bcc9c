#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fpt/fp_poly.hpp"

namespace fpt {

// Deterministic enumeration of the monic irreducibles of F_p[t], ordered by
// degree and then by the coefficient vector read as a base-p integer (most
// significant digit = leading coefficient).
class IrreducibleEnumerator {
public:
  explicit IrreducibleEnumerator(std::uint32_t p);
  const FpPoly& next();                 // never exhausts
  const std::vector<FpPoly>& seen() const { return found_; }

private:
  std::uint32_t p_;
  unsigned long degree_;
  unsigned long long counter_;  // offset within current degree
  std::vector<FpPoly> found_;
};

std::vector<FpPoly> irreducibles(std::uint32_t p, std::size_t k);

// Trial division against the enumerated irreducibles of degree <= deg(f)/2.
bool is_irreducible(const FpPoly& f);

// Full factorization by trial division; input degree must fit an unsigned
// long.  Returns the leading unit and the (monic irreducible, multiplicity)
// pairs in enumeration order.
struct Factorization {
  std::uint32_t unit = 1;
  std::vector<std::pair<FpPoly, unsigned long>> factors;
};
Factorization factor_by_trial_division(const FpPoly& f);

// Monic polynomial with coefficient vector given by the base-p digits of
// value (degree = position of the most significant digit).
FpPoly poly_from_code(std::uint32_t p, unsigned long long value);

}  // namespace fpt
