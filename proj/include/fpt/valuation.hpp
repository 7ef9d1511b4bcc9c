#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fpt/place.hpp"
#include "fpt/rat_func.hpp"

namespace fpt {

// Value of a discrete valuation: an integer or +infinity (at the zero
// element).  Exponents can be huge, so the finite part is arbitrary
// precision.
class Valuation {
public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation of(mpz_class v) { return Valuation(false, std::move(v)); }

  bool is_infinite() const { return inf_; }
  const mpz_class& value() const;  // finite only

  bool operator==(const Valuation& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator!=(const Valuation& o) const { return !(*this == o); }
  // +infinity compares greater than every finite value.
  bool operator<(const Valuation& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator>=(const Valuation& o) const { return !(*this < o); }
  bool operator>(const Valuation& o) const { return o < *this; }
  bool operator<=(const Valuation& o) const { return !(o < *this); }

  std::string str() const;

private:
  Valuation(bool inf, mpz_class v) : inf_(inf), v_(std::move(v)) {}
  bool inf_;
  mpz_class v_;
};

// Multiplicity of the place in f (finite places), or -deg(f) at infinity;
// +infinity for f = 0.  Two-term polynomials c1*t^e1 + c2*t^e2 take a fast
// path through Frobenius descent plus one modular exponentiation, so the
// huge exponents of the built-in demo sequences never get expanded.
Valuation ord_at(const FpPoly& f, const Place& v);

// ord_at(num) - ord_at(den); a discrete valuation on K.
Valuation valuation(const RatFunc& r, const Place& v);

// Truncated expansion of r in the uniformizer at v (pi for finite places,
// 1/t at infinity).  Coefficients are residue-field representatives:
// polynomials of degree < deg(pi), constants at infinity.
struct LaurentExpansion {
  Place place;
  bool zero;                     // r = 0: no leading valuation
  mpz_class lead_valuation = 0;  // valid when !zero
  std::vector<FpPoly> coefficients;
  unsigned precision = 0;

  // Sum of the emitted digits as an element of K; r - truncation() has
  // valuation >= lead_valuation + precision.
  RatFunc truncation() const;
  std::string str() const;
};

LaurentExpansion local_expansion(const RatFunc& r, const Place& v,
                                 unsigned precision);

// Sequence specifications for Cauchy profiles.  The built-in generators are
// the two convergence demos; Explicit supplies the terms directly.
struct SequenceSpec {
  enum class Kind { Exm0, Exm1, Explicit };
  Kind kind = Kind::Explicit;
  std::uint32_t p = 2;
  // exm0 parameters
  FpPoly a, b;
  RatFunc alpha;
  // explicit terms (x_1, x_2, ...)
  std::vector<RatFunc> terms;

  static SequenceSpec exm0(std::uint32_t p, FpPoly a, FpPoly b, RatFunc alpha);
  static SequenceSpec exm1(std::uint32_t p);
  static SequenceSpec explicit_terms(std::uint32_t p, std::vector<RatFunc> xs);

  RatFunc term(unsigned n) const;  // n >= 1
};

// [valuation(x_{n+1} - x_n, v)] for n = 1..n_max-1.  A strictly increasing
// profile certifies Cauchy behavior at v up to n_max.
std::vector<Valuation> cauchy_profile(const SequenceSpec& seq, const Place& v,
                                      unsigned n_max);

}  // namespace fpt
