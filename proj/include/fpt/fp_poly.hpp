#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "fpt/fp.hpp"

namespace fpt {

// Sparse univariate polynomial over F_p in the variable t.  Exponents are
// arbitrary-precision nonnegative integers, so monomials like t^(p^(n!))
// are first-class values and never get expanded.  No zero coefficients are
// stored; the degree of the zero polynomial is the distinguished -infinity,
// reported as nullopt.
class FpPoly {
public:
  using TermMap = std::map<mpz_class, std::uint32_t>;

  FpPoly() : p_(2) {}
  explicit FpPoly(std::uint32_t p) : p_((require_prime(p), p)) {}

  static FpPoly zero(std::uint32_t p) { return FpPoly(p); }
  static FpPoly constant(std::uint32_t p, long long c);
  static FpPoly monomial(std::uint32_t p, const mpz_class& e, long long c = 1);
  static FpPoly variable(std::uint32_t p) { return monomial(p, 1); }
  static FpPoly one(std::uint32_t p) { return constant(p, 1); }

  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::optional<mpz_class> degree() const;
  std::uint32_t leading_coeff() const;  // 0 for the zero polynomial
  std::uint32_t constant_coeff() const { return coeff(0); }
  bool is_monic() const { return leading_coeff() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  std::uint32_t coeff(const mpz_class& e) const;
  void add_term(const mpz_class& e, std::uint32_t c);  // accumulates

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator-() const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly& operator+=(const FpPoly& o) { return *this = *this + o; }
  FpPoly& operator-=(const FpPoly& o) { return *this = *this - o; }
  FpPoly& operator*=(const FpPoly& o) { return *this = *this * o; }
  bool operator==(const FpPoly& o) const {
    return p_ == o.p_ && terms_ == o.terms_;
  }
  bool operator!=(const FpPoly& o) const { return !(*this == o); }

  FpPoly scaled(std::uint32_t c) const;
  FpPoly shifted(const mpz_class& e) const;  // * t^e
  FpPoly pow(unsigned long k) const;

  // Quotient and remainder; the quotient is materialized, so dividend
  // degrees must stay at desk scale (remainder-only queries should use
  // mod_only, which never expands).
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly mod_only(const FpPoly& d) const;
  FpPoly exact_div(const FpPoly& d) const;
  FpPoly monic() const;

  // base^e mod modulus by square and multiply; never expands base^e.
  static FpPoly modpow(const FpPoly& base, const mpz_class& e,
                       const FpPoly& modulus);

  static FpPoly gcd(FpPoly a, FpPoly b);  // monic gcd

  // Extended-Euclid inverse of a modulo m; requires gcd(a, m) = 1.
  static FpPoly inv_mod(const FpPoly& a, const FpPoly& m);

  // t -> t^k substitution (the canonical way to build p^m-th powers).
  FpPoly substitute_power(const mpz_class& k) const;

  std::uint32_t eval(std::uint32_t x) const;  // degree must fit in ulong

  std::string str() const;

  // Deterministic total order: by degree, then coefficient vectors from the
  // top.  Used only to stabilize printed listings.
  static int cmp(const FpPoly& a, const FpPoly& b);

private:
  std::uint32_t p_;
  TermMap terms_;
};

}  // namespace fpt
