#pragma once

#include <string>

#include "fpt/fp_poly.hpp"

namespace fpt {

// Element of the rational function field K = F_p(t), kept in canonical form:
// the denominator is monic and nonzero and gcd(num, den) = 1.  Canonical
// forms are unique, so equality is a structural check.
class RatFunc {
public:
  RatFunc() : num_(2), den_(FpPoly::one(2)) {}
  explicit RatFunc(FpPoly num) : num_(std::move(num)), den_(FpPoly::one(num_.modulus())) {}
  RatFunc(FpPoly num, FpPoly den);  // reduces; throws DomainError on den = 0

  static RatFunc zero(std::uint32_t p) { return RatFunc(FpPoly::zero(p)); }
  static RatFunc one(std::uint32_t p) { return RatFunc(FpPoly::one(p)); }
  static RatFunc constant(std::uint32_t p, long long c) {
    return RatFunc(FpPoly::constant(p, c));
  }
  static RatFunc variable(std::uint32_t p) {
    return RatFunc(FpPoly::variable(p));
  }

  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  std::uint32_t modulus() const { return num_.modulus(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;
  RatFunc pow(unsigned long k) const;
  RatFunc pow(const mpz_class& k) const;  // negative exponents allowed

  // t -> t^k; for k = p^m this is exactly the p^m-th power map.
  RatFunc substitute_power(const mpz_class& k) const;

  std::string str() const;

private:
  FpPoly num_, den_;
  void reduce();
};

}  // namespace fpt
