#include "fpt/rat_func.hpp"

#include <sstream>

namespace fpt {

RatFunc::RatFunc(FpPoly num, FpPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = FpPoly::one(num_.modulus());
    return;
  }
  if (!den_.is_one()) {
    FpPoly g = FpPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  std::uint32_t lc = den_.leading_coeff();
  if (lc != 1) {
    std::uint32_t inv = fp_inv(lc, num_.modulus());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DomainError("division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(unsigned long k) const {
  RatFunc r = one(modulus()), b = *this;
  while (k) {
    if (k & 1) r *= b;
    b = (k >>= 1) ? b * b : b;
  }
  return r;
}

RatFunc RatFunc::pow(const mpz_class& k) const {
  if (k < 0) return inverse().pow(mpz_class(-k));
  if (!k.fits_ulong_p()) {
    // Only monomial-shaped elements can take astronomically large powers
    // without expansion.
    if (num_.term_count() == 1 && den_.term_count() == 1) {
      FpPoly n = FpPoly::monomial(modulus(), num_.terms().begin()->first * k,
                                  1);
      FpPoly d = FpPoly::monomial(modulus(), den_.terms().begin()->first * k,
                                  1);
      std::uint32_t c = 1, b = num_.terms().begin()->second;
      // coefficient^k mod p via Fermat
      mpz_class kk = k % (modulus() - 1);
      for (unsigned long e = kk.get_ui(); e; e >>= 1) {
        if (e & 1) c = fp_mul(c, b, modulus());
        b = fp_mul(b, b, modulus());
      }
      return RatFunc(n.scaled(c), d);
    }
    throw BoundExceeded("exponent too large for a dense power");
  }
  return pow(k.get_ui());
}

RatFunc RatFunc::substitute_power(const mpz_class& k) const {
  return RatFunc(num_.substitute_power(k), den_.substitute_power(k));
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  if (num_.term_count() > 1)
    os << "(" << num_.str() << ")";
  else
    os << num_.str();
  os << "/";
  // Parenthesize unless the denominator reparses as one atom.
  bool atom = den_.term_count() == 1 &&
              (den_.terms().begin()->second == 1 ||
               den_.terms().begin()->first == 0);
  if (atom)
    os << den_.str();
  else
    os << "(" << den_.str() << ")";
  return os.str();
}

}  // namespace fpt
