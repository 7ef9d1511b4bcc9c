#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fpt/rat_func.hpp"

namespace fpt {

// Exponent vector over the variables X0..XN.
using Monomial = std::vector<std::uint32_t>;

enum class MonomialOrder {
  Grevlex,    // graded reverse lexicographic, X0 > X1 > ... > XN
  Lex,        // lexicographic, X0 > X1 > ... > XN
  ElimFirst,  // block order eliminating the first variable
};

unsigned long mono_total_degree(const Monomial& m);
// -1 / 0 / +1 with a < b / a == b / a > b under the given order.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
std::string mono_str(const Monomial& m);

// Sparse multivariate polynomial in X0..XN with RatFunc coefficients.
// Terms are stored under a fixed container order (plain lexicographic on the
// exponent vector) independent of any monomial order used for computation.
class MultiPoly {
public:
  using TermMap = std::map<Monomial, RatFunc>;

  MultiPoly() : p_(2), nvars_(0) {}
  MultiPoly(std::uint32_t p, std::size_t nvars)
      : p_((require_prime(p), p)), nvars_(nvars) {}

  static MultiPoly zero(std::uint32_t p, std::size_t nvars) {
    return MultiPoly(p, nvars);
  }
  static MultiPoly constant(std::uint32_t p, std::size_t nvars,
                            const RatFunc& c);
  static MultiPoly variable(std::uint32_t p, std::size_t nvars,
                            std::size_t index);
  static MultiPoly term(std::uint32_t p, std::size_t nvars, Monomial m,
                        const RatFunc& c);

  std::uint32_t modulus() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_coefficient() const;  // no variable appears
  RatFunc coeff(const Monomial& m) const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_homogeneous() const;
  unsigned long total_degree() const;  // 0 for the zero polynomial

  void add_term(const Monomial& m, const RatFunc& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  bool operator==(const MultiPoly& o) const {
    return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scaled(const RatFunc& c) const;
  MultiPoly mul_term(const Monomial& m, const RatFunc& c) const;
  MultiPoly pow(unsigned long k) const;

  // Largest term under the given monomial order; polynomial must be nonzero.
  std::pair<Monomial, RatFunc> leading_term(MonomialOrder order) const;

  // Variable-count surgery used by the elimination machinery.
  MultiPoly with_var_prepended() const;          // nvars+1, new X0 unused
  MultiPoly with_first_var_dropped() const;      // requires X0-free
  bool uses_first_var() const;
  MultiPoly resized(std::size_t nvars) const;    // pad with unused variables

  std::string str() const;

private:
  std::uint32_t p_;
  std::size_t nvars_;
  TermMap terms_;
};

// Coefficient-wise application of the Hasse derivation D^(i); the variables
// X0..XN are sent to 0, so monomials pass through unchanged.
MultiPoly hasse_derive_multi(unsigned long i, const MultiPoly& f);

}  // namespace fpt
