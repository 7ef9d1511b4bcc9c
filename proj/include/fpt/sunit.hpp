#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "fpt/place.hpp"
#include "fpt/rat_func.hpp"

namespace fpt {

// The unit group of the ring of T-integers: F_p^* times the free abelian
// group on the finite-place irreducibles of T.  T conventionally contains
// the infinite place; if it does not, membership additionally requires
// valuation 0 at infinity.
class SUnitGroup {
public:
  SUnitGroup(std::uint32_t p, std::vector<Place> T);

  std::uint32_t modulus() const { return p_; }
  const std::vector<Place>& places() const { return places_; }
  // Finite-place irreducibles in enumeration order (the exponent basis).
  const std::vector<FpPoly>& finite_pis() const { return pis_; }
  bool contains_infinity() const { return has_infinity_; }
  std::size_t rank() const { return pis_.size(); }

private:
  std::uint32_t p_;
  std::vector<Place> places_;
  std::vector<FpPoly> pis_;
  bool has_infinity_;
};

// constant * prod pi_i^(e_i), exactly.
struct SUnitVector {
  Fp constant;
  std::vector<mpz_class> exponents;

  bool is_constant() const;
  std::string str(const SUnitGroup& g) const;  // factored form
};

// Exact factorization of u over the finite places of T; nullopt when u has
// a zero or pole outside T.
std::optional<SUnitVector> s_unit_decompose(const RatFunc& u,
                                            const SUnitGroup& T);

// Multiplies the factorization back out; exponents must be desk-scale.
RatFunc s_unit_value(const SUnitVector& v, const SUnitGroup& T);

// Residue field F_p[t]/pi with q = p^deg(pi) elements, represented by
// polynomials of degree < deg(pi).  Discrete logs are brute force, so q is
// capped (default 2^16).
class ResidueField {
public:
  explicit ResidueField(FpPoly pi,
                        unsigned long long q_bound = kDefaultResidueBound);

  static constexpr unsigned long long kDefaultResidueBound = 1ull << 16;

  const FpPoly& pi() const { return pi_; }
  unsigned long long q() const { return q_; }
  std::uint32_t modulus() const { return pi_.modulus(); }

  FpPoly reduce(const FpPoly& f) const;
  FpPoly reduce(const RatFunc& r) const;  // throws NotAUnitAt on v(den) > 0
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly pow(const FpPoly& a, const mpz_class& e) const;
  FpPoly inv(const FpPoly& a) const;

  FpPoly element(unsigned long long code) const;  // base-p digits
  unsigned long long code(const FpPoly& reduced) const;

  // Smallest-code generator of the multiplicative group (deterministic).
  const FpPoly& primitive_root() const;
  // Brute-force discrete log base primitive_root(); input must be nonzero.
  unsigned long long dlog(const FpPoly& reduced_nonzero) const;

private:
  FpPoly pi_;
  unsigned long long q_;
  mutable std::optional<FpPoly> root_;
};

// Class of a v-adic unit in O_v^*/(O_v^*)^m = Z/gcd(m, q_v - 1); requires
// gcd(m, p) = 1 (principal units are then m-th powers by Hensel).
struct LocalQuotientImage {
  Place place;
  unsigned long m = 1;
  unsigned long long quotient_modulus = 1;  // gcd(m, q_v - 1)
  unsigned long long value = 0;             // in [0, quotient_modulus)
};

LocalQuotientImage local_unit_image(const RatFunc& u, const Place& v,
                                    unsigned long m);
LocalQuotientImage local_unit_image(const SUnitVector& u, const SUnitGroup& T,
                                    const Place& v, unsigned long m);

// One greedy step of the witness search: the place added, the images of the
// group generators (constants generator first, then the finite pis), and
// the kernel size after adding it.
struct CspPlaceStep {
  Place place;
  std::vector<unsigned long long> image_matrix;
  unsigned long long kernel_after = 0;
};

struct CspCertificate {
  unsigned long long quotient_size = 1;
  std::vector<CspPlaceStep> places;
};

struct CspResult {
  std::vector<Place> S;
  CspCertificate certificate;
};

// Searches for a finite set S of finite places, disjoint from T, making
// O_T^*/(O_T^*)^m -> prod_{v in S} Z/gcd(m, q_v - 1) injective.  Candidates
// are scanned in enumeration order (residue fields small first) and added
// greedily whenever they shrink the kernel.  Requires gcd(m, p) = 1; throws
// BoundExceeded when no injective S exists within degree_bound.
CspResult csp_witness_search(const SUnitGroup& T, unsigned long m,
                             unsigned long degree_bound);

// Frobenius filtration U_n = H cap (K^*)^(p^n) of the subgroup H generated
// by gens, computed on the exponent lattice: an S-unit is a p^n-th power
// iff p^n divides every exponent (constants are p^n-th powers since F_p is
// perfect).  The full intersection over all n is exactly the subgroup of
// constants in H, which is torsion.
struct FiltrationLevel {
  unsigned n = 0;
  std::vector<SUnitVector> basis;
};

struct FiltrationReport {
  std::vector<SUnitVector> generators;
  std::vector<FiltrationLevel> levels;
  std::vector<Fp> intersection;  // the constants subgroup of H, listed
  bool intersection_is_torsion = true;
};

FiltrationReport frobenius_filtration(const std::vector<RatFunc>& gens,
                                      const SUnitGroup& T, unsigned n_max);

// Diagonalization U * M * V = D over Z with the left transform tracked
// (V is discarded); used to solve y*M = 0 mod q on exponent lattices.
struct RowDiagonalization {
  std::vector<std::vector<mpz_class>> left;  // rows of U
  std::vector<mpz_class> diag;               // d_i = D[i][i], size = rows
  std::size_t rows = 0, cols = 0;
};
RowDiagonalization diagonalize_rows(std::vector<std::vector<mpz_class>> m);

}  // namespace fpt
