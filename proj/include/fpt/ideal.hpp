#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "fpt/hasse.hpp"
#include "fpt/multipoly.hpp"

namespace fpt {

// Ideal of K[X0..XN] given by a generator list, with the reduced Groebner
// basis cached under a compute-once discipline: concurrent readers see
// either no cache or the completed basis.
class PolyIdeal {
public:
  PolyIdeal(std::uint32_t p, std::size_t nvars, std::vector<MultiPoly> gens,
            MonomialOrder order = MonomialOrder::Grevlex);

  std::uint32_t modulus() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  // Unique reduced Groebner basis (monic, pairwise irreducible), sorted by
  // leading monomial.  Deterministic for a fixed order.
  const std::vector<MultiPoly>& groebner_basis() const;

private:
  std::uint32_t p_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<MultiPoly> gens_;
  struct Cache {
    std::once_flag flag;
    std::vector<MultiPoly> basis;
  };
  std::shared_ptr<Cache> cache_;
};

// Unique remainder of f modulo the reduced basis; zero iff f lies in I.
MultiPoly normal_form(const MultiPoly& f, const PolyIdeal& I);
bool ideal_contains(const PolyIdeal& I, const MultiPoly& f);
bool ideal_equal(const PolyIdeal& I, const PolyIdeal& J);

// Free-standing Buchberger entry point (used by the ideal cache and tests).
std::vector<MultiPoly> reduced_groebner_basis(std::vector<MultiPoly> gens,
                                              MonomialOrder order);

struct DClosureWitness {
  unsigned long index;       // derivation index i with D^(i)(g) outside I
  MultiPoly basis_element;   // g
  MultiPoly remainder;       // nonzero normal form of D^(i)(g)
};

struct DClosureResult {
  bool closed = false;
  std::vector<DClosureWitness> witnesses;  // empty iff closed
  explicit operator bool() const { return closed; }
};

// Lemma-der criterion: I is generated by polynomials with coefficients in
// K^(p^m) iff D^(i)(I) <= I for 1 <= i < p^m, tested on the reduced basis.
// With reduced_test_set the sweep shrinks to the prime-power indices
// p^0..p^(m-1), each applied up to p-1 times.
DClosureResult is_pm_rational(const PolyIdeal& I, unsigned m,
                              bool reduced_test_set = false,
                              unsigned long bound = kDefaultDeltaBound);

// Constructive descent: a generator list for I whose coefficients all lie
// in K^(p^m).  For each reduced-basis element f the loop makes f monic,
// emits g = sum_alpha Delta_m(c_alpha) X^alpha and continues with f - g;
// the leading term of f - g drops strictly because Delta_m fixes 1.
// Throws NotDClosed when the criterion fails.
std::vector<MultiPoly> descend_generators(const PolyIdeal& I, unsigned m,
                                          unsigned long bound =
                                              kDefaultDeltaBound);

// I cap J by the auxiliary-variable elimination w*I + (1-w)*J.
PolyIdeal intersect_ideals(const PolyIdeal& I, const PolyIdeal& J);

// Homogeneous ideal of a finite set of projective points (each a nonzero
// coordinate vector of length nvars), via 2x2 minors per point and pairwise
// intersection.
PolyIdeal vanishing_ideal(const std::vector<std::vector<RatFunc>>& points,
                          std::size_t nvars,
                          MonomialOrder order = MonomialOrder::Grevlex);

}  // namespace fpt
