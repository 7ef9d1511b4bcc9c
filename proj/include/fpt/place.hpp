#pragma once

#include <string>
#include <string_view>

#include "fpt/fp_poly.hpp"

namespace fpt {

// A place of F_p(t): either a monic irreducible polynomial or the infinite
// (degree) place.  The residue field at a finite place pi has p^deg(pi)
// elements; at infinity it is F_p.
class Place {
public:
  static Place infinity(std::uint32_t p);
  static Place finite(FpPoly pi);  // validates monic + irreducible
  // "inf" or a monic irreducible in the field-element grammar.
  static Place parse(std::string_view text, std::uint32_t p);

  bool is_infinity() const { return infinite_; }
  const FpPoly& poly() const;  // finite places only
  std::uint32_t modulus() const { return p_; }
  unsigned long degree() const { return degree_; }
  unsigned long long residue_size() const;  // q_v = p^degree, must fit 64 bits

  std::string str() const;

  bool operator==(const Place& o) const;
  bool operator!=(const Place& o) const { return !(*this == o); }
  // Finite places by (degree, coefficient code), infinity last.
  bool operator<(const Place& o) const;

private:
  Place(std::uint32_t p, bool infinite, FpPoly pi, unsigned long degree)
      : p_(p), infinite_(infinite), pi_(std::move(pi)), degree_(degree) {}
  std::uint32_t p_;
  bool infinite_;
  FpPoly pi_;
  unsigned long degree_;
};

}  // namespace fpt
