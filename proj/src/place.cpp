#include "fpt/place.hpp"

#include "fpt/irreducible.hpp"
#include "fpt/parse.hpp"

namespace fpt {

Place Place::infinity(std::uint32_t p) {
  require_prime(p);
  return Place(p, true, FpPoly(p), 1);
}

Place Place::finite(FpPoly pi) {
  if (!pi.is_monic() || pi.is_constant())
    throw DomainError("a finite place needs a monic nonconstant polynomial");
  if (!is_irreducible(pi))
    throw DomainError("place polynomial is not irreducible: " + pi.str());
  unsigned long deg = pi.degree()->get_ui();
  std::uint32_t p = pi.modulus();
  return Place(p, false, std::move(pi), deg);
}

Place Place::parse(std::string_view text, std::uint32_t p) {
  std::size_t a = text.find_first_not_of(" \t\r\n");
  std::size_t b = text.find_last_not_of(" \t\r\n");
  if (a != std::string_view::npos) text = text.substr(a, b - a + 1);
  if (text == "inf" || text == "Inf" || text == "INF")
    return infinity(p);
  return finite(parse_fp_poly(text, p));
}

const FpPoly& Place::poly() const {
  if (infinite_) throw DomainError("the infinite place has no polynomial");
  return pi_;
}

unsigned long long Place::residue_size() const {
  unsigned long long q = 1;
  for (unsigned long i = 0; i < degree_; ++i) {
    if (q > (~0ull) / p_) throw BoundExceeded("residue field too large");
    q *= p_;
  }
  return q;
}

std::string Place::str() const { return infinite_ ? "inf" : pi_.str(); }

bool Place::operator==(const Place& o) const {
  if (p_ != o.p_ || infinite_ != o.infinite_) return false;
  return infinite_ || pi_ == o.pi_;
}

bool Place::operator<(const Place& o) const {
  if (infinite_ != o.infinite_) return !infinite_;  // finite first
  if (infinite_) return false;
  return FpPoly::cmp(pi_, o.pi_) < 0;
}

}  // namespace fpt
