#include "fpt/valuation.hpp"

#include <sstream>

#include "fpt/irreducible.hpp"

namespace fpt {

const mpz_class& Valuation::value() const {
  if (inf_) throw DomainError("valuation is +infinity");
  return v_;
}

std::string Valuation::str() const { return inf_ ? "inf" : v_.get_str(); }

namespace {

// ord_pi(t^d - c) for c in F_p^*, pi != t, d >= 1.  Frobenius descent first:
// with d = p^s * d' (p not dividing d') and c = c^(p^s), we have
// t^d - c = (t^d' - c)^(p^s), and t^d' - c is squarefree away from t because
// its derivative is d' * t^(d'-1).  So the answer is p^s or 0, decided by a
// single modular exponentiation.
mpz_class ord_power_minus_const(const mpz_class& d, std::uint32_t c,
                                const FpPoly& pi) {
  std::uint32_t p = pi.modulus();
  mpz_class dprime;
  mp_bitcnt_t s =
      mpz_remove(dprime.get_mpz_t(), d.get_mpz_t(), mpz_class(p).get_mpz_t());
  FpPoly residue = FpPoly::modpow(FpPoly::variable(p), dprime, pi);
  if (residue != FpPoly::constant(p, c)) return 0;
  mpz_class ps;
  mpz_ui_pow_ui(ps.get_mpz_t(), p, static_cast<unsigned long>(s));
  return ps;
}

}  // namespace

Valuation ord_at(const FpPoly& f, const Place& v) {
  if (f.is_zero()) return Valuation::infinite();
  if (v.is_infinity()) return Valuation::of(-*f.degree());

  const FpPoly& pi = v.poly();
  const bool pi_is_t = pi.term_count() == 1 && *pi.degree() == 1;

  if (f.term_count() == 1)
    return Valuation::of(pi_is_t ? f.terms().begin()->first : mpz_class(0));

  if (f.term_count() == 2) {
    auto hi = f.terms().rbegin();
    auto lo = f.terms().begin();
    mpz_class base = pi_is_t ? lo->first : mpz_class(0);
    mpz_class d = hi->first - lo->first;
    if (pi_is_t) return Valuation::of(base);
    // c1 t^d + c2 = c1 (t^d - c) with c = -c2/c1
    std::uint32_t c =
        fp_neg(fp_mul(lo->second, fp_inv(hi->second, f.modulus()), f.modulus()),
               f.modulus());
    return Valuation::of(base + ord_power_minus_const(d, c, pi));
  }

  // General case: repeated exact division.
  mpz_class k = 0;
  FpPoly rest = f;
  while (rest.mod_only(pi).is_zero()) {
    rest = rest.exact_div(pi);
    ++k;
  }
  return Valuation::of(k);
}

Valuation valuation(const RatFunc& r, const Place& v) {
  if (r.is_zero()) return Valuation::infinite();
  Valuation n = ord_at(r.num(), v), d = ord_at(r.den(), v);
  return Valuation::of(n.value() - d.value());
}

RatFunc LaurentExpansion::truncation() const {
  std::uint32_t p = place.modulus();
  RatFunc acc = RatFunc::zero(p);
  RatFunc uni = place.is_infinity()
                    ? RatFunc::variable(p).inverse()
                    : RatFunc(place.poly());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    mpz_class e = lead_valuation + static_cast<long>(i);
    acc += RatFunc(coefficients[i]) * uni.pow(e);
  }
  return acc;
}

std::string LaurentExpansion::str() const {
  std::ostringstream os;
  os << "place " << place.str() << ": ";
  if (zero) {
    os << "0";
    return os.str();
  }
  os << "lead " << lead_valuation.get_str() << ", digits [";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) os << ", ";
    os << coefficients[i].str();
  }
  os << "]";
  return os.str();
}

LaurentExpansion local_expansion(const RatFunc& r, const Place& v,
                                 unsigned precision) {
  if (precision < 1) throw DomainError("precision must be at least 1");
  LaurentExpansion out;
  out.place = v;
  out.precision = precision;
  std::uint32_t p = r.modulus();
  if (r.is_zero()) {
    out.zero = true;
    out.coefficients.assign(precision, FpPoly::zero(p));
    return out;
  }
  out.zero = false;
  Valuation lead = valuation(r, v);
  out.lead_valuation = lead.value();

  if (v.is_infinity()) {
    // Uniformizer u = 1/t; digits are residues at infinity.
    RatFunc cur = r * RatFunc::variable(p).pow(out.lead_valuation);
    for (unsigned i = 0; i < precision; ++i) {
      std::uint32_t digit = 0;
      if (!cur.is_zero() && *cur.num().degree() == *cur.den().degree())
        digit = fp_mul(cur.num().leading_coeff(),
                       fp_inv(cur.den().leading_coeff(), p), p);
      out.coefficients.push_back(FpPoly::constant(p, digit));
      cur = (cur - RatFunc::constant(p, digit)) * RatFunc::variable(p);
    }
    return out;
  }

  const FpPoly& pi = v.poly();
  RatFunc cur = r * RatFunc(pi).pow(mpz_class(-out.lead_valuation));
  for (unsigned i = 0; i < precision; ++i) {
    FpPoly digit(p);
    if (!cur.is_zero()) {
      FpPoly n = cur.num().mod_only(pi);
      FpPoly d = cur.den().mod_only(pi);
      digit = (n * FpPoly::inv_mod(d, pi)).mod_only(pi);
    }
    out.coefficients.push_back(digit);
    cur = (cur - RatFunc(digit)) / RatFunc(pi);
  }
  return out;
}

SequenceSpec SequenceSpec::exm0(std::uint32_t p, FpPoly a, FpPoly b,
                                RatFunc alpha) {
  require_prime(p);
  if (b.is_zero()) throw DomainError("exm0 requires b != 0");
  if (alpha.is_zero()) throw DomainError("exm0 requires alpha != 0");
  RatFunc beta = alpha + RatFunc(a, b);
  if (beta.is_zero()) throw DomainError("exm0 requires beta = alpha + a/b != 0");
  SequenceSpec s;
  s.kind = Kind::Exm0;
  s.p = p;
  s.a = std::move(a);
  s.b = std::move(b);
  s.alpha = std::move(alpha);
  return s;
}

SequenceSpec SequenceSpec::exm1(std::uint32_t p) {
  require_prime(p);
  SequenceSpec s;
  s.kind = Kind::Exm1;
  s.p = p;
  return s;
}

SequenceSpec SequenceSpec::explicit_terms(std::uint32_t p,
                                          std::vector<RatFunc> xs) {
  require_prime(p);
  SequenceSpec s;
  s.kind = Kind::Explicit;
  s.p = p;
  s.terms = std::move(xs);
  return s;
}

RatFunc SequenceSpec::term(unsigned n) const {
  if (n < 1) throw DomainError("sequence index starts at 1");
  switch (kind) {
    case Kind::Exm0: {
      FpPoly prod = FpPoly::one(p);
      for (const auto& pi : irreducibles(p, n)) prod *= pi;
      FpPoly num = prod.pow(n) + a;
      FpPoly den = prod.pow(2 * n) + b;
      if (den.is_zero())
        throw DomainError("exm0 parameters degenerate at n = " +
                          std::to_string(n));
      return RatFunc(num, den) + alpha;
    }
    case Kind::Exm1: {
      // p^(n!) must stay storable as an exponent; n = 10 is already a
      // multi-megabit integer.
      if (n > 10) throw BoundExceeded("exm1 index too large");
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), n);
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), mpz_class(p).get_mpz_t(), fact.get_ui());
      return RatFunc(FpPoly::monomial(p, e));
    }
    case Kind::Explicit:
      if (n > terms.size())
        throw DomainError("explicit sequence has only " +
                          std::to_string(terms.size()) + " terms");
      return terms[n - 1];
  }
  throw DomainError("bad sequence kind");
}

std::vector<Valuation> cauchy_profile(const SequenceSpec& seq, const Place& v,
                                      unsigned n_max) {
  std::vector<Valuation> out;
  if (n_max < 2) return out;
  RatFunc prev = seq.term(1);
  for (unsigned n = 2; n <= n_max; ++n) {
    RatFunc next = seq.term(n);
    out.push_back(valuation(next - prev, v));
    prev = std::move(next);
  }
  return out;
}

}  // namespace fpt
