#include "fpt/irreducible.hpp"

#include "fpt/errors.hpp"

namespace fpt {

FpPoly poly_from_code(std::uint32_t p, unsigned long long value) {
  FpPoly f(p);
  mpz_class e = 0;
  while (value) {
    std::uint32_t digit = static_cast<std::uint32_t>(value % p);
    if (digit) f.add_term(e, digit);
    value /= p;
    ++e;
  }
  return f;
}

IrreducibleEnumerator::IrreducibleEnumerator(std::uint32_t p)
    : p_((require_prime(p), p)), degree_(1), counter_(0) {}

const FpPoly& IrreducibleEnumerator::next() {
  for (;;) {
    unsigned long long base = 1;
    for (unsigned long i = 0; i < degree_; ++i) base *= p_;
    if (counter_ >= base) {
      ++degree_;
      counter_ = 0;
      continue;
    }
    FpPoly cand = poly_from_code(p_, base + counter_);
    ++counter_;
    // Trial division by the irreducibles found so far (their degree is at
    // most degree_/2 when they can divide a new irreducible candidate).
    bool ok = true;
    for (const auto& q : found_) {
      mpz_class qd = *q.degree();
      if (qd * 2 > degree_) break;
      if (cand.mod_only(q).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      found_.push_back(std::move(cand));
      return found_.back();
    }
  }
}

std::vector<FpPoly> irreducibles(std::uint32_t p, std::size_t k) {
  IrreducibleEnumerator en(p);
  std::vector<FpPoly> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(en.next());
  return out;
}

bool is_irreducible(const FpPoly& f) {
  auto d = f.degree();
  if (!d || *d < 1) return false;
  if (!d->fits_ulong_p())
    throw BoundExceeded("irreducibility test: degree too large");
  unsigned long deg = d->get_ui();
  if (deg == 1) return true;
  IrreducibleEnumerator en(f.modulus());
  for (;;) {
    const FpPoly& q = en.next();
    if (*q.degree() * 2 > deg) return true;
    if (f.mod_only(q).is_zero()) return false;
  }
}

Factorization factor_by_trial_division(const FpPoly& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  auto d = f.degree();
  if (!d->fits_ulong_p())
    throw BoundExceeded("factorization: degree too large");
  Factorization out;
  out.unit = f.leading_coeff();
  FpPoly rest = f.monic();
  IrreducibleEnumerator en(f.modulus());
  while (!rest.is_one()) {
    const FpPoly& q = en.next();
    if (*q.degree() * 2 > *rest.degree()) {
      // What remains is itself irreducible.
      out.factors.emplace_back(rest, 1);
      break;
    }
    unsigned long mult = 0;
    while (rest.mod_only(q).is_zero()) {
      rest = rest.exact_div(q);
      ++mult;
    }
    if (mult) out.factors.emplace_back(q, mult);
    if (rest.is_one()) break;
  }
  return out;
}

}  // namespace fpt
