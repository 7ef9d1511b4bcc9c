#include "fpt/hasse.hpp"

namespace fpt {

std::vector<std::uint32_t> base_p_digits(const mpz_class& n, std::uint32_t p) {
  if (n < 0) throw DomainError("base_p_digits: negative input");
  std::vector<std::uint32_t> digits;
  mpz_class rest = n;
  while (rest > 0) {
    mpz_class q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), p);
    digits.push_back(static_cast<std::uint32_t>(r.get_ui()));
    rest = q;
  }
  return digits;
}

DerivationIndex DerivationIndex::of(unsigned long i, std::uint32_t p) {
  require_prime(p);
  return DerivationIndex{i, p, base_p_digits(mpz_class(i), p)};
}

namespace {

// C(a, b) mod p for digits a, b < p.
std::uint32_t small_binom_mod(std::uint32_t a, std::uint32_t b,
                              std::uint32_t p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint32_t num = 1, den = 1;
  for (std::uint32_t k = 1; k <= b; ++k) {
    num = fp_mul(num, (a + 1 - k) % p, p);
    den = fp_mul(den, k % p, p);
  }
  return fp_mul(num, fp_inv(den, p), p);
}

}  // namespace

Fp lucas_binom(const mpz_class& i, const mpz_class& j, std::uint32_t p) {
  require_prime(p);
  if (j < 0 || i < 0) throw DomainError("lucas_binom: negative argument");
  auto di = base_p_digits(i, p), dj = base_p_digits(j, p);
  if (dj.size() > di.size()) return Fp(0, p);
  std::uint32_t acc = 1;
  for (std::size_t n = 0; n < dj.size(); ++n) {
    acc = fp_mul(acc, small_binom_mod(di[n], dj[n], p), p);
    if (!acc) break;
  }
  return Fp(acc, p);
}

Fp c_coeff(unsigned long i, std::uint32_t p) {
  require_prime(p);
  auto digits = base_p_digits(mpz_class(i), p);
  std::uint32_t acc = 1;
  mpz_class partial = 0;
  mpz_class pn = 1;  // p^n
  for (std::size_t n = 0; n < digits.size(); ++n) {
    partial += digits[n] * pn;
    acc = fp_mul(acc, lucas_binom(partial, digits[n] * pn, p).v, p);
    for (std::uint32_t a = 1; a <= digits[n]; ++a)
      acc = fp_mul(acc, lucas_binom(a * pn, pn, p).v, p);
    pn *= p;
  }
  return Fp(acc, p);
}

FpPoly hasse_derive_poly(unsigned long i, const FpPoly& f) {
  if (i == 0) return f;
  std::uint32_t p = f.modulus();
  FpPoly out(p);
  mpz_class iz(i);
  for (const auto& [e, c] : f.terms()) {
    if (e < iz) continue;
    std::uint32_t binom = lucas_binom(e, iz, p).v;
    if (binom) out.add_term(e - iz, fp_mul(c, binom, p));
  }
  return out;
}

std::vector<RatFunc> hasse_derive_table(const RatFunc& r,
                                        unsigned long i_max) {
  std::uint32_t p = r.modulus();
  std::vector<RatFunc> table;
  table.reserve(i_max + 1);
  if (r.is_poly()) {
    for (unsigned long i = 0; i <= i_max; ++i)
      table.emplace_back(hasse_derive_poly(i, r.num()));
    return table;
  }

  // Quotient recursion kept in polynomial form: with h = f/g and
  // u_i := D^(i)(h) * g^(i+1), Leibniz gives
  //   u_i = D^(i)(f) * g^i - sum_{l<i} u_l * D^(i-l)(g) * g^(i-l-1),
  // so the whole table costs polynomial products plus one gcd per entry.
  const FpPoly& f = r.num();
  const FpPoly& g = r.den();
  std::vector<FpPoly> gpow{FpPoly::one(p)};
  for (unsigned long k = 1; k <= i_max; ++k) gpow.push_back(gpow.back() * g);
  std::vector<FpPoly> dg;
  dg.reserve(i_max + 1);
  for (unsigned long k = 0; k <= i_max; ++k)
    dg.push_back(hasse_derive_poly(k, g));

  std::vector<FpPoly> u{f};
  table.push_back(r);
  for (unsigned long i = 1; i <= i_max; ++i) {
    FpPoly acc = hasse_derive_poly(i, f) * gpow[i];
    for (unsigned long l = 0; l < i; ++l) {
      if (dg[i - l].is_zero() || u[l].is_zero()) continue;
      acc -= u[l] * dg[i - l] * gpow[i - l - 1];
    }
    u.push_back(acc);
    table.push_back(acc.is_zero() ? RatFunc::zero(p)
                                  : RatFunc(acc, gpow[i] * g));
  }
  return table;
}

RatFunc hasse_derive(unsigned long i, const RatFunc& r) {
  if (i == 0) return r;
  if (r.is_poly()) return RatFunc(hasse_derive_poly(i, r.num()));
  return hasse_derive_table(r, i)[i];
}

unsigned long checked_power(std::uint32_t p, unsigned m, unsigned long bound) {
  unsigned long q = 1;
  for (unsigned k = 0; k < m; ++k) {
    if (q > bound / p)
      throw BoundExceeded("p^m = " + std::to_string(p) + "^" +
                          std::to_string(m) + " exceeds the bound " +
                          std::to_string(bound));
    q *= p;
  }
  if (q > bound)
    throw BoundExceeded("p^m exceeds the bound " + std::to_string(bound));
  return q;
}

RatFunc delta_m(const RatFunc& c, unsigned m, unsigned long bound) {
  std::uint32_t p = c.modulus();
  unsigned long q = checked_power(p, m, bound);
  std::vector<RatFunc> table = hasse_derive_table(c, q - 1);
  RatFunc acc = RatFunc::zero(p);
  for (unsigned long i = 0; i < q; ++i) {
    if (table[i].is_zero()) continue;
    long long sign = (i % 2 == 0) ? 1 : -1;
    acc += RatFunc(FpPoly::monomial(p, mpz_class(i), sign)) * table[i];
  }
  return acc;
}

bool is_pm_power_by_exponents(const RatFunc& c, unsigned m) {
  if (c.is_zero()) return true;
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), c.modulus(), m);
  // On the canonical form num/den with gcd 1, c is a p^m-th power exactly
  // when both parts are, i.e. every stored exponent is divisible by p^m
  // (coefficients take care of themselves: a^(p^m) = a on F_p).
  for (const auto& [e, cc] : c.num().terms())
    if (!mpz_divisible_p(e.get_mpz_t(), q.get_mpz_t())) return false;
  for (const auto& [e, cc] : c.den().terms())
    if (!mpz_divisible_p(e.get_mpz_t(), q.get_mpz_t())) return false;
  return true;
}

namespace {

FpPoly exponent_root(const FpPoly& f, const mpz_class& q) {
  FpPoly out(f.modulus());
  for (const auto& [e, c] : f.terms()) out.add_term(e / q, c);
  return out;
}

}  // namespace

std::optional<RatFunc> pm_power_root(const RatFunc& c, unsigned m) {
  std::uint32_t p = c.modulus();
  if (m == 0) return c;
  if (c.is_zero()) return c;
  unsigned long q = checked_power(p, m, kDefaultDeltaBound);

  std::vector<RatFunc> table = hasse_derive_table(c, q - 1);
  bool kernel_member = true;
  for (unsigned long l = 1; l < q; ++l)
    if (!table[l].is_zero()) {
      kernel_member = false;
      break;
    }
  bool exponent_member = is_pm_power_by_exponents(c, m);
  if (kernel_member != exponent_member)
    throw std::logic_error(
        "derivation kernel and exponent oracle disagree on " + c.str());
  if (!kernel_member) return std::nullopt;

  mpz_class qz;
  mpz_ui_pow_ui(qz.get_mpz_t(), p, m);
  RatFunc root(exponent_root(c.num(), qz), exponent_root(c.den(), qz));
  return root;
}

}  // namespace fpt
