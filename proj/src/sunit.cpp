#include "fpt/sunit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "fpt/irreducible.hpp"
#include "fpt/valuation.hpp"

namespace fpt {

SUnitGroup::SUnitGroup(std::uint32_t p, std::vector<Place> T)
    : p_((require_prime(p), p)), has_infinity_(false) {
  std::set<Place> seen;
  for (auto& v : T) {
    if (v.modulus() != p_) throw DomainError("place modulus mismatch");
    if (!seen.insert(v).second) continue;
    if (v.is_infinity())
      has_infinity_ = true;
    else
      pis_.push_back(v.poly());
  }
  places_.assign(seen.begin(), seen.end());
  std::sort(places_.begin(), places_.end());
  std::sort(pis_.begin(), pis_.end(),
            [](const FpPoly& a, const FpPoly& b) { return FpPoly::cmp(a, b) < 0; });
}

bool SUnitVector::is_constant() const {
  for (const auto& e : exponents)
    if (e != 0) return false;
  return true;
}

std::string SUnitVector::str(const SUnitGroup& g) const {
  std::ostringstream os;
  bool printed = false;
  if (constant.v != 1 || is_constant()) {
    os << constant.v;
    printed = true;
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (printed) os << " * ";
    printed = true;
    const FpPoly& pi = g.finite_pis()[i];
    if (exponents[i] == 1 && pi.term_count() == 1) {
      os << pi.str();
    } else if (exponents[i] == 1) {
      os << "(" << pi.str() << ")";
    } else {
      os << "(" << pi.str() << ")^" << exponents[i].get_str();
    }
  }
  return os.str();
}

std::optional<SUnitVector> s_unit_decompose(const RatFunc& u,
                                            const SUnitGroup& T) {
  if (u.is_zero()) throw DomainError("s_unit_decompose: zero element");
  std::uint32_t p = T.modulus();

  SUnitVector out;
  out.constant = Fp(u.num().leading_coeff(), p);
  out.exponents.resize(T.rank());

  mpz_class num_acc = 0, den_acc = 0;
  for (std::size_t i = 0; i < T.rank(); ++i) {
    Place v = Place::finite(T.finite_pis()[i]);
    mpz_class a = ord_at(u.num(), v).value();
    mpz_class b = ord_at(u.den(), v).value();
    out.exponents[i] = a - b;
    num_acc += a * static_cast<long>(v.degree());
    den_acc += b * static_cast<long>(v.degree());
  }
  // u is a T-unit exactly when the tracked factors exhaust both degrees.
  if (num_acc != *u.num().degree() || den_acc != *u.den().degree())
    return std::nullopt;
  if (!T.contains_infinity() && *u.num().degree() != *u.den().degree())
    return std::nullopt;
  return out;
}

RatFunc s_unit_value(const SUnitVector& v, const SUnitGroup& T) {
  std::uint32_t p = T.modulus();
  RatFunc acc = RatFunc::constant(p, v.constant.v);
  for (std::size_t i = 0; i < v.exponents.size(); ++i) {
    if (v.exponents[i] == 0) continue;
    acc *= RatFunc(T.finite_pis()[i]).pow(v.exponents[i]);
  }
  return acc;
}

ResidueField::ResidueField(FpPoly pi, unsigned long long q_bound) : pi_(std::move(pi)) {
  if (!pi_.is_monic() || pi_.is_constant() || !is_irreducible(pi_))
    throw DomainError("residue field needs a monic irreducible modulus");
  unsigned long deg = pi_.degree()->get_ui();
  std::uint32_t p = pi_.modulus();
  q_ = 1;
  for (unsigned long i = 0; i < deg; ++i) {
    if (q_ > q_bound / p)
      throw BoundExceeded("residue field larger than the configured bound");
    q_ *= p;
  }
  if (q_ > q_bound)
    throw BoundExceeded("residue field larger than the configured bound");
}

FpPoly ResidueField::reduce(const FpPoly& f) const { return f.mod_only(pi_); }

FpPoly ResidueField::reduce(const RatFunc& r) const {
  FpPoly d = r.den().mod_only(pi_);
  if (d.is_zero()) throw NotAUnitAt(pi_.str());
  return (r.num().mod_only(pi_) * FpPoly::inv_mod(d, pi_)).mod_only(pi_);
}

FpPoly ResidueField::mul(const FpPoly& a, const FpPoly& b) const {
  return (a * b).mod_only(pi_);
}

FpPoly ResidueField::pow(const FpPoly& a, const mpz_class& e) const {
  return FpPoly::modpow(a, e, pi_);
}

FpPoly ResidueField::inv(const FpPoly& a) const {
  return FpPoly::inv_mod(a, pi_);
}

FpPoly ResidueField::element(unsigned long long code) const {
  return poly_from_code(modulus(), code);
}

unsigned long long ResidueField::code(const FpPoly& reduced) const {
  unsigned long long acc = 0;
  std::uint32_t p = modulus();
  for (auto it = reduced.terms().rbegin(); it != reduced.terms().rend(); ++it) {
    unsigned long long pe = 1;
    for (unsigned long i = 0; i < it->first.get_ui(); ++i) pe *= p;
    acc += it->second * pe;
  }
  return acc;
}

namespace {

std::vector<unsigned long long> prime_factors_u64(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

const FpPoly& ResidueField::primitive_root() const {
  if (root_) return *root_;
  auto factors = prime_factors_u64(q_ - 1);
  for (unsigned long long code = 1; code < q_; ++code) {
    FpPoly cand = element(code);
    bool ok = true;
    for (auto f : factors) {
      if (pow(cand, mpz_class(static_cast<unsigned long>((q_ - 1) / f)))
              .is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      root_ = std::move(cand);
      return *root_;
    }
  }
  throw std::logic_error("no primitive root found");  // unreachable
}

unsigned long long ResidueField::dlog(const FpPoly& x) const {
  if (x.is_zero()) throw DomainError("discrete log of zero");
  const FpPoly& g = primitive_root();
  FpPoly acc = FpPoly::one(modulus());
  for (unsigned long long k = 0; k + 1 < q_; ++k) {
    if (acc == x) return k;
    acc = mul(acc, g);
  }
  throw DomainError("element is not reduced modulo the place polynomial");
}

namespace {

unsigned long long gcd_u64(unsigned long long a, unsigned long long b) {
  while (b) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Smallest generator of F_p^* (1 for p = 2).
std::uint32_t constants_generator(std::uint32_t p) {
  if (p == 2) return 1;
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : prime_factors_u64(p - 1)) {
      std::uint32_t e = static_cast<std::uint32_t>((p - 1) / f);
      if (Fp(g, p).pow(e).v == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no generator of F_p^*");
}

}  // namespace

LocalQuotientImage local_unit_image(const RatFunc& u, const Place& v,
                                    unsigned long m) {
  if (v.is_infinity())
    throw DomainError("local unit images are defined at finite places only");
  if (m == 0 || gcd_u64(m, v.modulus()) != 1)
    throw DomainError("local quotient exponent must be coprime to p");
  if (valuation(u, v) != Valuation::of(0)) throw NotAUnitAt(v.str());
  ResidueField F(v.poly());
  unsigned long long g = gcd_u64(m, F.q() - 1);
  LocalQuotientImage out;
  out.place = v;
  out.m = m;
  out.quotient_modulus = g;
  out.value = g == 1 ? 0 : F.dlog(F.reduce(u)) % g;
  return out;
}

LocalQuotientImage local_unit_image(const SUnitVector& u, const SUnitGroup& T,
                                    const Place& v, unsigned long m) {
  if (v.is_infinity())
    throw DomainError("local unit images are defined at finite places only");
  if (m == 0 || gcd_u64(m, v.modulus()) != 1)
    throw DomainError("local quotient exponent must be coprime to p");
  ResidueField F(v.poly());
  unsigned long long order = F.q() - 1;
  unsigned long long g = gcd_u64(m, order);
  LocalQuotientImage out;
  out.place = v;
  out.m = m;
  out.quotient_modulus = g;
  if (g == 1) return out;

  mpz_class acc = F.dlog(F.element(u.constant.v % v.modulus()));
  for (std::size_t i = 0; i < u.exponents.size(); ++i) {
    if (u.exponents[i] == 0) continue;
    FpPoly res = F.reduce(T.finite_pis()[i]);
    if (res.is_zero()) throw NotAUnitAt(v.str());
    acc += u.exponents[i] * static_cast<long>(F.dlog(res));
  }
  mpz_class val = acc % static_cast<unsigned long>(g);
  if (val < 0) val += static_cast<unsigned long>(g);
  out.value = val.get_ui();
  return out;
}

CspResult csp_witness_search(const SUnitGroup& T, unsigned long m,
                             unsigned long degree_bound) {
  std::uint32_t p = T.modulus();
  if (m == 0 || gcd_u64(m, p) != 1)
    throw DomainError("witness search needs gcd(m, p) = 1");

  const std::size_t k = T.rank();
  const unsigned long long d0 = gcd_u64(m, p - 1);
  unsigned long long size = d0;
  for (std::size_t i = 0; i < k; ++i) {
    if (size > (1ull << 22) / m)
      throw BoundExceeded("quotient group too large to enumerate");
    size *= m;
  }

  CspResult out;
  out.certificate.quotient_size = size;

  // Quotient elements as exponent tuples (a, e_1..e_k) with a < d0,
  // e_i < m, over the generators (zeta, pi_1, ..., pi_k).
  std::vector<std::vector<unsigned long long>> kernel;
  kernel.reserve(size);
  for (unsigned long long code = 0; code < size; ++code) {
    std::vector<unsigned long long> tuple(k + 1);
    unsigned long long c = code;
    tuple[0] = c % d0;
    c /= d0;
    for (std::size_t i = 0; i < k; ++i) {
      tuple[i + 1] = c % m;
      c /= m;
    }
    kernel.push_back(std::move(tuple));
  }

  const std::uint32_t zeta = constants_generator(p);
  std::set<std::string> t_polys;
  for (const auto& pi : T.finite_pis()) t_polys.insert(pi.str());

  IrreducibleEnumerator en(p);
  while (kernel.size() > 1) {
    const FpPoly& cand = en.next();
    if (cand.degree()->get_ui() > degree_bound)
      throw BoundExceeded("no injective witness set within degree " +
                          std::to_string(degree_bound));
    if (t_polys.count(cand.str())) continue;  // S must avoid T

    ResidueField F(cand);
    unsigned long long g = gcd_u64(m, F.q() - 1);
    if (g == 1) continue;

    std::vector<unsigned long long> images(k + 1);
    images[0] = F.dlog(F.element(zeta)) % g;
    for (std::size_t i = 0; i < k; ++i)
      images[i + 1] = F.dlog(F.reduce(T.finite_pis()[i])) % g;

    std::vector<std::vector<unsigned long long>> next;
    for (const auto& tuple : kernel) {
      unsigned long long acc = 0;
      for (std::size_t i = 0; i <= k; ++i)
        acc = (acc + tuple[i] % g * images[i]) % g;
      if (acc == 0) next.push_back(tuple);
    }
    if (next.size() < kernel.size()) {
      Place v = Place::finite(cand);
      out.S.push_back(v);
      out.certificate.places.push_back(
          {v, images, static_cast<unsigned long long>(next.size())});
      kernel = std::move(next);
    }
  }
  return out;
}

RowDiagonalization diagonalize_rows(std::vector<std::vector<mpz_class>> a) {
  RowDiagonalization out;
  out.rows = a.size();
  out.cols = out.rows ? a[0].size() : 0;
  out.left.assign(out.rows, std::vector<mpz_class>(out.rows, 0));
  for (std::size_t i = 0; i < out.rows; ++i) out.left[i][i] = 1;
  out.diag.assign(out.rows, 0);

  auto row_sub = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    // row_i -= q * row_j, in both A and the left transform
    for (std::size_t c = 0; c < out.cols; ++c) a[i][c] -= q * a[j][c];
    for (std::size_t c = 0; c < out.rows; ++c)
      out.left[i][c] -= q * out.left[j][c];
  };
  auto col_sub = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < out.rows; ++r) a[r][i] -= q * a[r][j];
  };

  std::size_t n = std::min(out.rows, out.cols);
  for (std::size_t pos = 0; pos < n; ++pos) {
    // Find a nonzero pivot of least absolute value in the corner.
    for (;;) {
      std::size_t bi = pos, bj = pos;
      bool found = false;
      for (std::size_t i = pos; i < out.rows; ++i)
        for (std::size_t j = pos; j < out.cols; ++j) {
          if (a[i][j] == 0) continue;
          if (!found || cmp(abs(a[i][j]), abs(a[bi][bj])) < 0) {
            bi = i;
            bj = j;
            found = true;
          }
        }
      if (!found) {
        pos = n;  // rest of the matrix is zero
        break;
      }
      if (bi != pos) {
        std::swap(a[bi], a[pos]);
        std::swap(out.left[bi], out.left[pos]);
      }
      if (bj != pos)
        for (std::size_t r = 0; r < out.rows; ++r)
          std::swap(a[r][bj], a[r][pos]);

      bool clean = true;
      for (std::size_t i = pos + 1; i < out.rows; ++i) {
        if (a[i][pos] == 0) continue;
        mpz_class q = a[i][pos] / a[pos][pos];
        if (q != 0) row_sub(i, pos, q);
        if (a[i][pos] != 0) clean = false;
      }
      for (std::size_t j = pos + 1; j < out.cols; ++j) {
        if (a[pos][j] == 0) continue;
        mpz_class q = a[pos][j] / a[pos][pos];
        if (q != 0) col_sub(j, pos, q);
        if (a[pos][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (pos >= n) break;
  }
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = a[i][i];
  return out;
}

FiltrationReport frobenius_filtration(const std::vector<RatFunc>& gens,
                                      const SUnitGroup& T, unsigned n_max) {
  std::uint32_t p = T.modulus();
  FiltrationReport out;

  std::vector<std::vector<mpz_class>> lattice;
  for (const auto& g : gens) {
    auto dec = s_unit_decompose(g, T);
    if (!dec)
      throw DomainError("generator is not a unit of the given place set: " +
                        g.str());
    lattice.push_back(dec->exponents);
    out.generators.push_back(std::move(*dec));
  }

  const std::size_t r = out.generators.size();
  RowDiagonalization d = diagonalize_rows(lattice);

  // Element of H for a coordinate vector y over the generators: the
  // constant part via c^y = c^(y mod p-1), the exponent part as y * M.
  auto element_for = [&](const std::vector<mpz_class>& y) {
    SUnitVector v;
    std::uint32_t cval = 1;
    if (p > 2) {
      for (std::size_t j = 0; j < r; ++j) {
        mpz_class e = y[j] % static_cast<unsigned long>(p - 1);
        if (e < 0) e += p - 1;
        cval = fp_mul(
            cval, Fp(out.generators[j].constant.v, p).pow(e.get_ui()).v, p);
      }
    }
    v.constant = Fp(cval, p);
    v.exponents.assign(T.rank(), 0);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t c = 0; c < T.rank(); ++c)
        v.exponents[c] += y[j] * lattice[j][c];
    return v;
  };

  for (unsigned n = 1; n <= n_max; ++n) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, n);
    FiltrationLevel level;
    level.n = n;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class mult = 1;
      if (d.diag[i] != 0) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.diag[i].get_mpz_t(), q.get_mpz_t());
        mult = q / g;
      }
      std::vector<mpz_class> y(r);
      for (std::size_t j = 0; j < r; ++j) y[j] = mult * d.left[i][j];
      SUnitVector el = element_for(y);
      if (el.is_constant() && el.constant.v == 1) continue;  // identity
      level.basis.push_back(std::move(el));
    }
    out.levels.push_back(std::move(level));
  }

  // The full intersection over all n: exponent vectors divisible by every
  // p^n are zero, so only the constants of H survive.  They are generated
  // by the kernel rows of the lattice.
  std::uint32_t gen = constants_generator(p);
  unsigned long long sub = p - 1;  // index step in F_p^*, start with trivial
  for (std::size_t i = 0; i < r; ++i) {
    if (d.diag[i] != 0) continue;
    SUnitVector el = element_for(d.left[i]);
    if (el.constant.v == 1) continue;
    // dlog of the constant with respect to the fixed generator
    unsigned long long dl = 0;
    Fp acc(1, p);
    while (acc.v != el.constant.v) {
      acc = acc * Fp(gen, p);
      ++dl;
    }
    sub = gcd_u64(sub, dl);
  }
  std::set<std::uint32_t> consts;
  if (p > 2 && sub < p - 1) {
    Fp step = Fp(gen, p).pow(sub);
    Fp acc(1, p);
    do {
      consts.insert(acc.v);
      acc = acc * step;
    } while (acc.v != 1);
  } else {
    consts.insert(1);
  }
  for (auto c : consts) out.intersection.push_back(Fp(c, p));
  out.intersection_is_torsion = true;
  return out;
}

}  // namespace fpt
