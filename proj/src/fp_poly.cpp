#include "fpt/fp_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace fpt {

namespace {

// Degrees below this may be handled through dense coefficient vectors.
constexpr unsigned long kDenseDegreeLimit = 1ul << 17;

bool fits_dense(const FpPoly& f, unsigned long limit = kDenseDegreeLimit) {
  auto d = f.degree();
  if (!d) return true;
  return d->fits_ulong_p() && d->get_ui() < limit;
}

std::vector<std::uint32_t> to_dense(const FpPoly& f) {
  auto d = f.degree();
  std::vector<std::uint32_t> v(d ? d->get_ui() + 1 : 0, 0);
  for (const auto& [e, c] : f.terms()) v[e.get_ui()] = c;
  return v;
}

FpPoly from_dense(std::uint32_t p, const std::vector<std::uint32_t>& v) {
  FpPoly r(p);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) r.add_term(mpz_class(static_cast<unsigned long>(i)), v[i]);
  return r;
}

}  // namespace

FpPoly FpPoly::constant(std::uint32_t p, long long c) {
  FpPoly r(p);
  long long m = c % static_cast<long long>(p);
  if (m < 0) m += p;
  if (m) r.terms_[0] = static_cast<std::uint32_t>(m);
  return r;
}

FpPoly FpPoly::monomial(std::uint32_t p, const mpz_class& e, long long c) {
  if (e < 0) throw DomainError("negative exponent in polynomial");
  FpPoly r(p);
  long long m = c % static_cast<long long>(p);
  if (m < 0) m += p;
  if (m) r.terms_[e] = static_cast<std::uint32_t>(m);
  return r;
}

bool FpPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

bool FpPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<mpz_class> FpPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::uint32_t FpPoly::leading_coeff() const {
  return terms_.empty() ? 0 : terms_.rbegin()->second;
}

std::uint32_t FpPoly::coeff(const mpz_class& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void FpPoly::add_term(const mpz_class& e, std::uint32_t c) {
  c %= p_;
  if (!c) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second = fp_add(it->second, c, p_);
    if (!it->second) terms_.erase(it);
  }
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  FpPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  FpPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, fp_neg(c, p_));
  return r;
}

FpPoly FpPoly::operator-() const {
  FpPoly r(p_);
  for (const auto& [e, c] : terms_) r.terms_[e] = fp_neg(c, p_);
  return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(p_);
  if (terms_.size() == 1) return o.shifted(terms_.begin()->first).scaled(terms_.begin()->second);
  if (o.terms_.size() == 1) return shifted(o.terms_.begin()->first).scaled(o.terms_.begin()->second);

  // Dense path when both operands are desk-size and dense enough that the
  // term-pair loop would lose.
  if (fits_dense(*this) && fits_dense(o)) {
    unsigned long da = degree()->get_ui(), db = o.degree()->get_ui();
    double dense_work = static_cast<double>(da + 1) * (db + 1);
    double sparse_work =
        8.0 * static_cast<double>(terms_.size()) * o.terms_.size();
    if (da + db < kDenseDegreeLimit && dense_work < sparse_work) {
      auto a = to_dense(*this), b = to_dense(o);
      std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
      }
      FpPoly r(p_);
      for (std::size_t k = 0; k < acc.size(); ++k) {
        std::uint32_t c = static_cast<std::uint32_t>(acc[k] % p_);
        if (c) r.terms_[mpz_class(static_cast<unsigned long>(k))] = c;
      }
      return r;
    }
  }

  FpPoly r(p_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      r.add_term(ea + eb, fp_mul(ca, cb, p_));
  return r;
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  c %= p_;
  if (!c) return FpPoly(p_);
  FpPoly r(p_);
  for (const auto& [e, v] : terms_) r.terms_[e] = fp_mul(v, c, p_);
  return r;
}

FpPoly FpPoly::shifted(const mpz_class& e) const {
  FpPoly r(p_);
  for (const auto& [ee, v] : terms_) r.terms_[ee + e] = v;
  return r;
}

FpPoly FpPoly::pow(unsigned long k) const {
  if (terms_.size() == 1) {  // single term: direct
    FpPoly r(p_);
    std::uint32_t c = 1, b = terms_.begin()->second;
    for (unsigned long e = k; e; e >>= 1) {
      if (e & 1) c = fp_mul(c, b, p_);
      b = fp_mul(b, b, p_);
    }
    r.terms_[terms_.begin()->first * k] = c;
    return r;
  }
  FpPoly r = one(p_), b = *this;
  while (k) {
    if (k & 1) r *= b;
    b = (k >>= 1) ? b * b : b;
  }
  return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  if (is_zero()) return {FpPoly(p_), FpPoly(p_)};
  if (d.is_constant())
    return {scaled(fp_inv(d.constant_coeff(), p_)), FpPoly(p_)};
  if (*degree() < *d.degree()) return {FpPoly(p_), *this};

  // Dense path: classic synthetic division.
  if (fits_dense(*this)) {
    auto a = to_dense(*this);
    auto b = to_dense(d);
    std::uint32_t lc_inv = fp_inv(b.back(), p_);
    std::vector<std::uint32_t> q(a.size() - b.size() + 1, 0);
    for (std::size_t i = a.size(); i-- >= b.size();) {
      if (!a[i]) {
        if (i + 1 == b.size()) break;
        continue;
      }
      std::uint32_t f = fp_mul(a[i], lc_inv, p_);
      std::size_t off = i - (b.size() - 1);
      q[off] = f;
      for (std::size_t j = 0; j < b.size(); ++j)
        a[off + j] = fp_sub(a[off + j], fp_mul(f, b[j], p_), p_);
      if (i + 1 == b.size()) break;
    }
    return {from_dense(p_, q), from_dense(p_, a)};
  }

  // Sparse long division; guard against explosive quotients.
  constexpr std::size_t kQuotientTermLimit = 1u << 22;
  FpPoly q(p_), r = *this;
  const mpz_class& dd = *d.degree();
  std::uint32_t lc_inv = fp_inv(d.leading_coeff(), p_);
  while (!r.is_zero() && *r.degree() >= dd) {
    mpz_class off = *r.degree() - dd;
    std::uint32_t f = fp_mul(r.leading_coeff(), lc_inv, p_);
    q.add_term(off, f);
    if (q.term_count() > kQuotientTermLimit)
      throw BoundExceeded("polynomial quotient too large");
    for (const auto& [e, c] : d.terms_)
      r.add_term(e + off, fp_neg(fp_mul(f, c, p_), p_));
  }
  return {q, r};
}

FpPoly FpPoly::mod_only(const FpPoly& d) const {
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  if (d.is_constant()) return FpPoly(p_);
  if (is_zero() || *degree() < *d.degree()) return *this;
  // Huge sparse dividend: reduce term by term through modpow, which costs
  // O(log e) products instead of materializing a quotient.
  if (!fits_dense(*this)) {
    FpPoly t = variable(p_), r(p_);
    for (const auto& [e, c] : terms_)
      r += modpow(t, e, d).scaled(c);
    return r;
  }
  return divmod(d).second;
}

FpPoly FpPoly::exact_div(const FpPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw DomainError("exact_div: division is not exact");
  return q;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(fp_inv(leading_coeff(), p_));
}

FpPoly FpPoly::modpow(const FpPoly& base, const mpz_class& e,
                      const FpPoly& modulus) {
  if (modulus.is_constant())
    throw DomainError("modpow requires a nonconstant modulus");
  if (e < 0) throw DomainError("modpow requires a nonnegative exponent");
  std::uint32_t p = base.modulus();
  FpPoly r = one(p), b = base.mod_only(modulus);
  for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    r = (r * r).mod_only(modulus);
    if (mpz_tstbit(e.get_mpz_t(), bit)) r = (r * b).mod_only(modulus);
  }
  return r;
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a.mod_only(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly FpPoly::inv_mod(const FpPoly& a, const FpPoly& m) {
  std::uint32_t p = a.modulus();
  FpPoly r0 = m, r1 = a.mod_only(m);
  FpPoly s0 = FpPoly::zero(p), s1 = FpPoly::one(p);
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    FpPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (!r0.is_constant() || r0.is_zero())
    throw DomainError("element is not invertible modulo " + m.str());
  return s0.scaled(fp_inv(r0.constant_coeff(), p)).mod_only(m);
}

FpPoly FpPoly::substitute_power(const mpz_class& k) const {
  if (k <= 0) throw DomainError("substitute_power requires k >= 1");
  FpPoly r(p_);
  for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
  return r;
}

std::uint32_t FpPoly::eval(std::uint32_t x) const {
  x %= p_;
  std::uint32_t acc = 0;
  for (const auto& [e, c] : terms_) {
    if (!e.fits_ulong_p()) throw BoundExceeded("eval: exponent too large");
    std::uint32_t xe = 1, b = x;
    for (unsigned long k = e.get_ui(); k; k >>= 1) {
      if (k & 1) xe = fp_mul(xe, b, p_);
      b = fp_mul(b, b, p_);
    }
    acc = fp_add(acc, fp_mul(c, xe, p_), p_);
  }
  return acc;
}

std::string FpPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const mpz_class& e = it->first;
    std::uint32_t c = it->second;
    if (e == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "t";
      if (e != 1) os << "^" << e.get_str();
    }
  }
  return os.str();
}

int FpPoly::cmp(const FpPoly& a, const FpPoly& b) {
  auto da = a.degree(), db = b.degree();
  if (!da || !db) {
    if (!da && !db) return 0;
    return !da ? -1 : 1;
  }
  if (*da != *db) return *da < *db ? -1 : 1;
  auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
  while (ia != a.terms_.rend() && ib != b.terms_.rend()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia, ++ib;
  }
  if (ia == a.terms_.rend() && ib == b.terms_.rend()) return 0;
  return ia == a.terms_.rend() ? -1 : 1;
}

}  // namespace fpt
