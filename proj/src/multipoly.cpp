#include "fpt/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "fpt/hasse.hpp"

namespace fpt {

unsigned long mono_total_degree(const Monomial& m) {
  unsigned long d = 0;
  for (auto e : m) d += e;
  return d;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case MonomialOrder::Grevlex: {
      unsigned long da = mono_total_degree(a), db = mono_total_degree(b);
      if (da != db) return da < db ? -1 : 1;
      // larger = smaller exponent at the last index where they differ
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    }
    case MonomialOrder::ElimFirst: {
      if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
      unsigned long da = 0, db = 0;
      for (std::size_t i = 1; i < a.size(); ++i) da += a[i], db += b[i];
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t i = a.size(); i-- > 1;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

std::string mono_str(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!first) os << "*";
    first = false;
    os << "X" << i;
    if (m[i] != 1) os << "^" << m[i];
  }
  return os.str();
}

MultiPoly MultiPoly::constant(std::uint32_t p, std::size_t nvars,
                              const RatFunc& c) {
  MultiPoly r(p, nvars);
  if (!c.is_zero()) r.terms_[Monomial(nvars, 0)] = c;
  return r;
}

MultiPoly MultiPoly::variable(std::uint32_t p, std::size_t nvars,
                              std::size_t index) {
  Monomial m(nvars, 0);
  m.at(index) = 1;
  return term(p, nvars, m, RatFunc::one(p));
}

MultiPoly MultiPoly::term(std::uint32_t p, std::size_t nvars, Monomial m,
                          const RatFunc& c) {
  MultiPoly r(p, nvars);
  if (!c.is_zero()) r.terms_[std::move(m)] = c;
  return r;
}

bool MultiPoly::is_coefficient() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          mono_total_degree(terms_.begin()->first) == 0);
}

RatFunc MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it != terms_.end() ? it->second : RatFunc::zero(p_);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned long d = mono_total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (mono_total_degree(m) != d) return false;
  return true;
}

unsigned long MultiPoly::total_degree() const {
  unsigned long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m));
  return d;
}

void MultiPoly::add_term(const Monomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(p_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(p_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

MultiPoly MultiPoly::scaled(const RatFunc& c) const {
  MultiPoly r(p_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const RatFunc& c) const {
  MultiPoly r(p_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [mm, v] : terms_) r.terms_[mono_mul(mm, m)] = v * c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned long k) const {
  MultiPoly r = constant(p_, nvars_, RatFunc::one(p_));
  MultiPoly b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = (k >>= 1) ? b * b : b;
  }
  return r;
}

std::pair<Monomial, RatFunc> MultiPoly::leading_term(
    MonomialOrder order) const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (mono_cmp(it->first, best->first, order) > 0) best = it;
  return {best->first, best->second};
}

MultiPoly MultiPoly::with_var_prepended() const {
  MultiPoly r(p_, nvars_ + 1);
  for (const auto& [m, c] : terms_) {
    Monomial mm(nvars_ + 1, 0);
    std::copy(m.begin(), m.end(), mm.begin() + 1);
    r.terms_[std::move(mm)] = c;
  }
  return r;
}

MultiPoly MultiPoly::with_first_var_dropped() const {
  MultiPoly r(p_, nvars_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m[0]) throw DomainError("polynomial still uses the variable X0");
    r.terms_[Monomial(m.begin() + 1, m.end())] = c;
  }
  return r;
}

bool MultiPoly::uses_first_var() const {
  for (const auto& [m, c] : terms_)
    if (m[0]) return true;
  return false;
}

MultiPoly MultiPoly::resized(std::size_t nvars) const {
  MultiPoly r(p_, nvars);
  for (const auto& [m, c] : terms_) {
    Monomial mm(nvars, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] && i >= nvars)
        throw DomainError("resized: variable X" + std::to_string(i) +
                          " out of range");
      if (i < nvars) mm[i] = m[i];
    }
    r.terms_[std::move(mm)] = c;
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  // Print in descending grevlex order for stable output.
  std::vector<const std::pair<const Monomial, RatFunc>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    return mono_cmp(a->first, b->first, MonomialOrder::Grevlex) > 0;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    if (!first) os << " + ";
    first = false;
    const std::string ms = mono_str(t->first);
    if (ms.empty()) {
      os << t->second.str();
      continue;
    }
    if (t->second.is_one()) {
      os << ms;
      continue;
    }
    std::string cs = t->second.str();
    // A multi-term numerator needs parentheses in front of "*X...".
    bool wrap = t->second.num().term_count() > 1 && t->second.den().is_one();
    if (wrap)
      os << "(" << cs << ")";
    else
      os << cs;
    os << "*" << ms;
  }
  return os.str();
}

MultiPoly hasse_derive_multi(unsigned long i, const MultiPoly& f) {
  if (i == 0) return f;
  MultiPoly r(f.modulus(), f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(m, hasse_derive(i, c));
  return r;
}

}  // namespace fpt
