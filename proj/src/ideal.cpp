#include "fpt/ideal.hpp"

#include <algorithm>
#include <set>

namespace fpt {

namespace {

// Full multivariate division: the remainder has no term divisible by any
// leading monomial of the (monic) basis.  Deterministic; unique once the
// basis is a Groebner basis.
MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      MonomialOrder order) {
  std::uint32_t p = f.modulus();
  MultiPoly rem(p, f.nvars());
  MultiPoly work = f;
  while (!work.is_zero()) {
    auto [m, c] = work.leading_term(order);
    bool reduced = false;
    for (const auto& g : basis) {
      auto [gm, gc] = g.leading_term(order);
      if (!mono_divides(gm, m)) continue;
      work -= g.mul_term(mono_div(m, gm), c / gc);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(m, c);
      work.add_term(m, -c);
    }
  }
  return rem;
}

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g, MonomialOrder order) {
  auto [fm, fc] = f.leading_term(order);
  auto [gm, gc] = g.leading_term(order);
  Monomial l = mono_lcm(fm, gm);
  return f.mul_term(mono_div(l, fm), fc.inverse()) -
         g.mul_term(mono_div(l, gm), gc.inverse());
}

}  // namespace

std::vector<MultiPoly> reduced_groebner_basis(std::vector<MultiPoly> gens,
                                              MonomialOrder order) {
  std::vector<MultiPoly> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    auto [m, c] = g.leading_term(order);
    basis.push_back(g.scaled(c.inverse()));
  }
  if (basis.empty()) return basis;

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

  while (!pending.empty()) {
    auto [i, j] = *pending.begin();
    pending.erase(pending.begin());
    Monomial mi = basis[i].leading_term(order).first;
    Monomial mj = basis[j].leading_term(order).first;
    // Buchberger's coprimality criterion.
    if (mono_lcm(mi, mj) == mono_mul(mi, mj)) continue;
    MultiPoly r = reduce_full(s_poly(basis[i], basis[j], order), basis, order);
    if (r.is_zero()) continue;
    auto [m, c] = r.leading_term(order);
    basis.push_back(r.scaled(c.inverse()));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k)
      pending.insert({k, basis.size() - 1});
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Monomial mi = basis[i].leading_term(order).first;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Monomial mj = basis[j].leading_term(order).first;
      if (mono_divides(mj, mi) && (mj != mi || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Inter-reduce tails until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MultiPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MultiPoly r = reduce_full(minimal[i], others, order);
      if (r != minimal[i]) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + i);
          --i;
        } else {
          minimal[i] = r.scaled(r.leading_term(order).second.inverse());
        }
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(),
            [order](const MultiPoly& a, const MultiPoly& b) {
              return mono_cmp(a.leading_term(order).first,
                              b.leading_term(order).first, order) < 0;
            });
  return minimal;
}

PolyIdeal::PolyIdeal(std::uint32_t p, std::size_t nvars,
                     std::vector<MultiPoly> gens, MonomialOrder order)
    : p_((require_prime(p), p)),
      nvars_(nvars),
      order_(order),
      gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (g.modulus() != p_) throw DomainError("generator modulus mismatch");
    if (g.nvars() != nvars_)
      throw DomainError("generator variable count mismatch");
  }
}

const std::vector<MultiPoly>& PolyIdeal::groebner_basis() const {
  std::call_once(cache_->flag, [this] {
    cache_->basis = reduced_groebner_basis(gens_, order_);
  });
  return cache_->basis;
}

MultiPoly normal_form(const MultiPoly& f, const PolyIdeal& I) {
  if (f.nvars() != I.nvars()) throw DomainError("variable count mismatch");
  return reduce_full(f, I.groebner_basis(), I.order());
}

bool ideal_contains(const PolyIdeal& I, const MultiPoly& f) {
  return normal_form(f, I).is_zero();
}

bool ideal_equal(const PolyIdeal& I, const PolyIdeal& J) {
  return I.groebner_basis() == J.groebner_basis();
}

DClosureResult is_pm_rational(const PolyIdeal& I, unsigned m,
                              bool reduced_test_set, unsigned long bound) {
  std::uint32_t p = I.modulus();
  unsigned long q = checked_power(p, m, bound);
  const auto& basis = I.groebner_basis();
  DClosureResult out;
  out.closed = true;

  if (reduced_test_set) {
    // Prime-power indices only, each applied up to p-1 times; enough by the
    // unit-factorization of D^(i) into powers of the D^(p^n).
    unsigned long pn = 1;
    for (unsigned n = 0; n < m; ++n, pn *= p) {
      for (const auto& g : basis) {
        MultiPoly h = g;
        for (std::uint32_t a = 1; a <= p - 1; ++a) {
          h = hasse_derive_multi(pn, h);
          if (h.is_zero()) break;
          MultiPoly r = normal_form(h, I);
          if (!r.is_zero()) {
            out.closed = false;
            out.witnesses.push_back({pn, g, r});
            break;
          }
        }
      }
    }
    return out;
  }

  for (const auto& g : basis) {
    // One derivation table per coefficient covers the whole index sweep.
    std::vector<std::pair<Monomial, std::vector<RatFunc>>> tables;
    for (const auto& [mono, c] : g.terms())
      tables.emplace_back(mono, hasse_derive_table(c, q - 1));
    for (unsigned long i = 1; i < q; ++i) {
      MultiPoly dg(p, I.nvars());
      for (const auto& [mono, tab] : tables) dg.add_term(mono, tab[i]);
      if (dg.is_zero()) continue;
      MultiPoly r = normal_form(dg, I);
      if (!r.is_zero()) {
        out.closed = false;
        out.witnesses.push_back({i, g, r});
      }
    }
  }
  return out;
}

std::vector<MultiPoly> descend_generators(const PolyIdeal& I, unsigned m,
                                          unsigned long bound) {
  DClosureResult check = is_pm_rational(I, m, false, bound);
  if (!check.closed)
    throw NotDClosed("ideal is not stable under D^(i) for i < p^m");

  std::uint32_t p = I.modulus();
  std::vector<MultiPoly> out;
  for (const auto& f : I.groebner_basis()) {
    MultiPoly work = f;
    // Each pass projects every coefficient into K^(p^m); the leading term
    // survives (Delta_m fixes 1 after making work monic) and cancels in
    // work - g, so the loop walks strictly down the monomial order.
    while (!work.is_zero()) {
      auto [lm, lc] = work.leading_term(I.order());
      work = work.scaled(lc.inverse());
      MultiPoly g(p, I.nvars());
      for (const auto& [mono, c] : work.terms())
        g.add_term(mono, delta_m(c, m, bound));
      out.push_back(g);
      work -= g;
      if (!work.is_zero() &&
          mono_cmp(work.leading_term(I.order()).first, lm, I.order()) >= 0)
        throw std::logic_error("descend loop failed to drop the leading term");
    }
  }

  // The emitted generators must have p^m-th power coefficients by
  // construction; verify and deduplicate.
  std::vector<MultiPoly> unique;
  for (const auto& g : out) {
    for (const auto& [mono, c] : g.terms())
      if (!pm_power_root(c, m))
        throw std::logic_error("descended coefficient is not a p^m-th power");
    if (std::find(unique.begin(), unique.end(), g) == unique.end())
      unique.push_back(g);
  }
  return unique;
}

PolyIdeal intersect_ideals(const PolyIdeal& I, const PolyIdeal& J) {
  if (I.modulus() != J.modulus() || I.nvars() != J.nvars())
    throw DomainError("ideal intersection needs matching rings");
  std::uint32_t p = I.modulus();
  std::size_t nv = I.nvars() + 1;

  MultiPoly w = MultiPoly::variable(p, nv, 0);
  MultiPoly one_minus_w =
      MultiPoly::constant(p, nv, RatFunc::one(p)) - w;
  std::vector<MultiPoly> gens;
  for (const auto& f : I.generators())
    gens.push_back(w * f.with_var_prepended());
  for (const auto& g : J.generators())
    gens.push_back(one_minus_w * g.with_var_prepended());

  PolyIdeal aux(p, nv, std::move(gens), MonomialOrder::ElimFirst);
  std::vector<MultiPoly> kept;
  for (const auto& b : aux.groebner_basis())
    if (!b.uses_first_var()) kept.push_back(b.with_first_var_dropped());
  return PolyIdeal(p, I.nvars(), std::move(kept), I.order());
}

PolyIdeal vanishing_ideal(const std::vector<std::vector<RatFunc>>& points,
                          std::size_t nvars, MonomialOrder order) {
  if (points.empty()) throw DomainError("vanishing_ideal needs >= 1 point");
  std::uint32_t p = points[0][0].modulus();

  auto point_ideal = [&](const std::vector<RatFunc>& pt) {
    if (pt.size() != nvars)
      throw DomainError("point has wrong coordinate count");
    bool nonzero = false;
    for (const auto& c : pt) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw DomainError("projective point must be nonzero");
    std::vector<MultiPoly> minors;
    for (std::size_t i = 0; i < nvars; ++i)
      for (std::size_t j = i + 1; j < nvars; ++j) {
        MultiPoly f = MultiPoly::variable(p, nvars, i).scaled(pt[j]) -
                      MultiPoly::variable(p, nvars, j).scaled(pt[i]);
        if (!f.is_zero()) minors.push_back(std::move(f));
      }
    return PolyIdeal(p, nvars, std::move(minors), order);
  };

  PolyIdeal acc = point_ideal(points[0]);
  for (std::size_t k = 1; k < points.size(); ++k)
    acc = intersect_ideals(acc, point_ideal(points[k]));
  return acc;
}

}  // namespace fpt
