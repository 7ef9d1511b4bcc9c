#include "fpt/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "fpt/irreducible.hpp"

namespace fpt {

namespace {

// Strictly increasing over the finite entries; +infinity rows are exact
// hits and do not break monotonicity.
bool increasing_profile(const std::vector<Valuation>& vals) {
  const mpz_class* last = nullptr;
  for (const auto& v : vals) {
    if (v.is_infinite()) continue;
    if (last && !(*last < v.value())) return false;
    last = &v.value();
  }
  return true;
}

std::string fmt_row_place(const Place& v) { return v.str(); }

}  // namespace

std::string ConvergenceReport::table() const {
  std::ostringstream os;
  os << "sequence " << sequence_id << " over F_" << p << "(t)\n";
  for (const auto& [k, v] : parameters) os << "  " << k << " = " << v << "\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  os << "\n";
  std::size_t wp = 5;
  for (const auto& r : rows) wp = std::max(wp, fmt_row_place(r.place).size());
  os << "  " << std::setw(3) << "n"
     << "  " << std::setw(static_cast<int>(wp)) << "place"
     << "  " << std::setw(16) << "difference"
     << "  valuation\n";
  for (const auto& r : rows) {
    os << "  " << std::setw(3) << r.n << "  "
       << std::setw(static_cast<int>(wp)) << fmt_row_place(r.place) << "  "
       << std::setw(16) << r.target << "  " << r.val.str() << "\n";
  }
  os << "\n";
  for (const auto& v : verdicts)
    os << "  [" << (v.ok ? "ok" : "FAIL") << "] " << fmt_row_place(v.place)
       << ": " << v.text << "\n";
  os << "\nverdict: " << overall << "\n";
  return os.str();
}

nlohmann::json ConvergenceReport::json() const {
  nlohmann::json j;
  j["sequence"] = sequence_id;
  j["p"] = p;
  j["parameters"] = parameters;
  j["notes"] = notes;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["n"] = r.n;
    row["place"] = r.place.str();
    row["difference"] = r.target;
    row["valuation"] = r.val.str();
    j["rows"].push_back(row);
  }
  j["verdicts"] = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json jv;
    jv["place"] = v.place.str();
    jv["ok"] = v.ok;
    jv["text"] = v.text;
    j["verdicts"].push_back(jv);
  }
  j["all_ok"] = all_ok;
  j["verdict"] = overall;
  return j;
}

ConvergenceReport run_exm0(std::uint32_t p, const FpPoly& a, const FpPoly& b,
                           const RatFunc& alpha, unsigned n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  SequenceSpec seq = SequenceSpec::exm0(p, a, b, alpha);
  RatFunc beta = alpha + RatFunc(a, b);

  ConvergenceReport rep;
  rep.sequence_id = "exm0";
  rep.p = p;
  rep.parameters["a"] = a.str();
  rep.parameters["b"] = b.str();
  rep.parameters["alpha"] = alpha.str();
  rep.parameters["beta"] = beta.str();
  rep.parameters["n_max"] = std::to_string(n_max);

  std::vector<FpPoly> pis = irreducibles(p, n_max);
  std::vector<Place> fin;
  for (const auto& pi : pis) fin.push_back(Place::finite(pi));
  Place inf = Place::infinity(p);

  std::vector<std::vector<Valuation>> fin_profile(n_max);
  std::vector<Valuation> inf_profile;
  for (unsigned n = 1; n <= n_max; ++n) {
    RatFunc xn = seq.term(n);
    RatFunc db = xn - beta;
    for (unsigned j = 1; j <= n; ++j) {
      Valuation v = valuation(db, fin[j - 1]);
      fin_profile[j - 1].push_back(v);
      rep.rows.push_back({n, fin[j - 1], "x_n - beta", v});
    }
    Valuation vi = valuation(xn - alpha, inf);
    inf_profile.push_back(vi);
    rep.rows.push_back({n, inf, "x_n - alpha", vi});
  }

  bool all = true;
  for (unsigned j = 1; j <= n_max; ++j) {
    // Rows for place pi_j start at n = j; require valuation >= n throughout
    // and a strictly increasing profile.
    bool ok = increasing_profile(fin_profile[j - 1]);
    for (std::size_t idx = 0; idx < fin_profile[j - 1].size(); ++idx) {
      unsigned n = j + static_cast<unsigned>(idx);
      if (fin_profile[j - 1][idx] < Valuation::of(n)) ok = false;
    }
    all = all && ok;
    rep.verdicts.push_back(
        {fin[j - 1], ok,
         ok ? "x_n -> beta (valuations >= n, strictly increasing)"
            : "profile does not certify convergence to beta"});
  }
  bool ok_inf = increasing_profile(inf_profile);
  all = all && ok_inf;
  rep.verdicts.push_back(
      {inf, ok_inf,
       ok_inf ? "x_n -> alpha (strictly increasing valuations)"
              : "profile does not certify convergence to alpha"});
  rep.all_ok = all;
  rep.overall = all ? "converges to beta at finite places, to alpha at infinity"
                    : "convergence not certified by this profile";
  return rep;
}

ConvergenceReport run_exm1(std::uint32_t p, unsigned n_max,
                           const std::vector<Place>& places) {
  require_prime(p);
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (n_max > 4)
    throw BoundExceeded("exm1 is capped at n_max = 4 (factorial exponents)");
  SequenceSpec seq = SequenceSpec::exm1(p);

  FpPoly t_minus_1 =
      FpPoly::variable(p) + FpPoly::constant(p, static_cast<long long>(p) - 1);
  Place special = Place::finite(t_minus_1);

  std::vector<Place> all_places = places;
  bool have_special = false;
  for (const auto& v : all_places) {
    if (v.is_infinity() || (!v.is_infinity() && v.poly() == FpPoly::variable(p)))
      throw DomainError("exm1 requires t to be a unit at every place: " +
                        v.str());
    if (v == special) have_special = true;
  }
  if (!have_special) all_places.push_back(special);
  std::sort(all_places.begin(), all_places.end());
  all_places.erase(std::unique(all_places.begin(), all_places.end()),
                   all_places.end());

  ConvergenceReport rep;
  rep.sequence_id = "exm1";
  rep.p = p;
  rep.parameters["n_max"] = std::to_string(n_max);
  rep.parameters["special_place"] = special.str();
  if (p == 2)
    rep.notes.push_back(
        "characteristic 2: the place of t-1 is the place of t+1");

  // Factorials and exponents fit comfortably for n_max <= 4.
  auto factorial = [](unsigned n) {
    unsigned long f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
  };

  bool all = true;
  RatFunc one = RatFunc::one(p);
  for (const auto& v : all_places) {
    std::vector<Valuation> cauchy, to_one;
    for (unsigned n = 1; n + 1 <= n_max; ++n) {
      // y_{n+1} - y_n = (t^(p^(n * n!)) - t)^(p^(n!)): the valuation is
      // p^(n!) times the valuation of the two-term inner polynomial.
      mpz_class inner_exp;
      mpz_ui_pow_ui(inner_exp.get_mpz_t(), p, n * factorial(n));
      FpPoly inner = FpPoly::monomial(p, inner_exp) -
                     FpPoly::variable(p);
      Valuation vi = ord_at(inner, v);
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), p, factorial(n));
      Valuation val = vi.is_infinite() ? Valuation::infinite()
                                       : Valuation::of(vi.value() * scale);
      cauchy.push_back(val);
      rep.rows.push_back({n, v, "y_(n+1) - y_n", val});
    }
    for (unsigned n = 1; n <= n_max; ++n) {
      Valuation val = valuation(seq.term(n) - one, v);
      to_one.push_back(val);
      rep.rows.push_back({n, v, "y_n - 1", val});
    }

    bool cauchy_ok = increasing_profile(cauchy);
    if (v == special) {
      bool inc = increasing_profile(to_one);
      bool ok = cauchy_ok && inc;
      all = all && ok;
      rep.verdicts.push_back(
          {v, ok,
           ok ? "Cauchy; y_n -> 1 at this special place"
              : "profile does not certify the special-place limit"});
    } else {
      bool bounded = !to_one.empty() && !to_one.back().is_infinite() &&
                     to_one.back() <= to_one.front();
      bool ok = cauchy_ok && bounded;
      all = all && ok;
      rep.verdicts.push_back(
          {v, ok,
           ok ? "Cauchy; limit stays away from 1"
              : "profile does not certify Cauchy behavior"});
    }
  }
  rep.all_ok = all;
  rep.overall =
      all ? "Cauchy at every listed place; the limit is 1 exactly at the "
            "special place"
          : "profile not certified";
  return rep;
}

}  // namespace fpt
