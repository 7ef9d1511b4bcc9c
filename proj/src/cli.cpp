#include "fpt/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpt/ideal.hpp"
#include "fpt/irreducible.hpp"
#include "fpt/parse.hpp"
#include "fpt/report.hpp"
#include "fpt/sunit.hpp"
#include "fpt/valuation.hpp"

namespace fpt {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  std::vector<std::string> trimmed;
  for (auto& piece : out) {
    std::size_t a = piece.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    std::size_t b = piece.find_last_not_of(" \t\r\n");
    trimmed.push_back(piece.substr(a, b - a + 1));
  }
  return trimmed;
}

std::vector<Place> parse_places(const std::string& list, std::uint32_t p) {
  std::vector<Place> out;
  for (const auto& s : split_list(list, ',')) out.push_back(Place::parse(s, p));
  return out;
}

json witnesses_json(const DClosureResult& res) {
  json w = json::array();
  for (const auto& x : res.witnesses) {
    json e;
    e["i"] = x.index;
    e["basis_element"] = x.basis_element.str();
    e["normal_form"] = x.remainder.str();
    w.push_back(e);
  }
  return w;
}

json certificate_json(const CspCertificate& cert) {
  json c;
  c["quotient_size"] = cert.quotient_size;
  c["places"] = json::array();
  for (const auto& step : cert.places) {
    json s;
    s["place"] = step.place.str();
    s["image_matrix"] = step.image_matrix;
    s["kernel_after"] = step.kernel_after;
    c["places"].push_back(s);
  }
  return c;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact computational algebra over the rational function field "
               "F_p(t)"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of tables");

  struct {
    std::uint32_t p = 2;
    unsigned long i = 0;
    unsigned m = 1;
    unsigned long bound = kDefaultDeltaBound;
    unsigned n_max = 1;
    unsigned long deg_bound = 8;
    std::string expr, file1, file2, points, places, gens, T;
    std::string a, b, alpha;
    std::string lucas_i, lucas_j;
    std::uint32_t lucas_p = 2;
    bool reduced_test = false;
    long nvars = -1;
  } o;

  auto* derive = app.add_subcommand("derive", "apply the derivation D^(i)");
  derive->add_option("-p", o.p, "field characteristic")->required();
  derive->add_option("-i", o.i, "derivation index")->required();
  derive->add_option("expr", o.expr, "field element")->required();

  auto* delta = app.add_subcommand("delta", "apply the projection Delta_m");
  delta->add_option("-p", o.p)->required();
  delta->add_option("-m", o.m)->required();
  delta->add_option("--bound", o.bound, "cap on p^m");
  delta->add_option("expr", o.expr)->required();

  auto* lucas = app.add_subcommand("lucas", "binomial coefficient mod p");
  lucas->add_option("i", o.lucas_i)->required();
  lucas->add_option("j", o.lucas_j)->required();
  lucas->add_option("p", o.lucas_p)->required();

  auto* pmroot = app.add_subcommand("pm-root", "p^m-th root, if one exists");
  pmroot->add_option("-p", o.p)->required();
  pmroot->add_option("-m", o.m)->required();
  pmroot->add_option("expr", o.expr)->required();

  auto* irat = app.add_subcommand("ideal-rational",
                                  "test the D-closure criterion for an ideal");
  irat->add_option("-p", o.p)->required();
  irat->add_option("-m", o.m)->required();
  irat->add_flag("--reduced-test", o.reduced_test,
                 "use only prime-power derivation indices");
  irat->add_option("file", o.file1, "generators, one per line")->required();

  auto* idesc = app.add_subcommand(
      "ideal-descend", "rewrite generators with p^m-th power coefficients");
  idesc->add_option("-p", o.p)->required();
  idesc->add_option("-m", o.m)->required();
  idesc->add_option("file", o.file1)->required();

  auto* iint = app.add_subcommand("ideal-intersect", "intersect two ideals");
  iint->add_option("-p", o.p)->required();
  iint->add_option("file1", o.file1)->required();
  iint->add_option("file2", o.file2)->required();

  auto* vanish = app.add_subcommand("vanishing",
                                    "homogeneous ideal of projective points");
  vanish->add_option("-p", o.p)->required();
  vanish->add_option("-N", o.nvars, "number of coordinates");
  vanish->add_option("points", o.points, "e.g. \"[t^2:1];[0:1]\"")->required();

  auto* csp = app.add_subcommand("csp-search",
                                 "congruence-subgroup witness places");
  csp->add_option("-p", o.p)->required();
  csp->add_option("-m", o.m)->required();
  csp->add_option("--T", o.T, "comma-separated places generating O_T^*")
      ->required();
  csp->add_option("--deg-bound", o.deg_bound, "candidate degree cap");

  auto* filt = app.add_subcommand("filtration",
                                  "Frobenius power filtration of a subgroup");
  filt->add_option("-p", o.p)->required();
  filt->add_option("--gens", o.gens, "comma-separated generators")->required();
  filt->add_option("--T", o.T, "place set (default: inferred from gens)");
  filt->add_option("--n-max", o.n_max)->required();

  auto* exm0 = app.add_subcommand("exm0", "convergence demo 0");
  exm0->add_option("-p", o.p)->required();
  exm0->add_option("-a", o.a, "polynomial a")->required();
  exm0->add_option("-b", o.b, "polynomial b")->required();
  exm0->add_option("--alpha", o.alpha, "nonzero field element")->required();
  exm0->add_option("--n-max", o.n_max)->required();

  auto* exm1 = app.add_subcommand("exm1", "convergence demo 1");
  exm1->add_option("-p", o.p)->required();
  exm1->add_option("--n-max", o.n_max)->required();
  exm1->add_option("--places", o.places,
                   "comma-separated places with t a unit (default: small "
                   "built-in set)");

  std::vector<const char*> argv;
  std::string prog = "fpt";
  argv.push_back(prog.c_str());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e, out, err);
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (derive->parsed()) {
      RatFunc r = parse_ratfunc(o.expr, o.p);
      RatFunc d = hasse_derive(o.i, r);
      if (as_json) {
        json j{{"input", r.str()}, {"i", o.i}, {"result", d.str()}};
        out << j.dump(2) << "\n";
      } else {
        out << "D^(" << o.i << ")(" << r.str() << ") = " << d.str() << "\n";
      }
      return 0;
    }

    if (delta->parsed()) {
      RatFunc c = parse_ratfunc(o.expr, o.p);
      RatFunc d = delta_m(c, o.m, o.bound);
      auto root = pm_power_root(d, o.m);
      if (!root)
        throw std::logic_error("Delta_m result is not a p^m-th power");
      if (as_json) {
        json j{{"input", c.str()},
               {"m", o.m},
               {"result", d.str()},
               {"root", root->str()}};
        out << j.dump(2) << "\n";
      } else {
        out << "Delta_" << o.m << "(" << c.str() << ") = " << d.str()
            << " = (" << root->str() << ")^" << o.p << "^" << o.m << "\n";
      }
      return 0;
    }

    if (lucas->parsed()) {
      mpz_class i(o.lucas_i), j(o.lucas_j);
      Fp v = lucas_binom(i, j, o.lucas_p);
      if (as_json) {
        json jj{{"i", o.lucas_i},
                {"j", o.lucas_j},
                {"p", o.lucas_p},
                {"value", v.v}};
        out << jj.dump(2) << "\n";
      } else {
        out << "C(" << o.lucas_i << ", " << o.lucas_j << ") mod "
            << o.lucas_p << " = " << v.v << "\n";
      }
      return 0;
    }

    if (pmroot->parsed()) {
      RatFunc c = parse_ratfunc(o.expr, o.p);
      auto root = pm_power_root(c, o.m);
      if (as_json) {
        json j{{"input", c.str()}, {"m", o.m}, {"is_power", bool(root)}};
        j["root"] = root ? json(root->str()) : json(nullptr);
        out << j.dump(2) << "\n";
      } else if (root) {
        out << c.str() << " = (" << root->str() << ")^" << o.p << "^" << o.m
            << "\n";
      } else {
        out << c.str() << " is not a p^" << o.m << "-th power\n";
      }
      return root ? 0 : 1;
    }

    if (irat->parsed()) {
      auto gens = parse_ideal_lines(read_file(o.file1), o.p);
      if (gens.empty()) throw DomainError("ideal file has no generators");
      PolyIdeal I(o.p, gens[0].nvars(), gens);
      DClosureResult res = is_pm_rational(I, o.m, o.reduced_test);
      if (as_json) {
        json j{{"m", o.m},
               {"rational", res.closed},
               {"witnesses", witnesses_json(res)}};
        out << j.dump(2) << "\n";
      } else if (res.closed) {
        out << "ideal is generated over K^(p^" << o.m << ")\n";
      } else {
        out << "ideal is NOT generated over K^(p^" << o.m << ")\n";
        for (const auto& w : res.witnesses)
          out << "  witness: D^(" << w.index << ")(" << w.basis_element.str()
              << ") has normal form " << w.remainder.str() << "\n";
      }
      return 0;
    }

    if (idesc->parsed()) {
      auto gens = parse_ideal_lines(read_file(o.file1), o.p);
      if (gens.empty()) throw DomainError("ideal file has no generators");
      PolyIdeal I(o.p, gens[0].nvars(), gens);
      auto desc = descend_generators(I, o.m);
      if (as_json) {
        json j;
        j["m"] = o.m;
        j["generators"] = json::array();
        for (const auto& g : desc) j["generators"].push_back(g.str());
        out << j.dump(2) << "\n";
      } else {
        for (const auto& g : desc) out << g.str() << "\n";
      }
      return 0;
    }

    if (iint->parsed()) {
      auto g1 = parse_ideal_lines(read_file(o.file1), o.p);
      auto g2 = parse_ideal_lines(read_file(o.file2), o.p);
      if (g1.empty() || g2.empty())
        throw DomainError("ideal file has no generators");
      std::size_t nv = std::max(g1[0].nvars(), g2[0].nvars());
      for (auto& g : g1) g = g.resized(nv);
      for (auto& g : g2) g = g.resized(nv);
      PolyIdeal I(o.p, nv, g1), J(o.p, nv, g2);
      PolyIdeal K = intersect_ideals(I, J);
      if (as_json) {
        json j;
        j["generators"] = json::array();
        for (const auto& g : K.groebner_basis())
          j["generators"].push_back(g.str());
        out << j.dump(2) << "\n";
      } else {
        for (const auto& g : K.groebner_basis()) out << g.str() << "\n";
      }
      return 0;
    }

    if (vanish->parsed()) {
      auto pts = parse_point_list(o.points, o.p);
      if (pts.empty()) throw DomainError("no points given");
      std::size_t nv = o.nvars > 0 ? static_cast<std::size_t>(o.nvars)
                                   : pts[0].size();
      PolyIdeal I = vanishing_ideal(pts, nv);
      if (as_json) {
        json j;
        j["generators"] = json::array();
        for (const auto& g : I.groebner_basis())
          j["generators"].push_back(g.str());
        out << j.dump(2) << "\n";
      } else {
        for (const auto& g : I.groebner_basis()) out << g.str() << "\n";
      }
      return 0;
    }

    if (csp->parsed()) {
      SUnitGroup T(o.p, parse_places(o.T, o.p));
      CspResult res = csp_witness_search(T, o.m, o.deg_bound);
      if (as_json) {
        json j;
        j["S"] = json::array();
        for (const auto& v : res.S) j["S"].push_back(v.str());
        j["certificate"] = certificate_json(res.certificate);
        out << j.dump(2) << "\n";
      } else {
        out << "quotient size " << res.certificate.quotient_size << "\n";
        out << "S = {";
        for (std::size_t i = 0; i < res.S.size(); ++i)
          out << (i ? ", " : "") << res.S[i].str();
        out << "}\n";
        for (const auto& s : res.certificate.places) {
          out << "  " << s.place.str() << ": images (";
          for (std::size_t i = 0; i < s.image_matrix.size(); ++i)
            out << (i ? ", " : "") << s.image_matrix[i];
          out << "), kernel size " << s.kernel_after << "\n";
        }
      }
      return 0;
    }

    if (filt->parsed()) {
      std::vector<RatFunc> gens;
      for (const auto& s : split_list(o.gens, ','))
        gens.push_back(parse_ratfunc(s, o.p));
      std::vector<Place> T_places;
      if (!o.T.empty()) {
        T_places = parse_places(o.T, o.p);
      } else {
        // Infer T from the factorizations of the generators.
        T_places.push_back(Place::infinity(o.p));
        for (const auto& g : gens) {
          for (const auto& [pi, mult] :
               factor_by_trial_division(g.num()).factors)
            T_places.push_back(Place::finite(pi));
          for (const auto& [pi, mult] :
               factor_by_trial_division(g.den()).factors)
            T_places.push_back(Place::finite(pi));
        }
      }
      SUnitGroup T(o.p, T_places);
      FiltrationReport rep = frobenius_filtration(gens, T, o.n_max);
      if (as_json) {
        json j;
        j["generators"] = json::array();
        for (const auto& g : rep.generators)
          j["generators"].push_back(g.str(T));
        j["levels"] = json::array();
        for (const auto& lv : rep.levels) {
          json l;
          l["n"] = lv.n;
          l["basis"] = json::array();
          for (const auto& b : lv.basis) l["basis"].push_back(b.str(T));
          j["levels"].push_back(l);
        }
        j["intersection"] = json::array();
        for (const auto& c : rep.intersection)
          j["intersection"].push_back(c.v);
        j["intersection_is_torsion"] = rep.intersection_is_torsion;
        out << j.dump(2) << "\n";
      } else {
        out << "H generated by:";
        for (const auto& g : rep.generators) out << " " << g.str(T) << ";";
        out << "\n";
        for (const auto& lv : rep.levels) {
          out << "U_" << lv.n << " generated by {";
          for (std::size_t i = 0; i < lv.basis.size(); ++i)
            out << (i ? ", " : "") << lv.basis[i].str(T);
          out << "}\n";
        }
        out << "intersection over all n: {";
        for (std::size_t i = 0; i < rep.intersection.size(); ++i)
          out << (i ? ", " : "") << rep.intersection[i].v;
        out << "} (torsion: constants only)\n";
      }
      return 0;
    }

    if (exm0->parsed()) {
      FpPoly a = parse_fp_poly(o.a, o.p), b = parse_fp_poly(o.b, o.p);
      RatFunc alpha = parse_ratfunc(o.alpha, o.p);
      ConvergenceReport rep = run_exm0(o.p, a, b, alpha, o.n_max);
      out << (as_json ? rep.json().dump(2) + "\n" : rep.table());
      return 0;
    }

    if (exm1->parsed()) {
      std::vector<Place> places;
      if (!o.places.empty()) {
        places = parse_places(o.places, o.p);
      } else {
        // Small default set: irreducibles of degree <= 2 away from t.
        for (const auto& pi : irreducibles(o.p, 6)) {
          if (pi == FpPoly::variable(o.p)) continue;
          if (pi.degree()->get_ui() > 2) break;
          places.push_back(Place::finite(pi));
        }
      }
      ConvergenceReport rep = run_exm1(o.p, o.n_max, places);
      out << (as_json ? rep.json().dump(2) + "\n" : rep.table());
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace fpt
