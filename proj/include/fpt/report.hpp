#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "fpt/valuation.hpp"

namespace fpt {

// One exact valuation measurement: at step n, the distance (valuation of
// the difference) from x_n to the named target at the given place.
struct ReportRow {
  unsigned n = 0;
  Place place;
  std::string target;  // which difference the row measures
  Valuation val = Valuation::infinite();
};

struct PlaceVerdict {
  Place place;
  bool ok = false;
  std::string text;
};

// Exact convergence data for one of the demo sequences; no floating point
// anywhere, verdicts are derived solely from the rows.
struct ConvergenceReport {
  std::string sequence_id;
  std::uint32_t p = 2;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> notes;
  std::vector<ReportRow> rows;
  std::vector<PlaceVerdict> verdicts;
  bool all_ok = false;
  std::string overall;

  std::string table() const;
  nlohmann::json json() const;
};

// Demo exm0: x_n = ((prod pi_i)^n + a) / ((prod pi_i)^(2n) + b) + alpha with
// pi_i the first n irreducibles.  Finite rows measure x_n - beta at pi_j
// (j <= n) with beta = alpha + a/b; the infinite row measures x_n - alpha.
// Converges to beta at every finite place and to alpha at infinity.
ConvergenceReport run_exm0(std::uint32_t p, const FpPoly& a, const FpPoly& b,
                           const RatFunc& alpha, unsigned n_max);

// Demo exm1: y_n = t^(p^(n!)).  Cauchy rows measure y_{n+1} - y_n at each
// requested place; at v_{t-1} the rows y_n - 1 grow as p^(n!) while at every
// other place the limit stays away from 1.
ConvergenceReport run_exm1(std::uint32_t p, unsigned n_max,
                           const std::vector<Place>& places);

}  // namespace fpt
