#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpt/multipoly.hpp"
#include "fpt/rat_func.hpp"

namespace fpt {

// Field-element grammar: decimal integers (reduced mod p), the symbol t,
// operators + - * / ^ with the usual precedence, parentheses; whitespace is
// ignored.  Exponents are nonnegative decimal integers of any size.  The
// extended grammar adds the variables X0..XN.

RatFunc parse_ratfunc(std::string_view text, std::uint32_t p);

// Polynomial-only variant: rejects inputs with a nontrivial denominator.
FpPoly parse_fp_poly(std::string_view text, std::uint32_t p);

// Extended grammar with variables X0..XN.  When nvars is given the result is
// padded/checked against it, otherwise the variable count is inferred from
// the largest index that occurs (at least min_nvars).
MultiPoly parse_multipoly(std::string_view text, std::uint32_t p,
                          std::optional<std::size_t> nvars = std::nullopt);

// One generator per line; blank lines and '#' comments are skipped.  All
// generators are resized to the common variable count.
std::vector<MultiPoly> parse_ideal_lines(std::string_view text,
                                         std::uint32_t p,
                                         std::optional<std::size_t> nvars =
                                             std::nullopt);

// Projective point "[c0 : c1 : ... : cN]" with RatFunc coordinates;
// a list uses ';' separators, e.g. "[t^2:1];[0:1]".
std::vector<RatFunc> parse_point(std::string_view text, std::uint32_t p);
std::vector<std::vector<RatFunc>> parse_point_list(std::string_view text,
                                                   std::uint32_t p);

}  // namespace fpt
