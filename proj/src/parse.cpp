#include "fpt/parse.hpp"

#include <cctype>

namespace fpt {

namespace {

// All parser intermediates live over a fixed variable budget and are shrunk
// once the true count is known.
constexpr std::size_t kMaxVars = 32;

// Recursive-descent parser over the extended grammar.  Intermediate values
// are MultiPoly; plain field elements are the nvars = 0 case.  Division is
// only defined when the divisor carries no variables.
class Parser {
public:
  Parser(std::string_view text, std::uint32_t p, bool allow_vars)
      : text_(text), p_((require_prime(p), p)), allow_vars_(allow_vars) {}

  MultiPoly parse() {
    MultiPoly v = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

  std::size_t max_var_index_seen() const { return max_var_; }
  bool any_var_seen() const { return var_seen_; }

private:
  std::string_view text_;
  std::uint32_t p_;
  bool allow_vars_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
  bool var_seen_ = false;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  MultiPoly expression() {
    skip_ws();
    bool neg = false;
    while (eat('-')) neg = !neg;  // leading sign(s)
    MultiPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        MultiPoly d = factor();
        if (!d.is_coefficient()) {
          pos_ = at;
          fail("division by an expression containing variables");
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero polynomial");
        }
        RatFunc c = d.coeff(Monomial(kMaxVars, 0));
        acc = acc.scaled(c.inverse());
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    while (eat('^')) {
      skip_ws();
      mpz_class e = integer("exponent expected");
      base = power(base, e);
    }
    return base;
  }

  MultiPoly power(const MultiPoly& base, const mpz_class& e) {
    if (e < 0) fail("exponents must be nonnegative");
    if (base.is_coefficient()) {
      RatFunc c = base.coeff(Monomial(kMaxVars, 0));
      // Sparse monomials take arbitrary-size exponents without expansion.
      return MultiPoly::constant(p_, kMaxVars, c.pow(e));
    }
    if (!e.fits_ulong_p() || e.get_ui() > 4096)
      fail("exponent too large for a polynomial in X variables");
    return base.pow(e.get_ui());
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly v = expression();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n = integer("number expected");
      mpz_class r = n % p_;
      return MultiPoly::constant(p_, kMaxVars,
                                 RatFunc::constant(p_, r.get_si()));
    }
    if (c == 't') {
      ++pos_;
      return MultiPoly::constant(p_, kMaxVars, RatFunc::variable(p_));
    }
    if (c == 'X') {
      if (!allow_vars_) fail("variables X0..XN are not allowed here");
      ++pos_;
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("variable index expected after 'X'");
      mpz_class idx = integer("variable index expected");
      if (!idx.fits_ulong_p() || idx.get_ui() >= kMaxVars)
        fail("variable index out of range");
      std::size_t i = idx.get_ui();
      max_var_ = std::max(max_var_, i);
      var_seen_ = true;
      return MultiPoly::variable(p_, kMaxVars, i);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  mpz_class integer(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail(what);
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, std::uint32_t p) {
  Parser parser(text, p, /*allow_vars=*/false);
  MultiPoly v = parser.parse();
  return v.coeff(Monomial(kMaxVars, 0));
}

FpPoly parse_fp_poly(std::string_view text, std::uint32_t p) {
  RatFunc r = parse_ratfunc(text, p);
  if (!r.is_poly())
    throw DomainError("expected a polynomial, got a proper fraction: " +
                      r.str());
  return r.num();
}

MultiPoly parse_multipoly(std::string_view text, std::uint32_t p,
                          std::optional<std::size_t> nvars) {
  Parser parser(text, p, /*allow_vars=*/true);
  MultiPoly v = parser.parse();
  std::size_t need = parser.any_var_seen() ? parser.max_var_index_seen() + 1 : 0;
  std::size_t n = nvars.value_or(std::max<std::size_t>(need, 1));
  if (need > n)
    throw DomainError("input uses X" +
                      std::to_string(parser.max_var_index_seen()) +
                      " but only " + std::to_string(n) +
                      " variables are available");
  return v.resized(n);
}

std::vector<MultiPoly> parse_ideal_lines(std::string_view text,
                                         std::uint32_t p,
                                         std::optional<std::size_t> nvars) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);

  std::vector<MultiPoly> gens;
  std::size_t max_nv = nvars.value_or(1);
  for (const auto& line : lines) {
    std::string_view sv = line;
    std::size_t a = sv.find_first_not_of(" \t\r");
    if (a == std::string_view::npos || sv[a] == '#') continue;
    MultiPoly g = parse_multipoly(sv, p, std::nullopt);
    max_nv = std::max(max_nv, g.nvars());
    gens.push_back(std::move(g));
  }
  if (nvars && max_nv > *nvars)
    throw DomainError("ideal file uses more variables than requested");
  for (auto& g : gens) g = g.resized(max_nv);
  return gens;
}

std::vector<RatFunc> parse_point(std::string_view text, std::uint32_t p) {
  std::size_t a = text.find_first_not_of(" \t\r\n");
  std::size_t b = text.find_last_not_of(" \t\r\n");
  if (a == std::string_view::npos || text[a] != '[' || text[b] != ']')
    throw ParseError("point must be of the form [c0:c1:...]", a == std::string_view::npos ? 0 : a);
  std::string_view inner = text.substr(a + 1, b - a - 1);
  std::vector<RatFunc> coords;
  std::size_t start = 0;
  for (;;) {
    std::size_t colon = inner.find(':', start);
    std::string_view piece = colon == std::string_view::npos
                                 ? inner.substr(start)
                                 : inner.substr(start, colon - start);
    coords.push_back(parse_ratfunc(piece, p));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  return coords;
}

std::vector<std::vector<RatFunc>> parse_point_list(std::string_view text,
                                                   std::uint32_t p) {
  std::vector<std::vector<RatFunc>> points;
  std::size_t start = 0;
  for (;;) {
    std::size_t semi = text.find(';', start);
    std::string_view piece = semi == std::string_view::npos
                                 ? text.substr(start)
                                 : text.substr(start, semi - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos)
      points.push_back(parse_point(piece, p));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return points;
}

}  // namespace fpt
