#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgforge/laurent.hpp"

namespace lgforge {

// A quotient num/den of Laurent polynomials, viewed as a rational function on
// the torus. Monomial denominators are folded into the numerator on
// construction, so den is either 1 or has at least two terms.
class RationalExpr {
 public:
  explicit RationalExpr(LaurentPoly num);
  RationalExpr(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  std::size_t rank() const noexcept { return num_.rank(); }
  bool is_laurent() const noexcept { return den_.is_monomial(); }

  RationalExpr& operator+=(const RationalExpr& other);
  RationalExpr& operator-=(const RationalExpr& other);
  RationalExpr& operator*=(const RationalExpr& other);
  RationalExpr& operator/=(const RationalExpr& other);
  RationalExpr operator-() const;

  friend RationalExpr operator+(RationalExpr a, const RationalExpr& b) { return a += b; }
  friend RationalExpr operator-(RationalExpr a, const RationalExpr& b) { return a -= b; }
  friend RationalExpr operator*(RationalExpr a, const RationalExpr& b) { return a *= b; }
  friend RationalExpr operator/(RationalExpr a, const RationalExpr& b) { return a /= b; }

 private:
  void fold_monomial_denominator();

  LaurentPoly num_;
  LaurentPoly den_;
};

RationalExpr pow(const RationalExpr& e, std::int64_t k);

// Parses the ASCII expression grammar:
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('+' | '-') factor | power
//   power   := primary ('^' exponent)?
//   exponent:= ['+' | '-'] INT | '(' ['+' | '-'] INT ')'
//   primary := INT | IDENT | '(' expr ')'
// Identifiers must appear in `varnames`, which also fixes the rank.
RationalExpr parse(std::string_view text, const std::vector<std::string>& varnames);

// Parses and normalizes in one step; throws NotLaurentError if the text does
// not denote a Laurent polynomial.
LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& varnames);

// Exact quotient in the Laurent ring, or nullopt if den does not divide num.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den);

LaurentPoly laurent_normalize(const RationalExpr& e);

// Splits "x,y , z" into names; rejects names outside [a-zA-Z][a-zA-Z0-9_]*.
std::vector<std::string> parse_varnames(std::string_view list);

}  // namespace lgforge
