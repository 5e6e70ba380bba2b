#include "lgforge/expression.hpp"

#include <cctype>
#include <limits>

#include "lgforge/errors.hpp"

namespace lgforge {

RationalExpr::RationalExpr(LaurentPoly num)
    : num_(num), den_(LaurentPoly::constant(num.rank(), 1, num.varnames())) {}

RationalExpr::RationalExpr(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.rank() != den_.rank()) throw RankMismatchError(num_.rank(), den_.rank());
  if (den_.is_zero()) throw ZeroDenominatorError("denominator is zero");
  fold_monomial_denominator();
}

void RationalExpr::fold_monomial_denominator() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(num_.rank(), 1, num_.varnames());
    return;
  }
  if (!den_.is_monomial()) return;
  const auto& [e, c] = *den_.terms().begin();
  if (e.is_zero() && c == 1) return;
  num_ = num_.shifted(-e) * Rational(1 / c);
  den_ = LaurentPoly::constant(num_.rank(), 1, num_.varnames());
}

RationalExpr& RationalExpr::operator+=(const RationalExpr& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  fold_monomial_denominator();
  return *this;
}

RationalExpr& RationalExpr::operator-=(const RationalExpr& other) { return *this += -other; }

RationalExpr& RationalExpr::operator*=(const RationalExpr& other) {
  num_ = num_ * other.num_;
  den_ = den_ * other.den_;
  fold_monomial_denominator();
  return *this;
}

RationalExpr& RationalExpr::operator/=(const RationalExpr& other) {
  if (other.num_.is_zero()) throw ZeroDenominatorError("division by zero");
  num_ = num_ * other.den_;
  den_ = den_ * other.num_;
  fold_monomial_denominator();
  return *this;
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr out(*this);
  out.num_ = -out.num_;
  return out;
}

RationalExpr pow(const RationalExpr& e, std::int64_t k) {
  if (k >= 0) return RationalExpr(pow(e.num(), static_cast<unsigned>(k)), pow(e.den(), static_cast<unsigned>(k)));
  if (e.num().is_zero()) throw ZeroDenominatorError("negative power of zero");
  return RationalExpr(pow(e.den(), static_cast<unsigned>(-k)), pow(e.num(), static_cast<unsigned>(-k)));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& varnames)
      : text_(text), vars_(varnames) {}

  RationalExpr run() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    RationalExpr e = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (at_end()) throw ParseError(std::string("expected '") + c + "' but reached end of input", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  RationalExpr constant(const Rational& c) const {
    return RationalExpr(LaurentPoly::constant(vars_.size(), c, vars_));
  }

  RationalExpr expr() {
    RationalExpr lhs = term();
    while (true) {
      if (accept('+'))
        lhs += term();
      else if (accept('-'))
        lhs -= term();
      else
        return lhs;
    }
  }

  RationalExpr term() {
    RationalExpr lhs = factor();
    while (true) {
      skip_space();
      if (accept('*')) {
        lhs *= factor();
      } else if (peek() == '/') {
        const std::size_t at = pos_++;
        RationalExpr rhs = factor();
        if (rhs.num().is_zero()) throw ZeroDenominatorError("division by zero at position " + std::to_string(at));
        lhs /= rhs;
      } else {
        return lhs;
      }
    }
  }

  RationalExpr factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  RationalExpr power() {
    RationalExpr base = primary();
    skip_space();
    if (peek() != '^') return base;
    const std::size_t at = pos_++;
    const std::int64_t k = exponent();
    skip_space();
    if (peek() == '^') throw ParseError("chained '^' is ambiguous; use parentheses", pos_);
    if (k < 0 && base.num().is_zero())
      throw ZeroDenominatorError("negative power of zero at position " + std::to_string(at));
    return pow(base, k);
  }

  std::int64_t exponent() {
    const bool paren = accept('(');
    skip_space();
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    skip_space();
    if (!is_digit(peek())) throw ParseError("expected integer exponent", pos_);
    std::int64_t v = integer();
    if (paren) expect(')');
    return negative ? -v : v;
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (is_digit(peek())) {
      const int d = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) throw ParseError("integer literal too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  RationalExpr primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalExpr e = expr();
      expect(')');
      return e;
    }
    if (is_digit(c)) {
      const std::size_t start = pos_;
      while (is_digit(peek())) ++pos_;
      return constant(Rational(std::string(text_.substr(start, pos_ - start)), 10));
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (is_ident_char(peek())) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return RationalExpr(LaurentPoly::variable(vars_.size(), i, vars_));
      throw UnknownVariableError(name, start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalExpr parse(std::string_view text, const std::vector<std::string>& varnames) {
  return Parser(text, varnames).run();
}

LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& varnames) {
  return laurent_normalize(parse(text, varnames));
}

std::vector<std::string> parse_varnames(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view item = list.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty() || !is_ident_start(item.front()))
      throw ParseError("invalid variable name '" + std::string(item) + "'", start);
    for (char ch : item)
      if (!is_ident_char(ch)) throw ParseError("invalid variable name '" + std::string(item) + "'", start);
    for (const auto& existing : names)
      if (existing == item) throw ParseError("duplicate variable name '" + std::string(item) + "'", start);
    names.emplace_back(item);
    start = comma + 1;
  }
  return names;
}

// ---------------------------------------------------------------------------
// Laurent normalization

std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.rank() != den.rank()) throw RankMismatchError(num.rank(), den.rank());
  if (den.is_zero()) throw ZeroDenominatorError("division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly(num.rank(), num.varnames());

  // Shift both to ordinary polynomials, the divisor with no monomial factor.
  // Then any Laurent quotient is an ordinary polynomial, and single-divisor
  // division has a unique remainder.
  const ExponentVector num_shift = num.min_exponents();
  const ExponentVector den_shift = den.min_exponents();
  LaurentPoly rem = num.shifted(-num_shift);
  const LaurentPoly divisor = den.shifted(-den_shift);
  const auto& [lead_e, lead_c] = *divisor.terms().begin();

  LaurentPoly quotient(num.rank(), num.varnames());
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().begin();
    ExponentVector diff = e - lead_e;
    for (auto v : diff)
      if (v < 0) return std::nullopt;
    const Rational q = c / lead_c;
    quotient.add_term(diff, q);
    rem -= divisor.shifted(diff) * q;
  }
  return quotient.shifted(num_shift - den_shift);
}

LaurentPoly laurent_normalize(const RationalExpr& e) {
  auto q = exact_divide(e.num(), e.den());
  if (!q) throw NotLaurentError("(" + render(e.num()) + ")/(" + render(e.den()) + ") is not a Laurent polynomial");
  return q->with_varnames(e.num().varnames());
}

}  // namespace lgforge
