#include <doctest.h>

#include <complex>
#include <numbers>

#include "lgforge/errors.hpp"
#include "lgforge/expression.hpp"
#include "lgforge/laurent.hpp"
#include "oracles.hpp"

using namespace lgforge;

namespace {

const std::vector<std::string> XY = {"x", "y"};

LaurentPoly P(const std::string& text, const std::vector<std::string>& vars = XY) { return parse_laurent(text, vars); }

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("parse builds the expected term map") {
  const auto e = parse("x + y + x^-1*y^-1", XY);
  CHECK(e.den() == LaurentPoly::constant(2, 1));
  const auto& f = e.num();
  CHECK(f.size() == 3);
  CHECK(f.coefficient({1, 0}) == 1);
  CHECK(f.coefficient({0, 1}) == 1);
  CHECK(f.coefficient({-1, -1}) == 1);
}

TEST_CASE("monomial denominators fold into the numerator") {
  const auto f = P("(1+y)^2/(x*y)");
  CHECK(f.size() == 3);
  CHECK(f.coefficient({-1, -1}) == 1);
  CHECK(f.coefficient({-1, 0}) == 2);
  CHECK(f.coefficient({-1, 1}) == 1);
}

TEST_CASE("cancellation gives the zero polynomial") {
  const auto f = P("x - x");
  CHECK(f.is_zero());
  CHECK(f.terms().empty());
  CHECK(render(f) == "0");
}

TEST_CASE("rational literals and negative exponents") {
  const auto f = P("3/2*x^-2 - (y)^(-1) + 7");
  CHECK(f.coefficient({-2, 0}) == Rational(3, 2));
  CHECK(f.coefficient({0, -1}) == -1);
  CHECK(f.constant_term() == 7);
  CHECK(P("007*x").coefficient({1, 0}) == 7);
  CHECK(P("-x^2") == P("-(x^2)"));
  CHECK(P("x^0") == LaurentPoly::constant(2, 1));
}

TEST_CASE("parse errors report positions") {
  CHECK_THROWS_AS(parse("x +", XY), ParseError);
  CHECK_THROWS_AS(parse("2x", XY), ParseError);
  CHECK_THROWS_AS(parse("x^2^3", XY), ParseError);
  CHECK_THROWS_AS(parse("x^y", XY), ParseError);
  CHECK_THROWS_AS(parse("(x + y", XY), ParseError);
  CHECK_THROWS_AS(parse("", XY), ParseError);
  try {
    parse("x + $", XY);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  try {
    parse("x + z", XY);
    FAIL("no throw");
  } catch (const UnknownVariableError& e) {
    CHECK(e.name() == "z");
  }
  CHECK_THROWS_AS(parse("x/0", XY), ZeroDenominatorError);
  CHECK_THROWS_AS(parse("x/(y-y)", XY), ZeroDenominatorError);
  CHECK_THROWS_AS(parse("0^-1", XY), ZeroDenominatorError);
}

TEST_CASE("variable name lists") {
  CHECK(parse_varnames("x, y ,z1") == std::vector<std::string>{"x", "y", "z1"});
  CHECK_THROWS_AS(parse_varnames("x,x"), InputError);
  CHECK_THROWS_AS(parse_varnames("1x"), InputError);
  CHECK_THROWS_AS(parse_varnames(""), InputError);
}

TEST_CASE("laurent_normalize") {
  CHECK(P("(x^2-1)/(x-1)") == P("x + 1"));
  CHECK(P("(x+y)/(x*y)") == P("y^-1 + x^-1"));
  CHECK_THROWS_AS(P("(x+1)/(y+1)"), NotLaurentError);
  CHECK_THROWS_AS(P("1/(1+x)"), NotLaurentError);
  CHECK(P("(x^3*y - x*y^3)/(x^2 - y^2)") == P("x*y"));
  CHECK(P("(x^-1 + y)^3/(1 + x*y)") == P("(x^-1+y)^2*x^-1"));
}

TEST_CASE("ring operations") {
  CHECK((P("x") + P("-x")).is_zero());
  CHECK(P("x + 1/x", {"x"}) * P("x + 1/x", {"x"}) == P("x^2 + 2 + x^-2", {"x"}));
  CHECK(scale(P("x+y+1/(x*y)"), 2) == P("2*x+2*y+2/(x*y)"));
  CHECK_THROWS_AS(P("x") + P("x", {"x"}), RankMismatchError);
  CHECK_THROWS_AS(P("x") * P("x", {"x"}), RankMismatchError);
}

TEST_CASE("pow") {
  CHECK(pow(P("x+y"), 2) == P("x^2 + 2*x*y + y^2"));
  const auto w = P("x+y+1/(x*y)");
  CHECK(pow(w, 3).constant_term() == 6);
  CHECK(pow(w, 0) == LaurentPoly::constant(2, 1));
  CHECK(pow(LaurentPoly(2), 0) == LaurentPoly::constant(2, 1));
  CHECK(pow(LaurentPoly(2), 3).is_zero());
}

TEST_CASE("coefficient extraction") {
  const auto w = P("x+y+1/(x*y)");
  CHECK(w.constant_term() == 0);
  CHECK(pow(w, 3).coefficient({1, 2}) == 3);
  CHECK(pow(w, 3).coefficient({1, 2}) == oracle::multinomial({0, 1, 2}));
  CHECK(pow(P("x + (1+y)^2/(x*y)"), 2).constant_term() == 4);
  CHECK_THROWS_AS(w.coefficient({1, 2, 3}), RankMismatchError);
}

TEST_CASE("monomial substitution") {
  const auto f = P("x^2 + x*y + y^2 + 1/(x*y)");
  CHECK(monomial_substitute(f, IntMatrix::identity(2)) == f);
  // u -> (-1,-1), v -> (2,0)
  const auto g = P("v + u + 1/u + 1/(u^2*v)", {"u", "v"});
  CHECK(monomial_substitute(g, IntMatrix{{-1, 2}, {-1, 0}}) == f);
  const auto collapse = monomial_substitute(P("x+y"), IntMatrix{{1, 1}});
  CHECK(collapse.rank() == 1);
  CHECK(collapse == scale(LaurentPoly::variable(1, 0), 2));
  CHECK_THROWS_AS(monomial_substitute(f, IntMatrix{{1, 0, 0}, {0, 1, 0}}), RankMismatchError);
}

TEST_CASE("Newton polytope vertices") {
  CHECK(newton_polytope(P("x+y+1/(x*y)")) == std::vector<ExponentVector>{{-1, -1}, {0, 1}, {1, 0}});
  CHECK(newton_polytope(P("(x+y)^2")) == std::vector<ExponentVector>{{0, 2}, {2, 0}});
  CHECK(newton_polytope(P("5")) == std::vector<ExponentVector>{{0, 0}});
  CHECK(newton_polytope(P("x + y + 1/x + 1/y + 1")).size() == 4);
  CHECK(newton_polytope(P("a + b + c + 1/(a*b*c) + a*b/c", {"a", "b", "c"})).size() == 5);
  CHECK_THROWS(newton_polytope(LaurentPoly(2)));
}

TEST_CASE("evaluate") {
  using C = std::complex<double>;
  const auto w = P("x+y+1/(x*y)");
  const std::vector<C> ones = {1.0, 1.0};
  CHECK(std::abs(evaluate(w, ones) - C(3.0)) < 1e-14);
  const C omega = std::polar(1.0, 2 * std::numbers::pi / 3);
  const std::vector<C> pt = {omega, omega};
  CHECK(std::abs(evaluate(w, pt) - 3.0 * omega) < 1e-12);
  const auto f = P("3/2*x^2 - y + 4*x^-1*y^3");
  CHECK(std::abs(evaluate(f, ones) - C(4.5)) < 1e-14);
  const std::vector<C> bad = {0.0, 1.0};
  CHECK_THROWS_AS(evaluate(w, bad), std::domain_error);
}

TEST_CASE("render uses graded lexicographic order") {
  CHECK(render(P("1/(x*y) + y + x")) == "x + y + x^-1*y^-1");
  CHECK(render(P("y^2 + x*y + x^2 - 3/2/(x*y)")) == "x^2 + x*y + y^2 - 3/2*x^-1*y^-1");
  CHECK(render(P("-x")) == "-x");
  CHECK(render(P("-1 + x")) == "x - 1");
}

}
