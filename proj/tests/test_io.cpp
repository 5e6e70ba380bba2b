#include <doctest.h>

#include "lgforge/errors.hpp"
#include "lgforge/expression.hpp"
#include "lgforge/io.hpp"

using namespace lgforge;

TEST_SUITE("io") {

TEST_CASE("cover spec round trip") {
  const auto doc = Json::parse(R"js({
    "potential": "z1 + z2 + 1/(z1*z2)", "vars": ["z1", "z2"],
    "functional": {"linear": ["1/3", "1/3"], "constant": "2/3"},
    "r": 2, "descendant": "0", "basis": [[-1, -1], [1, -1]]})js");
  const auto spec = cover_spec_from_json(doc);
  CHECK(spec.r == 2);
  CHECK(spec.descendant.r == 2);
  CHECK(spec.functional.linear[0] == Rational(1, 3));
  CHECK(spec.basis == IntMatrix::from_columns({{-1, -1}, {1, -1}}));
  const auto again = cover_spec_from_json(cover_spec_to_json(spec));
  CHECK(again.potential == spec.potential);
  CHECK(again.basis == spec.basis);
  CHECK(again.functional.constant == spec.functional.constant);
}

TEST_CASE("cover spec errors") {
  CHECK_THROWS_AS(cover_spec_from_json(Json::parse(R"js({"vars": ["x"]})js")), InputError);
  CHECK_THROWS_AS(cover_spec_from_json(Json::parse(
                      R"js({"potential": "x", "vars": ["x"], "functional": {"linear": [0, 1], "constant": 1}, "r": 2})js")),
                  InputError);
  CHECK_THROWS_AS(cover_spec_from_json(Json::parse(
                      R"js({"potential": "x", "vars": ["x"], "functional": {"linear": [0], "constant": 1}, "r": 1})js")),
                  InputError);
  CHECK_THROWS_AS(cover_spec_from_json(Json::parse(
                      R"js({"potential": "x", "vars": ["x"], "functional": {"linear": [0.5], "constant": 1}, "r": 2})js")),
                  InputError);
}

TEST_CASE("substitution files") {
  const auto file = substitution_from_json(Json::parse(R"js({"vars": ["x", "y"], "images": ["x/(1+y)", "x*y/(1+y)"]})js"));
  CHECK(file.vars == std::vector<std::string>{"x", "y"});
  CHECK(apply(parse_laurent("x + y + 1/x + 1/y", file.vars), file.substitution) ==
        parse_laurent("x + (1+y)^2/(x*y)", file.vars));
  CHECK_THROWS_AS(substitution_from_json(Json::parse(R"js({"vars": ["x"], "images": [1]})js")), InputError);
}

TEST_CASE("ledger files") {
  const auto in = ledger_from_json(Json::parse(R"js({"classes": [
      {"half_maslov": 1, "divisor_hits": [1], "area": "1/4"},
      {"half_maslov": 1, "divisor_hits": [0], "area": "1/2"}],
    "divisor_components": [0], "r": 2, "linking": [1, 0]})js"));
  CHECK(in.classes.size() == 2);
  CHECK(in.classes[0].area == Rational(1, 4));
  CHECK(in.cover_degree == 2);
  CHECK(in.linking == std::vector<std::int64_t>{1, 0});
  CHECK_THROWS_AS(ledger_from_json(Json::parse(R"js({"classes": [{"area": "1"}]})js")), InputError);
}

TEST_CASE("rationals in JSON") {
  CHECK(to_json(Rational(5)) == Json(5));
  CHECK(to_json(Rational(-1, 2)) == Json("-1/2"));
  CHECK(to_json(Rational("123456789012345678901234567890", 10)) == Json("123456789012345678901234567890"));
  CHECK(rational_from_json(Json(-7)) == -7);
  CHECK(rational_from_json(Json("3/9")) == Rational(1, 3));
}

}
