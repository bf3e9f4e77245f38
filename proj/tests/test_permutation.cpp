#include "plesken/error.hpp"
#include "plesken/permutation.hpp"

#include <doctest.h>

using plesken::parse_permutation;
using plesken::Permutation;

TEST_CASE("cycle parsing round-trips through cycle_string") {
  const auto p = parse_permutation("(1 2 3)(4 5)");
  CHECK(p.cycle_string() == "(1 2 3)(4 5)");
  CHECK(parse_permutation("()").cycle_string() == "()");
  CHECK(parse_permutation("( 1  2 )").cycle_string() == "(1 2)");
  CHECK(parse_permutation("(1,2,3)").cycle_string() == "(1 2 3)");
  // a singleton cycle only declares the point
  const auto q = parse_permutation("(3)");
  CHECK(q.is_identity());
  CHECK(q.degree() == 3);
}

TEST_CASE("composition reads left to right") {
  const auto a = parse_permutation("(1 2 3)");
  const auto b = parse_permutation("(1 2)", 3);
  CHECK((a * b).cycle_string() == "(2 3)");
  CHECK((b * a).cycle_string() == "(1 3)");
  // apply follows the same order: (a*b)(x) = b(a(x))
  CHECK((a * b).apply(0) == 0);
  CHECK(a.apply(0) == 1);
}

TEST_CASE("inverse and order") {
  const auto p = parse_permutation("(1 2 3)(4 5)");
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
  CHECK(p.order() == 6);
  CHECK(parse_permutation("(1 2)").order() == 2);
  CHECK(Permutation::identity(4).order() == 1);
  CHECK(parse_permutation("(1 2 3 4)").inverse().cycle_string() == "(1 4 3 2)");
}

TEST_CASE("degree extension pads with fixed points") {
  const auto p = parse_permutation("(1 2)", 5);
  CHECK(p.degree() == 5);
  CHECK(p.apply(4) == 4);
  const auto q = parse_permutation("(1 2)");
  CHECK(q.degree() == 2);
}

TEST_CASE("canonical cycle strings start each cycle at its smallest point") {
  CHECK(parse_permutation("(2 3 1)").cycle_string() == "(1 2 3)");
  CHECK(parse_permutation("(4 5)(1 2 3)").cycle_string() == "(1 2 3)(4 5)");
}

TEST_CASE("parse errors name the problem") {
  CHECK_THROWS_AS(parse_permutation("(1 2 2)"), plesken::InputError);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)"), plesken::InputError);
  CHECK_THROWS_AS(parse_permutation("(0 1)"), plesken::InputError);
  CHECK_THROWS_AS(parse_permutation("(1 x)"), plesken::InputError);
  CHECK_THROWS_AS(parse_permutation("1 2"), plesken::InputError);
  CHECK_THROWS_AS(parse_permutation("(1 2"), plesken::InputError);
  CHECK_THROWS_AS(parse_permutation(""), plesken::InputError);
}

TEST_CASE("comparison is total and consistent") {
  const auto a = parse_permutation("(1 2)", 3);
  const auto b = parse_permutation("(1 2 3)");
  CHECK(a != b);
  CHECK((a < b || b < a));
  CHECK_FALSE(a < a);
  CHECK(a == parse_permutation("(1 2)", 3));
}
