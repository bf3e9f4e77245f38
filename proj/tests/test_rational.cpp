#include "plesken/error.hpp"
#include "plesken/rational.hpp"

#include <doctest.h>

using plesken::parse_rational;
using plesken::Rational;
using plesken::to_string;

TEST_CASE("rational parse and print round-trip") {
  CHECK(to_string(parse_rational("3/4")) == "3/4");
  CHECK(to_string(parse_rational("-2")) == "-2");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("10/2")) == "5");
  CHECK(to_string(parse_rational("0/7")) == "0");
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(parse_rational("1/3") + parse_rational("1/6") == parse_rational("1/2"));
  CHECK(parse_rational("2/4") == parse_rational("1/2"));
  Rational third(1, 3);
  CHECK(third * 3 == 1);
  Rational tenth(1, 10);
  Rational sum(0);
  for (int i = 0; i < 10; ++i) sum += tenth;
  CHECK(sum == 1);
}

TEST_CASE("rational parse rejects garbage") {
  CHECK_THROWS_AS(parse_rational(""), plesken::InputError);
  CHECK_THROWS_AS(parse_rational("abc"), plesken::InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), plesken::InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), plesken::InputError);
  CHECK_THROWS_AS(parse_rational("1/"), plesken::InputError);
  CHECK_THROWS_AS(parse_rational("/2"), plesken::InputError);
  CHECK_THROWS_AS(parse_rational("1 / 2"), plesken::InputError);
}
