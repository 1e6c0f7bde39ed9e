#include <minksum/types.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "helpers.hpp"

using minksum::Integer;
using minksum::ParseError;
using minksum::Rational;
using minksum::format_rational;
using minksum::parse_rational;

TEST_CASE("integers parse and format in canonical form") {
  CHECK(format_rational(parse_rational("0")) == "0");
  CHECK(format_rational(parse_rational("7")) == "7");
  CHECK(format_rational(parse_rational("-3")) == "-3");
  CHECK(format_rational(parse_rational("+12")) == "12");
  CHECK(format_rational(parse_rational("-0")) == "0");
}

TEST_CASE("fractions reduce to lowest terms with the sign on the numerator") {
  CHECK(format_rational(parse_rational("3/4")) == "3/4");
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  CHECK(format_rational(parse_rational("-4/6")) == "-2/3");
  CHECK(format_rational(parse_rational("0/5")) == "0");
  CHECK(format_rational(parse_rational("6/3")) == "2");
  CHECK(format_rational(parse_rational("+9/12")) == "3/4");
}

TEST_CASE("finite decimals convert exactly") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("5.") == Rational(5));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("2.50") == Rational(5, 2));
  CHECK(parse_rational("-3.0") == Rational(-3));
}

TEST_CASE("malformed tokens are rejected") {
  const char* bad[] = {"",    "abc",  "1/0",   "/2",  "1/",   "1/-2", "1.2.3",
                       "1 2", "3/4x", "0x10",  ".",   "+",    "-",    "1e3",
                       "--1", "1//2", "12a/5", "4/b", "5..0", "7 "};
  for (const char* token : bad) {
    INFO("token: '" << token << "'");
    CHECK_THROWS_AS(parse_rational(token), ParseError);
  }
}

TEST_CASE("string form round-trips bit-exactly") {
  // The big fraction is in lowest terms (its numerator is 1 mod 7).
  const char* forms[] = {"0",    "1",          "-1",  "1/2",
                         "-2/3", "355/113",    "16",  "-16/7",
                         "1/8",  "123456789012345678901234567891/7"};
  for (const char* f : forms) {
    INFO("form: " << f);
    CHECK(format_rational(parse_rational(f)) == f);
  }
}

TEST_CASE("arithmetic stays canonical and exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(format_rational(Rational(1, 3) + Rational(1, 6)) == "1/2");
  CHECK(Rational(1, 10) * Rational(10) == 1);
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(format_rational(Rational(Integer(7), Integer(-14))) == "-1/2");
  CHECK(format_rational(Rational(Integer(-30), Integer(21))) == "-10/7");
}

TEST_CASE("addition is commutative and associative on random rationals") {
  test_util::Rng rng(20260816u);
  for (int i = 0; i < 200; ++i) {
    const Rational a = test_util::random_rational(rng, 100, 50);
    const Rational b = test_util::random_rational(rng, 100, 50);
    const Rational c = test_util::random_rational(rng, 100, 50);
    REQUIRE(a + b == b + a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("point comparisons") {
  const minksum::Point p = test_util::ptq({"1/2", "-3"});
  const minksum::Point q = test_util::ptq({"2/4", "-3"});
  const minksum::Point r = test_util::ptq({"1/2", "-2"});
  CHECK(minksum::points_equal(p, q));
  CHECK_FALSE(minksum::points_equal(p, r));
  CHECK(minksum::lex_less(p, r));
  CHECK_FALSE(minksum::lex_less(r, p));
  CHECK_FALSE(minksum::lex_less(p, q));
}
