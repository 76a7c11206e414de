#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lagrangia/rational.hpp"

using namespace lagrangia;

TEST_CASE("canonical string form") {
  CHECK(to_string(Rational(6, 8)) == "3/4");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("parsing is exact and round-trips") {
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("36046/100000") == Rational(18023, 50000));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("010/3") == Rational(10, 3));
  CHECK(parse_rational("0.05") == Rational(1, 20));
  CHECK(parse_rational("-0.0625") == Rational(-1, 16));
  for (const char* s : {"1/3", "-22/7", "0/1", "123456789/1000000007"})
    CHECK(parse_rational(to_string(parse_rational(s))) == parse_rational(s));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("from_double is the exact binary value") {
  CHECK(from_double(0.5) == Rational(1, 2));
  CHECK(from_double(0.1) != Rational(1, 10));
  CHECK(from_double(0.1).get_d() == 0.1);
}

TEST_CASE("counting functions against products") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 7) == 0);
  CHECK(factorial(10) == 3628800);
  CHECK(falling_factorial(9, 4) == 9 * 8 * 7 * 6);
  CHECK(falling_factorial(3, 5) == 0);
  // Pascal's rule
  for (unsigned n = 1; n < 30; ++n)
    for (unsigned k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(pow(Rational(3, 4), 3) == Rational(27, 64));
  CHECK(pow(Rational(2), 0) == 1);
}
