#include <doctest.h>

#include "ogw/rational.hpp"

using ogw::Rational;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational integer conversion") {
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).as_integer() == 2);
  CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
}

TEST_CASE("rational error cases") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  const Rational big(INT64_MAX / 2);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("rational printing") {
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-1, 2).str() == "-1/2");
}
