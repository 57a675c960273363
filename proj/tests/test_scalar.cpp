#include <doctest.h>

#include "paralg/scalar.hpp"

using namespace paralg;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), structural_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), structural_error);
}

TEST_CASE("rational parse and print round-trip") {
  for (const char* text : {"0", "5", "-7", "1/2", "-3/4", "22/7"}) {
    Rational r = Rational::parse(text);
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK(Rational::parse("+3/6") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("a/b"), structural_error);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), structural_error);
  CHECK_THROWS_AS(Rational::parse(""), structural_error);
}

TEST_CASE("rational overflow detection") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational i(Rational(0), Rational(1));
  CHECK(i * i == GaussianRational(Rational(-1), Rational(0)));
  CHECK(i.conj() == GaussianRational(Rational(0), Rational(-1)));
  GaussianRational z(Rational(1, 2), Rational(-3, 4));
  CHECK(z + z.conj() == GaussianRational(Rational(1), Rational(0)));
}

TEST_CASE("scalar exactness propagation") {
  Scalar exact = Scalar::rational(1, 3);
  Scalar inexact = Scalar::inexact({0.5, 0.0});
  CHECK(exact.exact());
  CHECK_FALSE(inexact.exact());
  CHECK((exact * exact).exact());
  CHECK_FALSE((exact * inexact).exact());
  CHECK_FALSE((exact + inexact).exact());
  CHECK_THROWS_AS(inexact.exact_value(), structural_error);
}

TEST_CASE("scalar comparisons") {
  CHECK(Scalar::rational(1, 3).is_zero() == false);
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar::inexact({1e-12, 0}).is_zero(1e-9));
  CHECK_FALSE(Scalar::inexact({1e-6, 0}).is_zero(1e-9));
  CHECK(Scalar::rational(1, 2).equals(Scalar::rational(2, 4)));
  CHECK_FALSE(Scalar::rational(1, 2).equals(Scalar::rational(1, 3)));
  Scalar i = Scalar::imaginary_unit();
  CHECK((i * i).equals(Scalar(-1)));
  CHECK(i.conj().equals(-i));
}
