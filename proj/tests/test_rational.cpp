#include <doctest.h>

#include "petit/rational.hpp"

using namespace petit;

TEST_CASE("rational reduction and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(Rational(-64, 27).to_string() == "-64/27");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(Rational(-1) < Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), InputError);
  CHECK_THROWS_AS(Rational(1).inverse() / Rational(0), InputError);
}

TEST_CASE("rational overflow is detected, not wrapped") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, InputError);
  CHECK_NOTHROW(big + big);  // reduces within range? (num = INT64_MAX-1)
}

TEST_CASE("rational pow and exact square root") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(49, 64).sqrt_exact().value() == Rational(7, 8));
  CHECK(!Rational(2).sqrt_exact().has_value());
  CHECK(!Rational(-4).sqrt_exact().has_value());
  CHECK(Rational(0).sqrt_exact().value() == Rational(0));
}

TEST_CASE("gaussian arithmetic") {
  Gaussian i(Rational(0), Rational(1));
  CHECK(i * i == Gaussian(Rational(-1)));
  CHECK((i * i * i * i).is_one());
  Gaussian z(Rational(3), Rational(4));
  CHECK(z.norm() == Rational(25));
  CHECK((z * z.inverse()).is_one());
  CHECK(z.conj() == Gaussian(Rational(3), Rational(-4)));
  CHECK(z.to_string() == "3+4*i");
  CHECK(Gaussian(Rational(0), Rational(-1)).to_string() == "-i");
  CHECK(Gaussian(Rational(1, 2)).to_string() == "1/2");
}

TEST_CASE("gaussian exact square roots") {
  // (1+i)^2 = 2i
  Gaussian root = Gaussian(Rational(0), Rational(2)).sqrt_exact().value();
  CHECK(root * root == Gaussian(Rational(0), Rational(2)));
  CHECK(Gaussian(Rational(-9)).sqrt_exact().value() == Gaussian(Rational(0), Rational(3)));
  CHECK(!Gaussian(Rational(2)).sqrt_exact().has_value());
  CHECK(!Gaussian(Rational(1), Rational(1)).sqrt_exact().has_value());
  // -3 is not a square in Q(i), -1/12 neither
  CHECK(!Gaussian(Rational(-3)).sqrt_exact().has_value());
  CHECK(!Gaussian(Rational(-1, 12)).sqrt_exact().has_value());
}
