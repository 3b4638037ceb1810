#include <doctest.h>

#include "helpers.hpp"
#include "petit/json_io.hpp"
#include "petit/literals.hpp"

using namespace petit;
using namespace petit::testing;

TEST_CASE("polynomial literal grammar") {
  GaloisExtension E = gf4();
  FieldElement w = E.generator();
  SkewPoly f = parse_skew_poly(E, "t^2 + (g)*t + (g+1)");
  CHECK(f.coeff(2).is_one());
  CHECK(f.coeff(1) == w);
  CHECK(f.coeff(0) == w + E.one());
  CHECK(parse_skew_poly(E, "t^2 - g") == SkewPoly::from_coeffs(E, {-w, E.zero(), E.one()}));
  CHECK(parse_skew_poly(E, "(t + g)*(t + g)") ==
        SkewPoly::from_coeffs(E, {w, E.one()}) * SkewPoly::from_coeffs(E, {w, E.one()}));
  CHECK(parse_field_element(E, "g^2") == w * w);
  CHECK(parse_field_element(E, "1/g") == w.inverse());
}

TEST_CASE("quadratic literals") {
  GaloisExtension K = GaloisExtension::make_quadratic_extension(BaseField::gaussian_rationals,
                                                                Gaussian(Rational(-1, 12)));
  FieldElement c = parse_field_element(K, "1 + 2*sqrt(b)");
  CHECK(c == K.one() + K.from_integer(2) * K.sqrt_b());
  CHECK(parse_field_element(K, "-64/27") == K.from_base(Gaussian(Rational(-64, 27))));
  CHECK(parse_field_element(K, "(1+2*i)*sqrt(b)") ==
        K.make_quad(Gaussian(), Gaussian(Rational(1), Rational(2))));
  CHECK(parse_field_element(K, "i^2") == K.from_integer(-1));
  GaloisExtension R =
      GaloisExtension::make_quadratic_extension(BaseField::rationals, Gaussian(Rational(2)));
  CHECK_THROWS_AS(parse_field_element(R, "i"), InputError);
  CHECK_THROWS_AS(parse_field_element(K, "g"), InputError);
}

TEST_CASE("parse errors carry the column") {
  GaloisExtension E = gf4();
  auto message_of = [&](const char* text) {
    try {
      parse_skew_poly(E, text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message_of("t^2 + $") .find("column 7") != std::string::npos);
  CHECK(message_of("t^^2").find("column") != std::string::npos);
  CHECK(message_of("t^2 + q").find("unknown name") != std::string::npos);
  CHECK(message_of("(t").find("expected") != std::string::npos);
  CHECK(message_of("t/ (t+1)").find("field constants") != std::string::npos);
  CHECK(message_of("1/0").find("division by zero") != std::string::npos);
}

TEST_CASE("print/parse round-trip (property)") {
  Rng rng(41);
  for (GaloisExtension E : {gf4(), gf9(), gf8()}) {
    for (int trial = 0; trial < 200; ++trial) {
      SkewPoly f = rng.poly(E, 4);
      if (f.is_zero()) continue;
      CHECK(parse_skew_poly(E, f.to_string()) == f);
      FieldElement x = rng.element(E);
      CHECK(parse_field_element(E, x.to_string()) == x);
    }
  }
  GaloisExtension K = GaloisExtension::make_quadratic_extension(BaseField::gaussian_rationals,
                                                                Gaussian(Rational(-3)));
  Rational nums[7] = {Rational(0), Rational(1),  Rational(-1), Rational(1, 2),
                      Rational(-3, 4), Rational(7), Rational(-64, 27)};
  for (const auto& a : nums)
    for (const auto& b : nums)
      for (const auto& c : nums) {
        FieldElement x = K.make_quad(Gaussian(a, b), Gaussian(c, a));
        CHECK(parse_field_element(K, x.to_string()) == x);
      }
}

TEST_CASE("field descriptor JSON round-trips bit-exactly") {
  for (GaloisExtension E :
       {gf4(), gf9(), gf8(), GaloisExtension::make_finite_extension(2, 2, 2)}) {
    Json j = field_to_json(E);
    GaloisExtension back = field_from_json(j);
    CHECK(back == E);
    CHECK(field_to_json(back).dump() == j.dump());
  }
  GaloisExtension K = GaloisExtension::make_quadratic_extension(BaseField::gaussian_rationals,
                                                                Gaussian(Rational(-1, 12)));
  Json j = field_to_json(K);
  CHECK(field_from_json(j) == K);
  CHECK(field_to_json(field_from_json(j)).dump() == j.dump());
}

TEST_CASE("algebra descriptor JSON round-trip") {
  GaloisExtension E = gf4();
  PetitAlgebra A(E, parse_skew_poly(E, "t^2 - g"));
  Json j = algebra_to_json(A);
  PetitAlgebra back = algebra_from_json(j);
  CHECK(back == A);
  CHECK(algebra_to_json(back).dump() == j.dump());
}
