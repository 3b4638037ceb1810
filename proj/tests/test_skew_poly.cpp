#include <doctest.h>

#include "helpers.hpp"
#include "petit/skew_poly.hpp"

using namespace petit;
using namespace petit::testing;

TEST_CASE("twist rule t*a = sigma(a)*t") {
  GaloisExtension E = gf4();
  FieldElement w = E.generator();
  SkewPoly t = SkewPoly::t_power(E, 1);
  SkewPoly lhs = t * SkewPoly::constant(w);
  SkewPoly rhs = SkewPoly::from_coeffs(E, {E.zero(), w * w});
  CHECK(lhs == rhs);
}

TEST_CASE("hand expansion (t + w^2)(t - w) = t^2 + 1 over GF(4)") {
  GaloisExtension E = gf4();
  FieldElement w = E.generator();
  SkewPoly a = SkewPoly::from_coeffs(E, {w * w, E.one()});
  SkewPoly b = SkewPoly::from_coeffs(E, {-w, E.one()});
  SkewPoly prod = a * b;
  CHECK(prod == SkewPoly::from_coeffs(E, {E.one(), E.zero(), E.one()}));
  // round-trip through right division by the degree-1 factor
  auto [q, r] = SkewPoly::right_divmod(prod, b);
  CHECK(q == a);
  CHECK(r.is_zero());
}

TEST_CASE("degree law and unit") {
  GaloisExtension E = gf9();
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    SkewPoly f = rng.nonzero_poly(E, 4), g = rng.nonzero_poly(E, 4);
    CHECK(*(f * g).degree() == *f.degree() + *g.degree());
    CHECK(f * SkewPoly::one(E) == f);
    CHECK(SkewPoly::one(E) * f == f);
  }
  CHECK(!SkewPoly::zero(E).degree().has_value());  // deg(0) = -infinity sentinel
  CHECK((SkewPoly::zero(E) * SkewPoly::one(E)).is_zero());
}

TEST_CASE("ring laws on random triples") {
  for (GaloisExtension E : {gf4(), gf9()}) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      SkewPoly a = rng.poly(E, 3), b = rng.poly(E, 3), c = rng.poly(E, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
    }
  }
}

TEST_CASE("right division: worked example and contracts") {
  GaloisExtension E = gf4();
  FieldElement w = E.generator();
  SkewPoly t2 = SkewPoly::t_power(E, 2);
  SkewPoly f = SkewPoly::from_coeffs(E, {-w, E.one()});  // t - w
  auto [q, r] = SkewPoly::right_divmod(t2, f);
  CHECK(q * f + r == t2);                                    // multiply-back oracle
  CHECK(q == SkewPoly::from_coeffs(E, {w * w, E.one()}));    // q = t + w^2
  CHECK(r == SkewPoly::one(E));                              // r = 1

  // g = f monic: (1, 0)
  SkewPoly monic = SkewPoly::from_coeffs(E, {w, w, E.one()});
  auto [q1, r1] = SkewPoly::right_divmod(monic, monic);
  CHECK(q1 == SkewPoly::one(E));
  CHECK(r1.is_zero());

  // deg g < deg f: (0, g)
  auto [q2, r2] = SkewPoly::right_divmod(f, monic);
  CHECK(q2.is_zero());
  CHECK(r2 == f);

  CHECK_THROWS_AS(SkewPoly::right_divmod(f, SkewPoly::zero(E)), InputError);
}

TEST_CASE("division round-trips and uniqueness (property)") {
  for (GaloisExtension E : {gf4(), gf8(), gf9()}) {
    Rng rng(E.size());
    for (int trial = 0; trial < 400; ++trial) {
      SkewPoly g = rng.poly(E, 5), f = rng.nonzero_poly(E, 3);
      auto [q, r] = SkewPoly::right_divmod(g, f);
      CHECK(q * f + r == g);
      if (!r.is_zero()) CHECK(*r.degree() < *f.degree());
      auto [lq, lr] = SkewPoly::left_divmod(g, f);
      CHECK(f * lq + lr == g);
      if (!lr.is_zero()) CHECK(*lr.degree() < *f.degree());
      // uniqueness: any distinct (q', r') with deg r' < deg f misses g
      SkewPoly rp = rng.poly(E, *f.degree() - 1);
      if (!(rp == r)) CHECK(!(q * f + rp == g));
      SkewPoly qp = q + SkewPoly::constant(rng.nonzero_element(E));
      CHECK(!(qp * f + r == g));
    }
  }
}

TEST_CASE("left division mirror cases") {
  GaloisExtension E = gf8();
  SkewPoly f = SkewPoly::from_coeffs(E, {E.generator(), E.zero(), E.one()});
  auto [q, r] = SkewPoly::left_divmod(f, f);
  CHECK(q == SkewPoly::one(E));
  CHECK(r.is_zero());
  SkewPoly low = SkewPoly::constant(E.generator());
  auto [q2, r2] = SkewPoly::left_divmod(low, f);
  CHECK(q2.is_zero());
  CHECK(r2 == low);
}

TEST_CASE("irreducibility by exhaustive right-factor search") {
  GaloisExtension E = gf4();
  FieldElement w = E.generator();
  // independent criterion: t^2 - a has a right root v iff sigma(v) v = a
  for (uint32_t a = 1; a < 4; ++a) {
    FieldElement av = E.from_code(a);
    bool has_root = false;
    for (uint32_t v = 0; v < 4; ++v) {
      FieldElement vv = E.from_code(v);
      if (E.sigma_pow(1, vv) * vv == av) has_root = true;
    }
    SkewPoly f = SkewPoly::from_coeffs(E, {-av, E.zero(), E.one()});
    CHECK(f.is_irreducible() == !has_root);
  }
  CHECK(SkewPoly::from_coeffs(E, {-w, E.zero(), E.one()}).is_irreducible());        // t^2-w
  CHECK_FALSE(SkewPoly::from_coeffs(E, {-E.one(), E.zero(), E.one()}).is_irreducible());  // t^2-1
  CHECK(SkewPoly::from_coeffs(E, {w, E.one()}).is_irreducible());  // degree 1
}

TEST_CASE("irreducibility on the quadratic backend (degree 2)") {
  GaloisExtension K =
      GaloisExtension::make_quadratic_extension(BaseField::gaussian_rationals, Gaussian(Rational(-3)));
  // t^2 - sqrt(b): constant term outside F, no right root
  CHECK(SkewPoly::from_coeffs(K, {-K.sqrt_b(), K.zero(), K.one()}).is_irreducible());
  // degree 3 is not decided
  CHECK_THROWS_AS(SkewPoly::t_power(K, 3).is_irreducible(), UnsupportedError);
  // t^2 - 2 with 2 in F reduces to a norm equation: reported unsupported
  CHECK_THROWS_AS(
      SkewPoly::from_coeffs(K, {K.from_integer(-2), K.zero(), K.one()}).is_irreducible(),
      UnsupportedError);

  GaloisExtension R =
      GaloisExtension::make_quadratic_extension(BaseField::rationals, Gaussian(Rational(2)));
  // v = 1 + sqrt(2) solves sigma(v) v + v + a0 = 0 for a0 = -sigma(v)v - v = 1 - 1 - sqrt(2)
  FieldElement v = R.one() + R.sqrt_b();
  FieldElement a0 = -(R.sigma_pow(1, v) * v) - v;
  SkewPoly red = SkewPoly::from_coeffs(R, {a0, R.one(), R.one()});
  CHECK_FALSE(red.is_irreducible());
  // t^2 + t + 1 over Q(sqrt(2)): discriminant -3 is not a rational square
  SkewPoly irr = SkewPoly::from_coeffs(R, {R.one(), R.one(), R.one()});
  CHECK(irr.is_irreducible());
}

TEST_CASE("invariance: criterion vs definitional oracle") {
  GaloisExtension E4 = gf4(), E9 = gf9();
  FieldElement w = E4.generator();
  CHECK(SkewPoly::from_coeffs(E4, {-E4.one(), E4.zero(), E4.one()}).is_invariant());  // t^2-1
  CHECK_FALSE(SkewPoly::from_coeffs(E9, {-E9.one(), -E9.one(), E9.one()}).is_invariant());
  CHECK_FALSE(SkewPoly::from_coeffs(E4, {-w, E4.zero(), E4.one()}).is_invariant());
  CHECK(SkewPoly::from_coeffs(E4, {-E4.one(), E4.zero(), E4.one()}).is_invariant_oracle());
  CHECK_FALSE(SkewPoly::from_coeffs(E4, {-w, E4.zero(), E4.one()}).is_invariant_oracle());

  // exhaustive agreement on every monic f of degree 2 and 3
  for (GaloisExtension E : {gf4(), gf9()}) {
    for (int m : {2, 3}) {
      for (const auto& f : monic_family(E, m))
        CHECK(f.is_invariant() == f.is_invariant_oracle());
    }
  }
}
