#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "petit/field_tower.hpp"

using namespace petit;
using namespace petit::testing;

TEST_CASE("finite extension construction") {
  GaloisExtension E = gf4();
  CHECK(E.size() == 4);
  CHECK(E.subfield_size() == 2);
  CHECK(E.sigma_order() == 2);
  // modulus is the value-smallest irreducible x^2+x+1, so g^2 = g+1
  FieldElement g = E.generator();
  CHECK(g * g == g + E.one());
  CHECK(g.to_string() == "g");
  CHECK((g * g).to_string() == "g+1");

  GaloisExtension E8 = gf8();
  CHECK(E8.size() == 8);
  CHECK(E8.sigma_order() == 3);
  FieldElement h = E8.generator();
  CHECK(h.pow(3) == h + E8.one());  // x^3+x+1

  CHECK_THROWS_AS(GaloisExtension::make_finite_extension(4, 1, 2), InputError);
  CHECK_THROWS_AS(GaloisExtension::make_finite_extension(2, 1, 25), InputError);
  CHECK_THROWS_AS(GaloisExtension::make_finite_extension(2, 0, 2), InputError);
}

TEST_CASE("sigma is the Frobenius x -> x^(p^r) and a field automorphism") {
  for (GaloisExtension E : {gf4(), gf9(), gf8()}) {
    int64_t q = E.subfield_size();
    for (uint32_t c = 0; c < E.size(); ++c) {
      FieldElement x = E.from_code(c);
      CHECK(E.sigma_pow(1, x) == x.pow(q));
      CHECK(E.sigma_pow(E.sigma_order(), x) == x);
    }
    // sigma^j != id for 0 < j < n, tested on the generating element
    for (int j = 1; j < E.sigma_order(); ++j)
      CHECK(E.sigma_pow(j, E.generator()) != E.generator());
    // additivity and multiplicativity on all pairs
    for (uint32_t a = 0; a < E.size(); ++a)
      for (uint32_t b = 0; b < E.size(); ++b) {
        FieldElement x = E.from_code(a), y = E.from_code(b);
        CHECK(E.sigma_pow(1, x + y) == E.sigma_pow(1, x) + E.sigma_pow(1, y));
        CHECK(E.sigma_pow(1, x * y) == E.sigma_pow(1, x) * E.sigma_pow(1, y));
      }
  }
}

TEST_CASE("norm: orbit product, multiplicative, lands in F") {
  for (GaloisExtension E : {gf4(), gf9(), gf8()}) {
    for (uint32_t c = 0; c < E.size(); ++c) {
      FieldElement x = E.from_code(c);
      // independent orbit-product oracle
      FieldElement prod = E.one();
      for (int l = 0; l < E.sigma_order(); ++l) prod = prod * E.sigma_pow(l, x);
      CHECK(E.norm(x) == prod);
      CHECK(E.in_fixed_field(E.norm(x), 1));
    }
    for (int trial = 0; trial < 50; ++trial) {
      Rng rng(1000 + trial);
      FieldElement x = rng.element(E), y = rng.element(E);
      CHECK(E.norm(x * y) == E.norm(x) * E.norm(y));
    }
  }
  GaloisExtension E = gf4();
  FieldElement w = E.generator();
  CHECK(E.norm(w) == E.one());  // w * w^2 = w^3 = 1
  CHECK(E.norm(E.one()) == E.one());
}

TEST_CASE("kernel of norm: exhaustive oracle and surjectivity count") {
  struct Case {
    GaloisExtension E;
    size_t expected;
  };
  for (auto [E, expected] : {Case{gf4(), 3}, Case{gf9(), 4}, Case{gf8(), 7}}) {
    auto ker = E.kernel_of_norm();
    CHECK(ker.size() == expected);
    // independent exhaustive check via the orbit product
    size_t count = 0;
    for (uint32_t c = 1; c < E.size(); ++c) {
      FieldElement prod = E.one(), x = E.from_code(c);
      for (int l = 0; l < E.sigma_order(); ++l) prod = prod * E.sigma_pow(l, x);
      if (prod.is_one()) ++count;
    }
    CHECK(count == expected);
    // |ker| * |F^x| = |K^x|
    CHECK(ker.size() * (E.subfield_size() - 1) == E.size() - 1);
    // GF(4): kernel is {1, g, g^2}
    if (E.size() == 4) {
      CHECK(ker[0].is_one());
      CHECK(ker[1] == E.generator());
      CHECK(ker[2] == E.generator() * E.generator());
    }
  }
  CHECK_THROWS_AS(GaloisExtension::make_quadratic_extension(BaseField::rationals, Gaussian(Rational(2)))
                      .kernel_of_norm(),
                  UnsupportedError);
}

TEST_CASE("Hilbert 90 on finite backends: every kernel element is a twisted quotient") {
  for (GaloisExtension E : {gf4(), gf9(), gf8()}) {
    for (const auto& k : E.kernel_of_norm()) {
      FieldElement c = E.solve_hilbert90(k);
      CHECK(!c.is_zero());
      CHECK(c.inverse() * E.sigma_pow(1, c) == k);
    }
    CHECK(E.solve_hilbert90(E.one()).inverse() * E.sigma_pow(1, E.solve_hilbert90(E.one())) ==
          E.one());
    CHECK_THROWS_AS(E.solve_hilbert90(E.zero()), InputError);
  }
  // an element of nontrivial norm violates the precondition
  GaloisExtension E9 = gf9();
  for (uint32_t c = 1; c < E9.size(); ++c) {
    if (E9.norm(E9.from_code(c)).is_one()) continue;
    CHECK_THROWS_AS(E9.solve_hilbert90(E9.from_code(c)), InputError);
    break;
  }
}

TEST_CASE("roots of unity in F") {
  GaloisExtension E9 = gf9();
  auto roots = E9.roots_of_unity_in_F(2);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value.is_one());
  CHECK_FALSE(roots[0].primitive);
  CHECK(roots[1].value == E9.from_integer(2));
  CHECK(roots[1].primitive);

  // s = 1 only picks up the identity
  auto trivial = E9.roots_of_unity_in_F(1);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].value.is_one());

  GaloisExtension Qi =
      GaloisExtension::make_quadratic_extension(BaseField::gaussian_rationals, Gaussian(Rational(-3)));
  auto r4 = Qi.roots_of_unity_in_F(4);
  REQUIRE(r4.size() == 4);
  std::set<std::string> names;
  for (const auto& r : r4) {
    names.insert(r.value.to_string());
    CHECK(r.value.pow(4).is_one());
  }
  CHECK(names == std::set<std::string>{"1", "-1", "i", "-i"});
}

TEST_CASE("quadratic backend: conjugation, norm, Hilbert 90, exactness") {
  GaloisExtension K =
      GaloisExtension::make_quadratic_extension(BaseField::gaussian_rationals, Gaussian(Rational(-3)));
  FieldElement s = K.sqrt_b();
  FieldElement x = K.one() + s;  // 1 + sqrt(-3)
  CHECK(K.sigma_pow(1, x) == K.one() - s);
  CHECK(K.sigma_pow(2, x) == x);
  CHECK(x.to_string() == "1+sqrt(b)");

  // norm(i) = i * sigma(i) = i^2 = -1
  FieldElement iu = K.from_base(Gaussian(Rational(0), Rational(1)));
  CHECK(K.norm(iu) == K.from_integer(-1));

  // sigma(sqrt(b)) / sqrt(b) = -1, so Hilbert 90 for k = -1 returns sqrt(b)
  FieldElement c = K.solve_hilbert90(K.from_integer(-1));
  CHECK(c == s);

  // k = 1 gives c with sigma(c) = c
  FieldElement c1 = K.solve_hilbert90(K.one());
  CHECK(K.sigma_pow(1, c1) == c1);

  // exact arithmetic: (1 + 2 sqrt(-1/12))^6 = -64/27 with zero error
  GaloisExtension K2 = GaloisExtension::make_quadratic_extension(BaseField::gaussian_rationals,
                                                                 Gaussian(Rational(-1, 12)));
  FieldElement c2 = K2.one() + K2.from_integer(2) * K2.sqrt_b();
  CHECK(c2.pow(6) == K2.from_base(Gaussian(Rational(-64, 27))));

  CHECK_THROWS_AS(
      GaloisExtension::make_quadratic_extension(BaseField::rationals, Gaussian(Rational(4))),
      InputError);
  CHECK_THROWS_AS(GaloisExtension::make_quadratic_extension(BaseField::gaussian_rationals,
                                                            Gaussian(Rational(-1))),
                  InputError);  // -1 = i^2 is a square in Q(i)
}

TEST_CASE("in_fixed_field") {
  GaloisExtension E = gf4();
  CHECK_FALSE(E.in_fixed_field(E.generator(), 1));
  CHECK(E.in_fixed_field(E.one(), 1));
  CHECK(E.in_fixed_field(E.zero(), 1));
  GaloisExtension E8 = gf8();
  for (uint32_t c = 0; c < 8; ++c) CHECK(E8.in_fixed_field(E8.from_code(c), 3));
  CHECK(E8.fixed_field_basis().size() == 1);
  CHECK(gf9().fixed_field_basis().size() == 1);
}
