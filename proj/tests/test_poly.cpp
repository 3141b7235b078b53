#include <doctest.h>

#include "helpers.hpp"

using namespace sally;
using testutil::poly_ring;
using testutil::random_poly;
using testutil::Rng;

TEST_CASE("field scalars stay canonical") {
  Field q = Field::rationals();
  Scalar half = Scalar::rational(2, 4);
  CHECK(half.rat().get_num() == 1);
  CHECK(half.rat().get_den() == 2);
  CHECK(half.add(half).is_one());
  CHECK(Scalar::rational(3, -6).rat().get_den() == 2);  // denominator kept positive
  CHECK(Scalar::rational(3, -6).sign() < 0);
  CHECK_THROWS_AS(Scalar::rational(1, 0), InputError);
  CHECK_THROWS_AS(Scalar::one(q).div(Scalar::zero(q)), InputError);

  Field f5 = Field::prime_field(5);
  Scalar three = Scalar::of(f5, 3);
  CHECK(three.mul(three.inv()).is_one());
  CHECK(Scalar::of(f5, -1).residue() == 4);
  CHECK_THROWS_AS(Field::prime_field(6), InputError);
  CHECK_THROWS_AS(Scalar::one(q).add(Scalar::one(f5)), InputError);
  CHECK(Field::parse("prime:32003").modulus() == 32003);
  CHECK_THROWS_AS(Field::parse("prime:abc"), InputError);
}

TEST_CASE("polynomial arithmetic examples") {
  auto R = poly_ring({"x", "y"});
  const MonomialOrder& ord = R.ring->default_order();

  CHECK(poly_add(ord, R("x + y"), R("x - y")) == R("2*x"));
  CHECK(poly_mul(ord, R("x + y"), R("x - y")) == R("x^2 - y^2"));

  // Over F_5: 3x * 4x = 12 x^2 = 2 x^2.
  auto F = RingPresentation::make(Field::prime_field(5), {"x"}, {});
  auto p = [&](const std::string& s) {
    return parse_polynomial(s, F->variables(), F->field(), F->default_order());
  };
  CHECK(poly_mul(F->default_order(), p("3*x"), p("4*x")) == p("2*x^2"));
}

TEST_CASE("leading terms under the pluggable orders") {
  auto R = poly_ring({"x", "y"});
  Polynomial f = R("x^2 + y^3");
  CHECK(leading_term(f, MonomialOrder::grevlex()).first == R("y^3").leading().mono);
  CHECK(leading_term(f, MonomialOrder::lex()).first == R("x^2").leading().mono);

  Polynomial g = R("x^2*y + x*y^2");
  CHECK(leading_term(g, MonomialOrder::grevlex()).first == R("x^2*y").leading().mono);

  CHECK_THROWS_AS(leading_term(Polynomial::zero(), MonomialOrder::grevlex()), InputError);
  CHECK_THROWS_AS(Polynomial::zero().leading(), InputError);
}

TEST_CASE("ring axioms hold on random polynomials") {
  auto R = poly_ring({"x", "y", "z"});
  const MonomialOrder& ord = R.ring->default_order();
  Rng rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial f = random_poly(rng, R.ring, 5, 3);
    Polynomial g = random_poly(rng, R.ring, 5, 3);
    Polynomial h = random_poly(rng, R.ring, 5, 3);
    CHECK(poly_add(ord, poly_add(ord, f, g), h) == poly_add(ord, f, poly_add(ord, g, h)));
    CHECK(poly_add(ord, f, g) == poly_add(ord, g, f));
    CHECK(poly_mul(ord, f, g) == poly_mul(ord, g, f));
    CHECK(poly_mul(ord, poly_mul(ord, f, g), h) == poly_mul(ord, f, poly_mul(ord, g, h)));
    CHECK(poly_mul(ord, f, poly_add(ord, g, h)) ==
          poly_add(ord, poly_mul(ord, f, g), poly_mul(ord, f, h)));
    CHECK(poly_sub(ord, f, f).is_zero());
  }
}

TEST_CASE("leading term is multiplicative over a domain") {
  auto R = poly_ring({"x", "y", "z"});
  Rng rng(7);
  for (const MonomialOrder& ord :
       {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination_block(1)}) {
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = random_poly(rng, R.ring, 4, 3);
      Polynomial g = random_poly(rng, R.ring, 4, 3);
      if (f.is_zero() || g.is_zero()) continue;
      auto [fm, fc] = leading_term(f, ord);
      auto [gm, gc] = leading_term(g, ord);
      auto [pm, pc] = leading_term(poly_mul(ord, f, g), ord);
      CHECK(pm == fm.times(gm));
      CHECK(pc == fc.mul(gc));
    }
  }
}

TEST_CASE("product degree adds for nonzero operands") {
  auto R = poly_ring({"x", "y"});
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f = random_poly(rng, R.ring, 4, 4);
    Polynomial g = random_poly(rng, R.ring, 4, 4);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(poly_mul(R.ring->default_order(), f, g).degree() == f.degree() + g.degree());
  }
}

TEST_CASE("parse, print, parse is the identity") {
  auto R = poly_ring({"x", "y", "z"});
  Rng rng(20240812);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial f = random_poly(rng, R.ring, 6, 4);
    CHECK(R(to_string(f, R.ring->variables())) == f);
  }
  CHECK(to_string(Polynomial::zero(), R.ring->variables()) == "0");
  CHECK(R("0").is_zero());
  CHECK(to_string(R("x - y"), R.ring->variables()) == "x - y");
  CHECK(to_string(R("-x + 3"), R.ring->variables()) == "-x + 3");
}

TEST_CASE("expression grammar corners") {
  auto R = poly_ring({"x", "y"});
  CHECK(R("x^2*y") == R("x*x*y"));
  CHECK(R("(x + y)^2") == R("x^2 + 2*x*y + y^2"));
  CHECK(R("2^3") == R("8"));

  CHECK_THROWS_AS(R("w"), ParseError);
  CHECK_THROWS_AS(R("x y"), ParseError);  // implicit multiplication
  CHECK_THROWS_AS(R("x +"), ParseError);
  CHECK_THROWS_AS(R("x ^ y"), ParseError);
  CHECK_THROWS_AS(R("(x"), ParseError);
  CHECK_THROWS_AS(R("x$"), ParseError);

  try {
    R("x * q");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
    CHECK(std::string(e.what()).find("unknown variable 'q'") != std::string::npos);
  }
}

TEST_CASE("integer printing clears denominators") {
  auto R = poly_ring({"x", "y"});
  Polynomial f = poly_scale(R("x + 2*y"), Scalar::rational(1, 3));
  CHECK(to_integer_string(f, R.ring->variables()) == "x + 2*y");
  Polynomial g = poly_scale(R("4*x + 2*y"), Scalar::rational(-1, 2));
  CHECK(to_integer_string(g, R.ring->variables()) == "2*x + y");
}

TEST_CASE("mixed-ring operands are rejected") {
  auto R2 = poly_ring({"x", "y"});
  auto R3 = poly_ring({"x", "y", "z"});
  CHECK_THROWS_AS(poly_add(MonomialOrder::grevlex(), R2("x"), R3("x")), InputError);
  CHECK_THROWS_AS(R2("x").leading().mono.times(R3("x").leading().mono), InputError);
}

TEST_CASE("monomial basics") {
  Monomial a = Monomial::variable(2, 0, 3);  // x^3
  Monomial b = Monomial::variable(2, 1, 2);  // y^2
  CHECK(a.degree() == 3);
  CHECK(Monomial::lcm(a, b).degree() == 5);
  CHECK(a.coprime(b));
  CHECK(a.times(b).degree() == 5);
  CHECK(a.divides(a.times(b)));
  CHECK(!a.times(b).divides(a));
  CHECK(a.times(b).divide_by(a) == b);
  CHECK_THROWS_AS(a.divide_by(b), InputError);
  CHECK_THROWS_AS(Monomial(Monomial::kMaxVars + 1), InputError);
  CHECK_THROWS_AS(Monomial::variable(2, 0, 300), ResourceError);

  // grevlex is a multiplicative order with 1 minimal.
  MonomialOrder g = MonomialOrder::grevlex();
  Monomial one(2);
  CHECK(g.less(one, a));
  CHECK(g.less(one, b));
  testutil::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Monomial u = testutil::random_monomial(rng, 2, 4);
    Monomial v = testutil::random_monomial(rng, 2, 4);
    Monomial w = testutil::random_monomial(rng, 2, 4);
    if (g.less(u, v)) CHECK(g.less(u.times(w), v.times(w)));
  }
}
