#include "doctest.h"
#include "helpers.hpp"

#include "brjuno/errors.hpp"
#include "brjuno/input.hpp"
#include "brjuno/surd.hpp"

using namespace brjuno;

TEST_SUITE("surd") {
  TEST_CASE("canonical form") {
    QuadraticSurd s(2, 4, 8, -6);  // (2 + 4 sqrt 8)/(-6) = (-1 - 4 sqrt 2)/3
    CHECK(s.a() == -1);
    CHECK(s.b() == -4);
    CHECK(s.d() == 2);
    CHECK(s.c() == 3);

    QuadraticSurd r(3, 5, 0, 6);
    CHECK(r.is_rational());
    CHECK(r.d() == 0);
    CHECK(r.to_rational() == Rational(1, 2));

    QuadraticSurd folded(1, 2, 9, 1);  // 1 + 2*3
    CHECK(folded.is_rational());
    CHECK(folded.to_rational() == 7);
  }

  TEST_CASE("sign and floor agree with high precision values") {
    std::mt19937_64 rng(11);
    PrecisionScope ps(256);
    for (int i = 0; i < 500; ++i) {
      std::uniform_int_distribution<int> coef(-200, 200), den(1, 50), rad(2, 60);
      int b = coef(rng);
      if (b == 0) b = 3;
      QuadraticSurd s(coef(rng), b, rad(rng), den(rng) * (rng() % 2 ? 1 : -1));
      Real v = s.to_real();
      CHECK(s.sign() == (v > 0 ? 1 : -1));
      CHECK(s.floor() == floor_to_int(v));
    }
  }

  TEST_CASE("field arithmetic") {
    QuadraticSurd g = golden_mean();
    // 1/g = 1 + g
    CHECK(g.reciprocal() == g + BigInt(1));
    CHECK(g * g == QuadraticSurd(BigInt(1)) - g);
    CHECK((g - g).is_zero());
    CHECK_THROWS_AS(QuadraticSurd(0, 0, 0, 1).reciprocal(), DomainError);
    CHECK_THROWS_AS(golden_mean() + silver_mean() * golden_mean(), DomainError);
  }

  TEST_CASE("to_real survives cancellation") {
    PrecisionScope ps(128);
    // (a - b sqrt d) with a close to b sqrt d: 665857 - 470832 sqrt 2 ~ 7.5e-7
    QuadraticSurd s(665857, -470832, 2, 1);
    Real v = s.to_real();
    Real ref = Real(1) / (Real(665857) + Real(470832) * boost::multiprecision::sqrt(Real(2)));
    CHECK(boost::multiprecision::abs(v - ref) / ref < Real(1e-35));
  }

  TEST_CASE("parsing") {
    RealInput g = parse_number("(-1+1*sqrt(5))/2");
    REQUIRE(g.is_surd());
    CHECK(g.surd() == golden_mean());
    CHECK(parse_number("(\xE2\x88\x92" "1+1*sqrt(5))/2").surd() == golden_mean());
    CHECK(parse_number("sqrt(2)-1").is_float() == false);
    CHECK(parse_number("-1+sqrt(2)").surd() == silver_mean());
    CHECK(parse_number("7/10").rational() == Rational(7, 10));
    CHECK(parse_number("-3").rational() == -3);
    RealInput f = parse_number("0.7@96");
    REQUIRE(f.is_float());
    CHECK(f.flt().bits == 96);
    CHECK(f.flt().error > 0);
    CHECK_THROWS_AS(parse_number("0.7@32"), ParseError);
    CHECK_THROWS_AS(parse_number("abc"), ParseError);
    CHECK_THROWS_AS(parse_number("1/0"), ParseError);
  }

  TEST_CASE("named constructions") {
    CHECK(metallic(1) == golden_mean());
    CHECK(metallic(2) == silver_mean());
    CHECK(noble(1) == golden_mean());
    CHECK(surd_from_periodic({}, {BigInt(1)}) == golden_mean());
    CHECK(surd_from_periodic({BigInt(2)}, {BigInt(1)}) == noble(2));
    CHECK(fold_coefficients({BigInt(0), BigInt(1), BigInt(2), BigInt(3)}) == Rational(7, 10));
  }
}
