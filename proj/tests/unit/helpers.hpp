#pragma once

#include "brjuno/input.hpp"
#include "brjuno/surd.hpp"

#include <random>

namespace testing_helpers {

using brjuno::BigInt;
using brjuno::QuadraticSurd;

// Fractional part of a random (a + b sqrt d)/c with small coefficients; always irrational.
inline QuadraticSurd random_surd(std::mt19937_64& rng) {
  static const int radicands[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 31, 33, 37};
  std::uniform_int_distribution<int> pick(0, 19), coef(-30, 30), den(1, 40), bdist(1, 9);
  int b = bdist(rng) * (rng() % 2 ? 1 : -1);
  QuadraticSurd s(coef(rng), b, radicands[pick(rng)], den(rng));
  return s - s.floor();
}

// Random irrational in (lo, hi) built the same way; lo, hi rational.
inline QuadraticSurd random_surd_in(std::mt19937_64& rng, const brjuno::Rational& lo, const brjuno::Rational& hi) {
  for (;;) {
    QuadraticSurd s = random_surd(rng);
    if (brjuno::numeric_less(QuadraticSurd(lo), s) && brjuno::numeric_less(s, QuadraticSurd(hi))) return s;
  }
}

}  // namespace testing_helpers
