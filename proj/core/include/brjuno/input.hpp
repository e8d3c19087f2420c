#pragma once

#include "brjuno/numeric.hpp"
#include "brjuno/surd.hpp"

#include <string>
#include <variant>
#include <vector>

namespace brjuno {

struct FloatValue {
  Real value;
  int bits = kDefaultBits;
  Real error;  // absolute radius around value known to contain the true input
};

class RealInput {
 public:
  RealInput() : v_(Rational(0)) {}
  RealInput(const Rational& r) : v_(r) {}
  RealInput(const QuadraticSurd& s);
  RealInput(const FloatValue& f);

  static RealInput from_double(double x, int bits = 64);
  static RealInput from_decimal(const std::string& text, int bits);

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_surd() const { return std::holds_alternative<QuadraticSurd>(v_); }
  bool is_float() const { return std::holds_alternative<FloatValue>(v_); }
  bool is_exact() const { return !is_float(); }

  const Rational& rational() const { return std::get<Rational>(v_); }
  const QuadraticSurd& surd() const { return std::get<QuadraticSurd>(v_); }
  const FloatValue& flt() const { return std::get<FloatValue>(v_); }

  // Exact value as a surd (rationals embed with b = 0). Throws for floats.
  QuadraticSurd exact() const;
  Real to_real() const;
  int bits() const;
  std::string str() const;

  RealInput negated() const;
  RealInput reciprocal() const;
  RealInput plus(const BigInt& n) const;

 private:
  std::variant<Rational, QuadraticSurd, FloatValue> v_;
};

// "p/q", "n", "(a+b*sqrt(d))/c", "a+b*sqrt(d)", decimal with optional "@bits".
RealInput parse_number(const std::string& text, int default_bits = kDefaultBits);
Rational parse_rational(const std::string& text);

// Value of [a0; (eps_0, a_1), (eps_1, a_2), ...] folded back exactly.
// eps has one entry per coefficient; eps[i] is the sign in front of the tail after a[i].
Rational fold_coefficients(const std::vector<BigInt>& a, const std::vector<int>& eps);
Rational fold_coefficients(const std::vector<BigInt>& a);

// Golden mean (sqrt5 - 1)/2 and friends used throughout tests and the CLI.
QuadraticSurd golden_mean();
QuadraticSurd silver_mean();  // sqrt2 - 1
// Purely periodic [0; m, m, m, ...].
QuadraticSurd metallic(int m);
// [0; a, 1, 1, 1, ...].
QuadraticSurd noble(int a);
// [0; a_1, ..., a_k, then the periodic block repeated], Gauss expansion, exact.
QuadraticSurd surd_from_periodic(const std::vector<BigInt>& prefix, const std::vector<BigInt>& period);

}  // namespace brjuno
