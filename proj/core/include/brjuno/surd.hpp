#pragma once

#include "brjuno/numeric.hpp"

#include <compare>
#include <string>

namespace brjuno {

// Exact (a + b*sqrt(d))/c. Rationals are stored with b = 0, d = 0.
class QuadraticSurd {
 public:
  QuadraticSurd() : a_(0), b_(0), d_(0), c_(1) {}
  QuadraticSurd(BigInt a, BigInt b, BigInt d, BigInt c);
  explicit QuadraticSurd(const BigInt& n) : QuadraticSurd(n, 0, 0, 1) {}
  explicit QuadraticSurd(const Rational& r);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& d() const { return d_; }
  const BigInt& c() const { return c_; }

  bool is_rational() const { return b_ == 0; }
  Rational to_rational() const;  // requires is_rational()

  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  BigInt floor() const;
  Real to_real() const;

  QuadraticSurd operator-() const;
  QuadraticSurd operator+(const Rational& r) const;
  QuadraticSurd operator-(const Rational& r) const { return *this + Rational(-r); }
  QuadraticSurd operator+(const BigInt& n) const { return *this + Rational(n); }
  QuadraticSurd operator-(const BigInt& n) const { return *this + Rational(-n); }
  QuadraticSurd operator+(const QuadraticSurd& o) const;
  QuadraticSurd operator-(const QuadraticSurd& o) const { return *this + (-o); }
  QuadraticSurd operator*(const Rational& r) const;
  QuadraticSurd operator*(const QuadraticSurd& o) const;
  QuadraticSurd reciprocal() const;
  QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }

  bool operator==(const QuadraticSurd& o) const = default;
  // Ordering of the canonical tuple, used for hashing and maps; not numeric order.
  bool key_less(const QuadraticSurd& o) const;

  std::string str() const;

 private:
  void normalize();
  BigInt a_, b_, d_, c_;
};

bool numeric_less(const QuadraticSurd& x, const QuadraticSurd& y);

// Largest square-free factorisation: n = s^2 * f, returns {s, f}.
std::pair<BigInt, BigInt> square_free_split(const BigInt& n);

struct SurdKeyLess {
  bool operator()(const QuadraticSurd& x, const QuadraticSurd& y) const { return x.key_less(y); }
};

}  // namespace brjuno
