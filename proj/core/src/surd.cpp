#include "brjuno/surd.hpp"

#include "brjuno/errors.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <sstream>

namespace brjuno {

namespace mp = boost::multiprecision;

std::pair<BigInt, BigInt> square_free_split(const BigInt& n) {
  if (n < 0) throw DomainError("square_free_split: negative radicand");
  if (n < 2) return {1, n};
  BigInt rest = n, s = 1;
  for (unsigned p = 2; p < 1000000u && BigInt(p) * p <= rest; ++p) {
    BigInt pp = BigInt(p) * p;
    while (rest % pp == 0) {
      rest /= pp;
      s *= p;
    }
  }
  BigInt r = mp::sqrt(rest);
  if (r * r == rest) return {s * r, 1};
  return {s, rest};
}

QuadraticSurd::QuadraticSurd(BigInt a, BigInt b, BigInt d, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
  if (c_ == 0) throw DomainError("QuadraticSurd: zero denominator");
  if (d_ < 0) throw DomainError("QuadraticSurd: negative radicand");
  if (b_ != 0 && d_ > 1) {
    auto [s, f] = square_free_split(d_);
    b_ *= s;
    d_ = f;
  }
  normalize();
}

QuadraticSurd::QuadraticSurd(const Rational& r)
    : QuadraticSurd(mp::numerator(r), 0, 0, mp::denominator(r)) {}

void QuadraticSurd::normalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (d_ == 0) b_ = 0;
  if (b_ == 0) d_ = 0;
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  BigInt g = mp::gcd(mp::gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

Rational QuadraticSurd::to_rational() const {
  if (!is_rational()) throw DomainError("QuadraticSurd: value is irrational");
  return Rational(a_, c_);
}

int QuadraticSurd::sign() const {
  if (b_ == 0) return a_.sign();
  int sa = a_.sign(), sb = b_.sign();
  if (sa >= 0 && sb > 0) return 1;
  if (sa <= 0 && sb < 0) return -1;
  BigInt lhs = a_ * a_, rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

BigInt QuadraticSurd::floor() const {
  BigInt m = a_;
  if (b_ != 0) {
    BigInt r = mp::sqrt(BigInt(b_ * b_ * d_));  // floor(|b| sqrt d); never exact since d is not a square
    m += b_ > 0 ? r : BigInt(-r - 1);
  }
  // floor((m + frac)/c) == floor(m/c) when 0 <= frac < 1 and c > 0
  BigInt q = m / c_;
  if (m % c_ != 0 && m < 0) q -= 1;
  return q;
}

Real QuadraticSurd::to_real() const {
  if (b_ == 0) return big_to_real(a_) / big_to_real(c_);
  Real root = mp::sqrt(big_to_real(d_));
  if (a_.sign() * b_.sign() < 0) {
    // a and b*sqrt(d) nearly cancel; use (a^2 - b^2 d) / (a - b sqrt d)
    Real num = big_to_real(BigInt(a_ * a_ - b_ * b_ * d_));
    return num / (big_to_real(c_) * (big_to_real(a_) - big_to_real(b_) * root));
  }
  return (big_to_real(a_) + big_to_real(b_) * root) / big_to_real(c_);
}

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(-a_, -b_, d_, c_); }

QuadraticSurd QuadraticSurd::operator+(const Rational& r) const {
  const BigInt& u = mp::numerator(r);
  const BigInt& v = mp::denominator(r);
  return QuadraticSurd(a_ * v + u * c_, b_ * v, d_, c_ * v);
}

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
  if (o.b_ == 0) return *this + Rational(o.a_, o.c_);
  if (b_ == 0) return o + Rational(a_, c_);
  if (d_ != o.d_) throw DomainError("QuadraticSurd: mixing different quadratic fields");
  return QuadraticSurd(a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, d_, c_ * o.c_);
}

QuadraticSurd QuadraticSurd::operator*(const Rational& r) const {
  return QuadraticSurd(a_ * mp::numerator(r), b_ * mp::numerator(r), d_, c_ * mp::denominator(r));
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
  if (o.b_ == 0) return *this * Rational(o.a_, o.c_);
  if (b_ == 0) return o * Rational(a_, c_);
  if (d_ != o.d_) throw DomainError("QuadraticSurd: mixing different quadratic fields");
  return QuadraticSurd(a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_, c_ * o.c_);
}

QuadraticSurd QuadraticSurd::reciprocal() const {
  if (is_zero()) throw DomainError("QuadraticSurd: reciprocal of zero");
  BigInt den = a_ * a_ - b_ * b_ * d_;
  return QuadraticSurd(c_ * a_, -c_ * b_, d_, den);
}

bool QuadraticSurd::key_less(const QuadraticSurd& o) const {
  if (a_ != o.a_) return a_ < o.a_;
  if (b_ != o.b_) return b_ < o.b_;
  if (d_ != o.d_) return d_ < o.d_;
  return c_ < o.c_;
}

bool numeric_less(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }

std::string QuadraticSurd::str() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_;
    if (c_ != 1) os << '/' << c_;
    return os.str();
  }
  os << '(' << a_ << (b_ < 0 ? "-" : "+") << mp::abs(b_) << "*sqrt(" << d_ << "))/" << c_;
  return os.str();
}

}  // namespace brjuno
