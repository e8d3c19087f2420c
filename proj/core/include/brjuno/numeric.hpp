#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

namespace brjuno {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr int kDefaultBits = 128;

inline unsigned bits_to_digits10(int bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120));
}

// Boost 1.74 keeps the mpfr default precision in a process-wide variable, so
// set it once before fanning work out to threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits) : saved_(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline int current_bits() {
  Real probe;
  return static_cast<int>(mpfr_get_prec(probe.backend().data()));
}


inline Real real_pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

inline Real ulp_of(const Real& x) {
  if (x == 0) return Real(0);
  int e = 0;
  boost::multiprecision::frexp(x, &e);
  return boost::multiprecision::ldexp(Real(1), e - current_bits());
}

BigInt floor_to_int(const Real& x);
Real big_to_real(const BigInt& v);

inline Real to_real(const BigInt& v) { return big_to_real(v); }
inline Real to_real(const Rational& v) {
  return big_to_real(boost::multiprecision::numerator(v)) / big_to_real(boost::multiprecision::denominator(v));
}

std::string format_real(const Real& x, int digits = 0);

}  // namespace brjuno
