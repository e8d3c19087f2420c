#include "brjuno/numeric.hpp"

#include <cstring>
#include <limits>

namespace brjuno {

namespace {
// mpfr_float defaults to 20 digits; start every program at kDefaultBits instead
const bool default_precision_set = [] {
  Real::default_precision(bits_to_digits10(kDefaultBits));
  return true;
}();
}  // namespace

std::string format_real(const Real& x, int digits) {
  if (digits <= 0) {
    long prec = mpfr_get_prec(x.backend().data());
    digits = static_cast<int>(std::ceil(prec * 0.30102999566398120)) + 1;
  }
  return x.str(digits, std::ios_base::scientific);
}

}  // namespace brjuno

namespace brjuno {

BigInt floor_to_int(const Real& x) {
  mpfr_srcptr p = x.backend().data();
  if (mpfr_fits_slong_p(p, MPFR_RNDD)) return BigInt(mpfr_get_si(p, MPFR_RNDD));
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, p, MPFR_RNDD);
  char* s = mpz_get_str(nullptr, 10, z);
  BigInt out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, std::strlen(s) + 1);
  mpz_clear(z);
  return out;
}

Real big_to_real(const BigInt& v) {
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
    return Real(static_cast<long>(v));
  Real r;
  mpfr_set_str(r.backend().data(), v.str().c_str(), 10, MPFR_RNDN);
  return r;
}

}  // namespace brjuno
