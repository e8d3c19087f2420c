#include "brjuno/dilog.hpp"

#include "brjuno/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include <array>
#include <cmath>
#include <limits>

namespace brjuno {

namespace {

template <class T>
struct BernoulliTable {
  // B_{2k} / (2k+1)!, k = 1 .. K
  static constexpr int K = 22;
  std::array<T, K + 1> c{};
  BernoulliTable() {
    T fact = 1;  // (2k+1)!
    for (int k = 1; k <= K; ++k) {
      fact *= T(2 * k) * T(2 * k + 1);
      c[k] = boost::math::bernoulli_b2n<T>(k) / fact;
    }
  }
};

// Li2 by the Bernoulli series in u = -ln(1 - z); needs |u| well inside 2 pi.
template <class T>
std::complex<T> dilog_core(std::complex<T> z) {
  static const BernoulliTable<T> tab;
  std::complex<T> u = -std::log(T(1) - z);
  std::complex<T> u2 = u * u;
  std::complex<T> sum = u - u2 / T(4);
  std::complex<T> p = u * u2;
  const T eps = std::numeric_limits<T>::epsilon();
  for (int k = 1; k <= BernoulliTable<T>::K; ++k) {
    std::complex<T> term = tab.c[k] * p;
    sum += term;
    if (std::abs(term) <= eps * std::abs(sum)) break;
    p *= u2;
  }
  return sum;
}

template <class T>
std::complex<T> dilog_impl(std::complex<T> z) {
  const T pi2_6 = boost::math::constants::pi_sqr<T>() / 6;
  if (z.imag() == 0) {
    if (z.real() > 1) throw BranchCut("dilog: real argument on the cut (1, inf)");
    if (z.real() == 1) return {pi2_6, 0};
    if (z.real() == 0) return {0, 0};
  }
  if (std::norm(z) > 1) {
    // Li2(z) = -Li2(1/z) - pi^2/6 - ln^2(-z)/2
    std::complex<T> l = std::log(-z);
    return -dilog_impl(T(1) / z) - pi2_6 - l * l / T(2);
  }
  if (z.real() > T(0.5)) {
    // Li2(z) = -Li2(1 - z) + pi^2/6 - ln z ln(1 - z)
    return -dilog_core(T(1) - z) + pi2_6 - std::log(z) * std::log(T(1) - z);
  }
  return dilog_core(z);
}

}  // namespace

std::complex<double> dilog(std::complex<double> z) { return dilog_impl(z); }
std::complex<long double> dilog(std::complex<long double> z) { return dilog_impl(z); }

}  // namespace brjuno
