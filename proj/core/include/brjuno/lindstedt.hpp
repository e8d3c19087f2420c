#pragma once

#include "brjuno/input.hpp"
#include "brjuno/numeric.hpp"

#include <vector>

namespace brjuno {

struct ComplexReal {
  Real re, im;
  ComplexReal() : re(0), im(0) {}
  ComplexReal(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}
  ComplexReal operator+(const ComplexReal& o) const { return {re + o.re, im + o.im}; }
  ComplexReal operator-(const ComplexReal& o) const { return {re - o.re, im - o.im}; }
  ComplexReal operator*(const ComplexReal& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  ComplexReal operator*(const Real& s) const { return {re * s, im * s}; }
  ComplexReal operator/(const Real& s) const { return {re / s, im / s}; }
  ComplexReal& operator+=(const ComplexReal& o) { re += o.re; im += o.im; return *this; }
  ComplexReal conj() const { return {re, -im}; }
  Real abs() const;
};

struct SmallDivisor {
  int nu = 0;
  Real value;  // 2 (cos(2 pi nu rho) - 1) = -4 sin^2(pi nu rho)
  bool zero = false;  // exact inputs only: nu rho is an integer
};

SmallDivisor small_divisor(int nu, const RealInput& rho);

enum class MapKind { SemiStandard, Standard };

struct LindstedtSeries {
  MapKind kind = MapKind::SemiStandard;
  RealInput rho;
  int order = 0;
  int bits = 0;
  // semi-standard: c[n], n = 0 .. order, u = sum c_n w^n, c[0] = 0
  std::vector<ComplexReal> c;
  // standard: modes[k][nu + k] = u^(k)_nu, k = 1 .. order (modes[0] unused)
  std::vector<std::vector<ComplexReal>> modes;
  // standard: |mode-0 right-hand side| relative to the largest mode, per even order
  std::vector<Real> mode0_residuals;
  // r_k = |c_k|^(-1/k), or with max_nu |u^(k)_nu| for the standard map; index 0 unused
  std::vector<Real> radius_estimates;

  ComplexReal mode(int k, int nu) const;
};

// Precision: max(bits, 128) where bits = 0 uses the current working precision.
LindstedtSeries semi_standard_series(const RealInput& rho, int order, int bits = 0);
LindstedtSeries standard_map_series(const RealInput& rho, int order, int bits = 0);

// u^(k)(phi) for the standard map, from the mode table.
ComplexReal standard_term(const LindstedtSeries& s, int k, const Real& phi);

// Per-order residual of the semi-standard conjugacy equation with the truncated series, using
// an exponential computed independently (powers of the polynomial), relative to |gamma_n c_n|.
std::vector<Real> substitution_residuals(const LindstedtSeries& s);

struct CriticalEstimate {
  Real k_hat;         // 0 for rational rho
  Real ln_inv_k;      // ln(1/k_hat)
  Real two_B;         // 2 B(rho), alpha = 1
  Real delta;         // ln(1/k_hat) - 2 B(rho)
  Real slope_first, slope_second;  // ln-radius fits on the two halves of the window
  int window_lo = 0, window_hi = 0;
  bool rational = false;
};

// Least-squares slope of ln|c_n| against n over the last half of the orders; k_hat = e^(-slope).
// InsufficientDepth below order 10; Unstable when the fit is not finite or the slopes over the two
// halves of the window differ by more than 2 (the staircase at convergent denominators alone gives ~1).
CriticalEstimate critical_constant_estimate(const LindstedtSeries& s);
// Rational rho gives k_hat = 0 without building a series.
CriticalEstimate critical_constant(const RealInput& rho, MapKind kind, int order, int bits = 0);

}  // namespace brjuno
