#include "brjuno/lindstedt.hpp"

#include "brjuno/brjuno_real.hpp"
#include "brjuno/errors.hpp"

#include <algorithm>

namespace brjuno {

namespace mp = boost::multiprecision;

Real ComplexReal::abs() const { return mp::sqrt(re * re + im * im); }

namespace {

int working_bits(int bits) { return std::max(bits > 0 ? bits : current_bits(), 128); }

// fractional part of nu * rho, exact for rationals and surds
Real frac_multiple(int nu, const RealInput& rho, bool& integer) {
  integer = false;
  if (rho.is_exact()) {
    QuadraticSurd s = rho.exact() * Rational(nu);
    QuadraticSurd f = s - s.floor();
    integer = f.is_zero();
    return f.to_real();
  }
  Real t = rho.to_real() * nu;
  return t - mp::floor(t);
}

// slope of y against x by least squares
Real ls_slope(const std::vector<Real>& x, const std::vector<Real>& y) {
  Real mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= x.size();
  my /= y.size();
  Real sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

Real ln_size(const LindstedtSeries& s, int k) {
  if (s.kind == MapKind::SemiStandard) return mp::log(s.c[k].abs());
  Real m = 0;
  for (const auto& v : s.modes[k]) {
    Real a = v.abs();
    if (a > m) m = a;
  }
  return mp::log(m);
}

}  // namespace

SmallDivisor small_divisor(int nu, const RealInput& rho) {
  SmallDivisor d;
  d.nu = nu;
  Real f = frac_multiple(nu, rho, d.zero);
  Real s = mp::sin(real_pi() * f);
  d.value = d.zero ? Real(0) : Real(-4 * s * s);
  return d;
}

ComplexReal LindstedtSeries::mode(int k, int nu) const {
  if (kind == MapKind::SemiStandard) return nu == k ? c.at(k) : ComplexReal();
  if (k < 1 || k > order || nu < -k || nu > k) return ComplexReal();
  return modes[k][nu + k];
}

LindstedtSeries semi_standard_series(const RealInput& rho, int order, int bits) {
  if (order < 1) throw DomainError("semi_standard_series: order must be >= 1");
  PrecisionScope ps(working_bits(bits));
  LindstedtSeries s;
  s.kind = MapKind::SemiStandard;
  s.rho = rho;
  s.order = order;
  s.bits = current_bits();
  const Real two_pi = 2 * real_pi();
  // with U_n = 2 pi i c_n: gamma_n c_n = [w^(n-1)] w exp(2 pi i u) / (4 pi i) becomes U_n = E_(n-1) / (2 gamma_n),
  // E = exp(sum U_m w^m) by E_k = (1/k) sum m U_m E_(k-m); everything is real
  std::vector<Real> U(order + 1, Real(0)), E(order + 1, Real(0));
  E[0] = 1;
  s.c.assign(order + 1, ComplexReal());
  s.radius_estimates.assign(order + 1, Real(0));
  for (int n = 1; n <= order; ++n) {
    SmallDivisor g = small_divisor(n, rho);
    if (g.zero || g.value == 0) throw SmallDivisorZero(n, n);
    U[n] = E[n - 1] / (2 * g.value);
    Real acc = 0;
    for (int m = 1; m <= n; ++m) acc += m * U[m] * E[n - m];
    E[n] = acc / n;
    s.c[n] = ComplexReal(Real(0), -U[n] / two_pi);  // U/(2 pi i)
    s.radius_estimates[n] = mp::pow(mp::abs(s.c[n].im), Real(-1) / n);
  }
  return s;
}

LindstedtSeries standard_map_series(const RealInput& rho, int order, int bits) {
  if (order < 1) throw DomainError("standard_map_series: order must be >= 1");
  PrecisionScope ps(working_bits(bits));
  LindstedtSeries s;
  s.kind = MapKind::Standard;
  s.rho = rho;
  s.order = order;
  s.bits = current_bits();
  const Real pi = real_pi();
  const ComplexReal two_pi_i(Real(0), 2 * pi);
  // E^(j) = [K^j] exp(2 pi i u), E[j][nu + j] for |nu| <= j
  std::vector<std::vector<ComplexReal>> E(order + 1);
  E[0] = {ComplexReal(Real(1))};
  s.modes.assign(order + 1, {});
  s.radius_estimates.assign(order + 1, Real(0));
  std::vector<SmallDivisor> divisors(order + 1);
  for (int nu = 1; nu <= order; ++nu) divisors[nu] = small_divisor(nu, rho);
  auto E_at = [&](int j, int nu) { return (nu < -j || nu > j) ? ComplexReal() : E[j][nu + j]; };
  const Real inv_4pi = 1 / (4 * pi);
  for (int k = 1; k <= order; ++k) {
    // rhs_nu = (E^(k-1)_(nu-1) - conj(E^(k-1)_(-nu-1))) / (4 pi i)
    std::vector<ComplexReal> rhs(2 * k + 1);
    Real scale = 0;
    for (int nu = -k; nu <= k; ++nu) {
      ComplexReal d = E_at(k - 1, nu - 1) - E_at(k - 1, -nu - 1).conj();
      rhs[nu + k] = ComplexReal(d.im * inv_4pi, -d.re * inv_4pi);
      Real a = rhs[nu + k].abs();
      if (a > scale) scale = a;
    }
    s.modes[k].assign(2 * k + 1, ComplexReal());
    if (k % 2 == 0) {
      Real r0 = scale > 0 ? Real(rhs[k].abs() / scale) : Real(0);
      s.mode0_residuals.push_back(r0);
      if (r0 > mp::ldexp(Real(1), 40 - s.bits)) throw SolvabilityViolation("standard_map_series: mode-0 right-hand side does not vanish");
    }
    for (int nu = -k; nu <= k; ++nu) {
      if (nu == 0 || (nu - k) % 2 != 0) continue;
      const SmallDivisor& g = divisors[std::abs(nu)];
      if (g.zero || g.value == 0) throw SmallDivisorZero(k, std::abs(nu));
      s.modes[k][nu + k] = rhs[nu + k] / g.value;
    }
    // E^(k) = (1/k) sum_m m (2 pi i u^(m)) * E^(k-m)
    E[k].assign(2 * k + 1, ComplexReal());
    for (int m = 1; m <= k; ++m) {
      for (int a = -m; a <= m; ++a) {
        const ComplexReal& um = s.modes[m][a + m];
        if (um.re == 0 && um.im == 0) continue;
        ComplexReal w = two_pi_i * um * Real(m);
        int j = k - m;
        for (int b = -j; b <= j; ++b) E[k][a + b + k] += w * E[j][b + j];
      }
    }
    for (auto& v : E[k]) v = v / Real(k);
    s.radius_estimates[k] = mp::exp(-ln_size(s, k) / k);
  }
  return s;
}

ComplexReal standard_term(const LindstedtSeries& s, int k, const Real& phi) {
  if (s.kind != MapKind::Standard) throw DomainError("standard_term: not a standard-map series");
  if (k < 1 || k > s.order) throw DomainError("standard_term: order out of range");
  ComplexReal sum;
  Real two_pi = 2 * real_pi();
  for (int nu = -k; nu <= k; ++nu) {
    Real t = two_pi * nu * phi;
    sum += s.modes[k][nu + k] * ComplexReal(mp::cos(t), mp::sin(t));
  }
  return sum;
}

std::vector<Real> substitution_residuals(const LindstedtSeries& s) {
  if (s.kind != MapKind::SemiStandard) throw DomainError("substitution_residuals: semi-standard series only");
  PrecisionScope ps(s.bits);
  const int K = s.order;
  const Real pi = real_pi();
  // P = 2 pi i u truncated at w^K; exp(P) = sum_j P^j / j! (P has no constant term)
  std::vector<ComplexReal> P(K + 1), power(K + 1), expP(K + 1);
  for (int n = 1; n <= K; ++n) P[n] = ComplexReal(Real(0), 2 * pi) * s.c[n];
  expP[0] = ComplexReal(Real(1));
  power[0] = ComplexReal(Real(1));
  Real fact = 1;
  for (int j = 1; j <= K; ++j) {
    std::vector<ComplexReal> next(K + 1);
    for (int a = 0; a <= K; ++a)
      for (int b = 1; a + b <= K; ++b) next[a + b] += power[a] * P[b];
    power = std::move(next);
    fact *= j;
    for (int n = 0; n <= K; ++n) expP[n] += power[n] / fact;
  }
  std::vector<Real> out(K + 1, Real(0));
  const ComplexReal inv_4pi_i(Real(0), -1 / (4 * pi));
  for (int n = 1; n <= K; ++n) {
    ComplexReal lhs = s.c[n] * small_divisor(n, s.rho).value;
    ComplexReal rhs = inv_4pi_i * expP[n - 1];
    out[n] = (lhs - rhs).abs() / lhs.abs();
  }
  return out;
}

CriticalEstimate critical_constant_estimate(const LindstedtSeries& s) {
  if (s.order < 10) throw InsufficientDepth("critical_constant_estimate: order must be >= 10");
  PrecisionScope ps(s.bits);
  CriticalEstimate est;
  int lo = s.order / 2 + 1, hi = s.order;
  est.window_lo = lo;
  est.window_hi = hi;
  auto fit = [&](int a, int b) {
    std::vector<Real> x, y;
    for (int n = a; n <= b; ++n) {
      x.push_back(Real(n));
      y.push_back(ln_size(s, n));
    }
    return ls_slope(x, y);
  };
  Real slope = fit(lo, hi);
  int mid = (lo + hi) / 2;
  est.slope_first = fit(lo, mid);
  est.slope_second = fit(mid + 1, hi);
  if (!mp::isfinite(slope) || mp::abs(est.slope_first - est.slope_second) > 2)
    throw Unstable("critical_constant_estimate: root-test slope not settled over the window");
  est.ln_inv_k = slope;
  est.k_hat = mp::exp(-slope);
  est.two_B = 2 * brjuno_B(s.rho, 200).value;
  est.delta = est.ln_inv_k - est.two_B;
  return est;
}

CriticalEstimate critical_constant(const RealInput& rho, MapKind kind, int order, int bits) {
  if (rho.is_rational()) {
    CriticalEstimate est;
    est.rational = true;
    est.k_hat = 0;
    est.ln_inv_k = std::numeric_limits<double>::infinity();
    est.two_B = std::numeric_limits<double>::infinity();
    est.delta = std::numeric_limits<double>::quiet_NaN();
    return est;
  }
  LindstedtSeries s = kind == MapKind::SemiStandard ? semi_standard_series(rho, order, bits) : standard_map_series(rho, order, bits);
  return critical_constant_estimate(s);
}

}  // namespace brjuno
